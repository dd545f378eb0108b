"""Exact graph zeta functions of Bartholdi type on digraphs with multi-arcs and loops."""

from .algebra import QQ, QQ_q, Matrix, RatFunc, TruncatedSeries, UniPoly, format_poly
from .digraph import (
    Digraph,
    Graph,
    PhiPartition,
    adjacency_matrix,
    arcs_between,
    backtrack_matrix,
    inverse_set,
    phi_partition,
    symmetric_digraph,
)
from .paths import (
    CycleClass,
    ResourceLimitError,
    cbc,
    circ_theta,
    cycle_classes,
    enumerate_closed_paths,
    euler_expression_truncated,
    exp_expression_truncated,
    fz_truncated_check,
    hashimoto_series,
    lyndon_words,
    n_m,
)
from .weights import (
    AdjacencyKind,
    Preset,
    PresetViolation,
    WeightScheme,
    check_adjacency_condition,
    edge_matrix,
    theta_eval,
)
from .zeta import (
    IharaData,
    ZetaReport,
    bass_ihara_classical,
    classical_closed_forms,
    f_pair,
    hashimoto_polynomial,
    ihara_data,
    ihara_polynomial,
    verify_main_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "QQ_q",
    "Matrix",
    "RatFunc",
    "TruncatedSeries",
    "UniPoly",
    "format_poly",
    "Digraph",
    "Graph",
    "PhiPartition",
    "adjacency_matrix",
    "arcs_between",
    "backtrack_matrix",
    "inverse_set",
    "phi_partition",
    "symmetric_digraph",
    "CycleClass",
    "ResourceLimitError",
    "cbc",
    "circ_theta",
    "cycle_classes",
    "enumerate_closed_paths",
    "euler_expression_truncated",
    "exp_expression_truncated",
    "fz_truncated_check",
    "hashimoto_series",
    "lyndon_words",
    "n_m",
    "AdjacencyKind",
    "Preset",
    "PresetViolation",
    "WeightScheme",
    "check_adjacency_condition",
    "edge_matrix",
    "theta_eval",
    "IharaData",
    "ZetaReport",
    "bass_ihara_classical",
    "classical_closed_forms",
    "f_pair",
    "hashimoto_polynomial",
    "ihara_data",
    "ihara_polynomial",
    "verify_main_theorem",
    "__version__",
]
