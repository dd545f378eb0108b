"""Exact scalar, polynomial, rational-function, matrix and series arithmetic."""

from .matrix import (
    Matrix,
    NotColumnConstantError,
    SingularMatrixError,
    column_constant_inverse,
    det_bareiss,
    det_over_field,
    inverse,
    is_column_constant,
    row_sum,
    schur_complement,
)
from .poly import PolynomialRing, UniPoly, format_poly, poly_gcd
from .ratfunc import QQ_q, RatFunc, RationalFunctionField, evaluate_q, rational_functions_in_t
from .rings import QQ, ZZ, Ring, format_rational, parse_rational
from .series import (
    SeriesDomainError,
    TruncatedSeries,
    series_exp,
    series_inverse,
    series_log,
    series_product,
)

__all__ = [
    "Matrix", "NotColumnConstantError", "SingularMatrixError", "column_constant_inverse",
    "det_bareiss", "det_over_field", "inverse", "is_column_constant", "row_sum",
    "schur_complement", "PolynomialRing", "UniPoly", "format_poly", "poly_gcd", "QQ_q",
    "RatFunc", "RationalFunctionField", "evaluate_q", "rational_functions_in_t", "QQ", "ZZ",
    "Ring", "format_rational", "parse_rational", "SeriesDomainError", "TruncatedSeries",
    "series_exp", "series_inverse", "series_log", "series_product",
]
