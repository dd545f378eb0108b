import random
from fractions import Fraction

import pytest

from graphzeta import (
    AdjacencyKind,
    Digraph,
    Preset,
    PresetViolation,
    WeightScheme,
    check_adjacency_condition,
    edge_matrix,
    theta_eval,
)
from graphzeta.algebra import QQ, QQ_q, Matrix, evaluate_q

from _instances import PRESETS, rand_digraph, rand_scheme, worked_example


def test_theta_on_worked_example_ihara():
    d = worked_example()
    s = WeightScheme.ihara(d)
    # loop a1 followed by loop a2: adjacent and inverse, 1 - 1
    assert theta_eval(d, s, 0, 1) == 0
    # a1 then a3 leaves v1: adjacent, not inverse
    assert theta_eval(d, s, 0, 2) == 1
    # a3 (v1->v2) then a4 (v2->v1) is a backtrack
    assert theta_eval(d, s, 2, 3) == 0
    # a5 (v2->v3) then a8 (v3->v1) is not a backtrack
    assert theta_eval(d, s, 4, 7) == 1
    # non-adjacent pair
    assert theta_eval(d, s, 2, 2) == 0


def test_theta_general_formula():
    d = worked_example()
    tau = [Fraction(k + 2) for k in range(8)]
    ups = [Fraction(1, k + 1) for k in range(8)]
    s = WeightScheme.general(tau, ups)
    assert theta_eval(d, s, 2, 3) == tau[3] - ups[3]
    assert theta_eval(d, s, 0, 0) == tau[0] - ups[0]
    assert theta_eval(d, s, 7, 2) == tau[2]


def test_edge_matrix_support_and_entries():
    rng = random.Random(11)
    for _ in range(20):
        d = rand_digraph(rng)
        s = rand_scheme(rng, d, "GENERAL")
        M = edge_matrix(d, s)
        for a in range(d.arc_count):
            for b in range(d.arc_count):
                assert M[a, b] == theta_eval(d, s, a, b)
                if d.head(a) != d.tail(b):
                    assert M[a, b] == 0


def test_edge_matrix_arc_count_mismatch():
    with pytest.raises(ValueError):
        edge_matrix(worked_example(), WeightScheme.general([1], [1]))


@pytest.mark.parametrize("preset", PRESETS)
def test_presets_validate(preset):
    rng = random.Random(2)
    d = rand_digraph(rng, min_arcs=1)
    s = rand_scheme(rng, d, preset)
    assert s.preset.value == preset
    assert s.arc_count == d.arc_count


def test_preset_violations():
    d = Digraph(1, ((0, 0),))
    with pytest.raises(PresetViolation):
        WeightScheme((2,), (1,), Preset.IHARA)
    with pytest.raises(PresetViolation):
        WeightScheme((1,), (1,), Preset.BOWEN_LANFORD)
    with pytest.raises(PresetViolation):
        WeightScheme((1,), (2,), Preset.MIZUNO_SATO)
    with pytest.raises(PresetViolation):
        WeightScheme((3,), (2,), Preset.SATO)
    with pytest.raises(PresetViolation):
        WeightScheme((1,), (1,), Preset.BARTHOLDI, QQ, Fraction(1, 2))
    assert WeightScheme.bartholdi(d, Fraction(1, 2)).upsilon == (Fraction(1, 2),)


def test_weights_reject_floats():
    with pytest.raises(TypeError):
        WeightScheme.general([0.5], [1])


def test_bartholdi_symbolic_and_at_q():
    d = worked_example()
    s = WeightScheme.bartholdi(d)
    assert s.is_symbolic and s.field == QQ_q
    assert s.describe() == "BARTHOLDI"
    r = s.at_q(Fraction(2, 3))
    assert r.field == QQ and r.q == Fraction(2, 3)
    assert r.upsilon == (Fraction(1, 3),) * 8
    assert r.describe() == "BARTHOLDI(q=2/3)"
    assert r == WeightScheme.bartholdi(d, Fraction(2, 3))
    with pytest.raises(ValueError):
        r.at_q(0)


def test_bartholdi_interpolates_presets():
    d = worked_example()
    s = WeightScheme.bartholdi(d)
    assert edge_matrix(d, s.at_q(0)) == edge_matrix(d, WeightScheme.ihara(d))
    assert edge_matrix(d, s.at_q(1)) == edge_matrix(d, WeightScheme.bowen_lanford(d))


def test_bartholdi_type_multiplies_upsilon():
    q = QQ_q.gen()
    s = WeightScheme.bartholdi_type([2, 3], [5, 7])
    assert s.upsilon == (5 * (1 - q), 7 * (1 - q))
    assert evaluate_q(s.upsilon[1], Fraction(1)) == 0


def test_adjacency_condition_kinds():
    d = worked_example()
    # backtracks keep weight tau when upsilon = 0
    assert check_adjacency_condition(d, edge_matrix(d, WeightScheme.bowen_lanford(d))) \
        is AdjacencyKind.ADJACENCY
    # tau = upsilon cancels every backtrack: the reduced condition holds
    tau = [Fraction(k + 1) for k in range(8)]
    assert check_adjacency_condition(d, edge_matrix(d, WeightScheme.mizuno_sato(d, tau))) \
        is AdjacencyKind.REDUCED_ADJACENCY
    assert check_adjacency_condition(d, edge_matrix(d, WeightScheme.sato(d, [2] * 8))) \
        is AdjacencyKind.ADJACENCY
    rows = edge_matrix(d, WeightScheme.ihara(d)).to_rows()
    rows[2][2] = 1  # a3 cannot follow itself
    assert check_adjacency_condition(d, Matrix.from_rows(QQ, rows)) is AdjacencyKind.NEITHER
