import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphzeta.algebra import (
    QQ,
    QQ_q,
    ZZ,
    Matrix,
    NotColumnConstantError,
    PolynomialRing,
    SeriesDomainError,
    SingularMatrixError,
    TruncatedSeries,
    UniPoly,
    column_constant_inverse,
    det_bareiss,
    det_over_field,
    evaluate_q,
    format_poly,
    inverse,
    parse_rational,
    poly_gcd,
    rational_functions_in_t,
    row_sum,
    schur_complement,
    series_exp,
    series_inverse,
    series_log,
    series_product,
)

from _instances import cofactor_det, mat_power_trace, rand_matrix, rand_rational

Qt = rational_functions_in_t(QQ)


def P(*cs):
    return UniPoly(QQ, cs)


# -- rationals ----------------------------------------------------------------

def test_parse_rational_exact():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational(" -4 ") == -4
    assert QQ.format(Fraction(-6, 4)) == "-3/2"


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "", "1/-2", "half"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_floats_never_coerce():
    with pytest.raises(TypeError):
        QQ.coerce(0.5)


# -- polynomials ---------------------------------------------------------------

def test_gcd_examples():
    assert poly_gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)
    assert poly_gcd(P(0, 1), P(1)) == P(1)
    # t^3 - t and t^2 - 2t + 1 share exactly t - 1
    assert poly_gcd(P(0, -1, 0, 1), P(1, -2, 1)) == P(-1, 1)
    assert poly_gcd(P(), P()).is_zero()


def test_gcd_is_monic():
    g = poly_gcd(P(0, 4, 4), P(0, 6))
    assert g == P(0, 1)


def test_poly_divmod_roundtrip():
    a, b = P(3, 0, -2, 5, 1), P(1, 2)
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_format_poly():
    assert format_poly(P(1, 0, -2, 0, 1)) == "1 - 2*t^2 + t^4"
    assert format_poly(P()) == "0"
    assert format_poly(P(Fraction(1, 3), -1)) == "1/3 - t"
    qpoly = UniPoly(QQ_q, [1, 1 - QQ_q.gen()])
    assert format_poly(qpoly) == "1 + (1 - q)*t"


# -- rational functions ---------------------------------------------------------

polys = st.lists(st.integers(-4, 4), min_size=1, max_size=4).map(lambda cs: P(*cs))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys, polys, nonzero_polys)
def test_ratfunc_normal_form(a, b, c, d):
    x = Qt.fraction(a, b)
    y = Qt.fraction(c, d)
    for r in (x + y, x - y, x * y):
        assert Qt.base.is_one(r.den.lc)
        assert poly_gcd(r.num, r.den).degree <= 0
    if not x.is_zero():
        assert x * (Qt.one / x) == Qt.one


def test_ratfunc_zero_is_zero_over_one():
    z = Qt.fraction(P(), P(3, 1))
    assert z.num.is_zero() and z.den == P(1)


def test_ratfunc_lower_tower_operands():
    q = QQ_q.gen()
    Qqt = rational_functions_in_t(QQ_q)
    t = Qqt.gen()
    r = (Qqt.one - q * t) / (Qqt.one - q * q * t * t) * (Qqt.one + q * t)
    assert r == Qqt.one


# -- determinants ---------------------------------------------------------------

def test_det_small():
    assert det_over_field(Matrix.from_rows(QQ, [[1, 2], [3, 4]])) == -2
    assert det_over_field(Matrix.identity(QQ, 5)) == 1
    assert det_bareiss(Matrix.from_rows(ZZ, [[2, 0], [0, 3]])) == 6


def test_det_non_square():
    with pytest.raises(ValueError):
        det_over_field(Matrix.zeros(QQ, 2, 3))
    with pytest.raises(ValueError):
        det_bareiss(Matrix.zeros(ZZ, 3, 2))


def test_bareiss_polynomial_2x2():
    R = PolynomialRing(QQ, "t")
    t = R.gen()
    m = Matrix.from_rows(R, [[t, R.one], [R.one, t]])
    assert det_bareiss(m) == P(-1, 0, 1)


@pytest.mark.parametrize("seed", range(5))
def test_det_matches_cofactor_oracle(seed):
    rng = random.Random(seed)
    m = rand_matrix(rng, 6)
    assert det_over_field(m) == cofactor_det(m.to_rows())


@pytest.mark.parametrize("seed", range(3))
def test_bareiss_matches_field_elimination(seed):
    rng = random.Random(100 + seed)
    R = PolynomialRing(QQ, "t")
    rows = [[P(*(rand_rational(rng) for _ in range(3))) for _ in range(5)] for _ in range(5)]
    poly_det = det_bareiss(Matrix.from_rows(R, rows))
    field_det = det_over_field(Matrix.from_rows(Qt, [[Qt.coerce(x) for x in r] for r in rows]))
    assert Qt.coerce(poly_det) == field_det


def test_inverse_and_singular():
    rng = random.Random(4)
    m = rand_matrix(rng, 4)
    assert m @ inverse(m) == Matrix.identity(QQ, 4)
    with pytest.raises(SingularMatrixError):
        inverse(Matrix.from_rows(QQ, [[1, 2], [2, 4]]))


# -- series -----------------------------------------------------------------------

def test_series_exp_of_cycle_log():
    # sum N_m t^m / m with N_3 = N_6 = 3: log of 1/(1 - t^3)
    f = TruncatedSeries(QQ, [0, 0, 0, 1, 0, 0, Fraction(1, 2)], 6)
    assert series_exp(f).coeffs == (1, 0, 0, 1, 0, 0, 1)


def test_series_log_one_and_geometric_inverse():
    assert series_log(TruncatedSeries.one(QQ, 5)) == TruncatedSeries(QQ, [], 5)
    inv = series_inverse(TruncatedSeries(QQ, [1, -1], 4))
    assert inv.coeffs == (1, 1, 1, 1, 1)


def test_series_domain_errors():
    with pytest.raises(SeriesDomainError):
        series_exp(TruncatedSeries(QQ, [1, 1], 3))
    with pytest.raises(SeriesDomainError):
        series_log(TruncatedSeries(QQ, [2], 3))
    with pytest.raises(SeriesDomainError):
        series_inverse(TruncatedSeries(QQ, [0, 1], 3))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=1, max_size=7))
def test_exp_log_roundtrip(tail):
    T = 7
    f = TruncatedSeries(QQ, [1] + tail, T)
    assert series_exp(series_log(f)) == f
    assert series_product(f, series_inverse(f)) == TruncatedSeries.one(QQ, T)


@pytest.mark.parametrize("seed", range(4))
def test_log_inverse_det_is_trace_powers(seed):
    rng = random.Random(seed)
    m = rand_matrix(rng, 3)
    T = 6
    R = PolynomialRing(QQ, "t")
    t = R.gen()
    det = det_bareiss(Matrix.from_function(R, 3, 3,
                                           lambda i, j: (R.one if i == j else R.zero) - t * m[i, j]))
    lhs = series_log(series_inverse(TruncatedSeries.from_poly(det, T)))
    rhs = [Fraction(0)] + [mat_power_trace(m, k) / k for k in range(1, T + 1)]
    assert lhs == TruncatedSeries(QQ, rhs, T)


# -- column constant matrices and Schur complements --------------------------------

def test_row_sum_examples():
    assert row_sum(Matrix.from_rows(QQ, [[1, 2], [1, 2]])) == 3
    assert row_sum(Matrix.zeros(QQ, 3)) == 0
    h, th = Fraction(1, 2), Fraction(1, 3)
    assert row_sum(Matrix.from_rows(QQ, [[h, th], [h, th]])) == Fraction(5, 6)
    with pytest.raises(NotColumnConstantError):
        row_sum(Matrix.from_rows(QQ, [[1, 2], [2, 1]]))


def test_column_constant_inverse_examples():
    t = Qt.gen()
    inv = column_constant_inverse(Matrix.from_rows(QQ, [[1]]), Qt)
    assert inv[0, 0] == Qt.one / (Qt.one + t)
    assert column_constant_inverse(Matrix.zeros(QQ, 2), Qt) == Matrix.identity(Qt, 2)
    ones = Matrix.from_rows(QQ, [[1, 1], [1, 1]])
    inv = column_constant_inverse(ones, Qt)
    s = Qt.one / (Qt.one + 2 * t)
    assert inv == Matrix.from_rows(Qt, [[(1 + t) * s, -t * s], [-t * s, (1 + t) * s]])


def test_schur_examples():
    rng = random.Random(9)
    B, C = rand_matrix(rng, 2, 3), rand_matrix(rng, 3, 2)
    I2, I3 = Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)
    m = Matrix.block([[I2, B], [C, I3]])
    assert schur_complement(m, 2, "A") == I3 - C @ B
    m0 = Matrix.block([[I2, Matrix.zeros(QQ, 2, 3)], [C, I3 * 5]])
    assert schur_complement(m0, 2, "A") == I3 * 5
    with pytest.raises(SingularMatrixError):
        schur_complement(Matrix.block([[Matrix.zeros(QQ, 2), B], [C, I3]]), 2, "A")
    with pytest.raises(ValueError):
        schur_complement(m, 2, "X")


def test_map_coeffs_trims_vanishing_leading_term():
    p = UniPoly(QQ_q, [1, 1 - QQ_q.gen()])
    r = p.map_coeffs(lambda c: evaluate_q(c, 1), QQ)
    assert r == P(1) and r.degree == 0
