"""Seeded random instances and small independent oracles shared by the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from graphzeta import Digraph, WeightScheme
from graphzeta.algebra import QQ, Matrix, UniPoly

PRESETS = ("IHARA", "BOWEN_LANFORD", "MIZUNO_SATO", "SATO", "GENERAL", "BARTHOLDI")
WORKED_ARCS = ((0, 0), (0, 0), (0, 1), (1, 0), (1, 2), (1, 2), (2, 1), (2, 0))


def worked_example() -> Digraph:
    return Digraph(3, WORKED_ARCS, ("v1", "v2", "v3"))


def rand_rational(rng: random.Random, lo=-5, hi=5, den=5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def rand_nonzero(rng: random.Random) -> Fraction:
    x = Fraction(0)
    while x == 0:
        x = rand_rational(rng)
    return x


def rand_digraph(rng: random.Random, max_vertices=4, max_arcs=8, min_arcs=0) -> Digraph:
    n = rng.randint(1, max_vertices)
    m = rng.randint(min_arcs, max_arcs)
    return Digraph(n, tuple((rng.randrange(n), rng.randrange(n)) for _ in range(m)))


def rand_scheme(rng: random.Random, d: Digraph, preset: str, q=Fraction(2, 3)) -> WeightScheme:
    m = d.arc_count
    tau = [rand_rational(rng) for _ in range(m)]
    if preset == "IHARA":
        return WeightScheme.ihara(d)
    if preset == "BOWEN_LANFORD":
        return WeightScheme.bowen_lanford(d, tau)
    if preset == "MIZUNO_SATO":
        return WeightScheme.mizuno_sato(d, tau)
    if preset == "SATO":
        return WeightScheme.sato(d, tau)
    if preset == "GENERAL":
        return WeightScheme.general(tau, [rand_rational(rng) for _ in range(m)])
    if preset == "BARTHOLDI":
        return WeightScheme.bartholdi(d, q)
    raise ValueError(preset)


def rand_matrix(rng: random.Random, rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return Matrix.from_rows(QQ, [[rand_rational(rng) for _ in range(cols)] for _ in range(rows)])


def rand_column_constant(rng: random.Random, rows: int, cols: int) -> Matrix:
    row = [rand_rational(rng) for _ in range(cols)]
    return Matrix.from_rows(QQ, [row] * rows)


def cofactor_det(rows):
    """Laplace expansion along the first row, memoised on the remaining columns.

    Works for any entries supporting ``+``, ``-`` and ``*``; independent of
    the elimination code under test.
    """
    n = len(rows)
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def expand(r: int, cols: frozenset):
        if r == n:
            return None
        acc = None
        for k, c in enumerate(sorted(cols)):
            x = rows[r][c]
            if x == 0:
                continue
            rest = expand(r + 1, cols - {c})
            term = x if rest is None else x * rest
            if k % 2:
                term = -term
            acc = term if acc is None else acc + term
        return 0 if acc is None else acc

    return expand(0, frozenset(range(n)))


def reciprocal_char_rows(m: Matrix):
    """Rows of ``I - tM`` as polynomials over ``m.ring``."""
    f = m.ring
    t = UniPoly.gen(f)
    one = UniPoly.constant(f, 1)
    return [[(one if i == j else UniPoly.constant(f, 0)) - t * m[i, j] for j in range(m.cols)]
            for i in range(m.rows)]


def mat_power_trace(m: Matrix, k: int):
    p = Matrix.identity(m.ring, m.rows)
    for _ in range(k):
        p = p @ m
    return p.trace()


def mobius(n: int) -> int:
    res, p, x = 1, 2, n
    while p * p <= x:
        if x % p == 0:
            x //= p
            if x % p == 0:
                return 0
            res = -res
        p += 1
    return -res if x > 1 else res


def lyndon_count(n: int, length: int) -> int:
    """Necklace formula: number of Lyndon words of exactly ``length`` letters."""
    total = sum(mobius(e) * n ** (length // e) for e in range(1, length + 1) if length % e == 0)
    return total // length

