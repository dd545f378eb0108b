"""Closed paths, cycles, Lyndon words and the truncated zeta series.

Periodic points of the shift on bi-infinite arc sequences are never built;
an m-periodic point is represented by its principal m-section, which is a
closed path of length m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import (
    Matrix,
    PolynomialRing,
    TruncatedSeries,
    det_bareiss,
    series_exp,
    series_inverse,
    series_product,
)
from .digraph import Digraph
from .weights import WeightScheme, edge_matrix, theta_eval

DEFAULT_MAX_PATHS = 10**7
DEFAULT_ORDER = 10


class ResourceLimitError(RuntimeError):
    """Enumeration would exceed the configured candidate bound."""


# -- closed paths ------------------------------------------------------------

def _guard(d: Digraph, m: int, max_paths: int):
    if m < 1:
        raise ValueError("path length must be at least 1")
    if d.arc_count ** m > max_paths:
        raise ResourceLimitError(
            f"|A|^m = {d.arc_count}^{m} exceeds the enumeration bound {max_paths}")


def iter_closed_paths(d: Digraph, m: int, reduced: bool = False,
                      max_paths: int = DEFAULT_MAX_PATHS) -> Iterator[tuple[int, ...]]:
    """Yield closed paths of length ``m`` in lexicographic arc-id order."""
    _guard(d, m, max_paths)
    succ = d.successors
    inv = d.inverse_sets
    path: list[int] = []

    def extend(depth):
        last = path[-1]
        if depth == m:
            first = path[0]
            if d.head(last) == d.tail(first) and not (reduced and first in inv[last]):
                yield tuple(path)
            return
        for nxt in succ[last]:
            if reduced and nxt in inv[last]:
                continue
            path.append(nxt)
            yield from extend(depth + 1)
            path.pop()

    for a in range(d.arc_count):
        path.append(a)
        yield from extend(1)
        path.pop()


def enumerate_closed_paths(d: Digraph, m: int, reduced: bool = False,
                           max_paths: int = DEFAULT_MAX_PATHS) -> list[tuple[int, ...]]:
    return list(iter_closed_paths(d, m, reduced, max_paths))


def prime_period(path: Sequence) -> int:
    """Smallest ``p`` dividing ``len(path)`` with ``path`` p-periodic."""
    m = len(path)
    for p in range(1, m + 1):
        if m % p == 0 and all(path[i] == path[i % p] for i in range(p, m)):
            return p
    return m


def canonical_rotation(path: Sequence) -> tuple:
    m = len(path)
    return min(tuple(path[i:]) + tuple(path[:i]) for i in range(m))


def cbc(d: Digraph, path: Sequence[int]) -> int:
    """Cyclic bump count: backtracks ``(x_i, x_{i+1})`` counted cyclically."""
    m = len(path)
    inv = d.inverse_sets
    return sum(1 for i in range(m) if path[(i + 1) % m] in inv[path[i]])


def is_reduced(d: Digraph, path: Sequence[int]) -> bool:
    return cbc(d, path) == 0


@dataclass(frozen=True)
class CycleClass:
    representative: tuple[int, ...]
    length: int
    prime_period: int
    is_reduced: bool
    size: int

    @property
    def is_prime(self) -> bool:
        return self.prime_period == self.length

    @property
    def prime_section(self) -> tuple[int, ...]:
        return self.representative[: self.prime_period]


def cycle_classes(d: Digraph, paths: Sequence[Sequence[int]]) -> list[CycleClass]:
    """Group closed paths of one length into rotation classes."""
    lengths = {len(p) for p in paths}
    if len(lengths) > 1:
        raise ValueError("cycle_classes expects paths of a single length")
    groups: dict[tuple, int] = {}
    for p in paths:
        key = canonical_rotation(p)
        groups[key] = groups.get(key, 0) + 1
    out = []
    for rep in sorted(groups):
        out.append(CycleClass(rep, len(rep), prime_period(rep), is_reduced(d, rep), groups[rep]))
    return out


def circ_theta(d: Digraph, scheme: WeightScheme, path: Sequence[int]):
    """Circular product of ``theta`` along a closed path."""
    f = scheme.field
    acc = f.one
    m = len(path)
    for i in range(m):
        acc = acc * theta_eval(d, scheme, path[i], path[(i + 1) % m])
        if f.is_zero(acc):
            return f.zero
    return acc


def n_m(d: Digraph, scheme: WeightScheme, m: int, reduced: bool = False,
        max_paths: int = DEFAULT_MAX_PATHS):
    """Sum of circular weights over all closed paths of length ``m``.

    Walks the same paths as :func:`iter_closed_paths`, carrying the running
    product of ``theta`` and skipping branches whose weight is already zero.
    """
    _guard(d, m, max_paths)
    f = scheme.field
    inv = d.inverse_sets
    steps = []
    for a in range(d.arc_count):
        row = []
        for b in d.successors[a]:
            if reduced and b in inv[a]:
                continue
            w = theta_eval(d, scheme, a, b)
            if not f.is_zero(w):
                row.append((b, w))
        steps.append(row)
    closing = [dict(row) for row in steps]
    total = f.zero

    def extend(first, last, depth, weight):
        nonlocal total
        if depth == m:
            w = closing[last].get(first)
            if w is not None:
                total = total + weight * w
            return
        for b, w in steps[last]:
            extend(first, b, depth + 1, weight * w)

    for a in range(d.arc_count):
        extend(a, a, 1, f.one)
    return total


# -- Lyndon words --------------------------------------------------------------

def iter_lyndon_words(n: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """Duval's successor iteration over letters ``1..n``, lexicographic order."""
    if n < 1 or max_len < 1:
        raise ValueError("alphabet size and maximum length must be positive")
    w = [0]
    while w:
        yield tuple(x + 1 for x in w)
        k = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - k])
        while w and w[-1] == n - 1:
            w.pop()
        if w:
            w[-1] += 1


def lyndon_words(n: int, max_len: int) -> list[tuple[int, ...]]:
    """Lyndon words of length at most ``max_len``, shortest first, then lexicographic."""
    return sorted(iter_lyndon_words(n, max_len), key=lambda w: (len(w), w))


def is_lyndon(word: Sequence) -> bool:
    w = tuple(word)
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


def circ_matrix(m: Matrix, word: Sequence[int]):
    """Circular product ``m[w1,w2] m[w2,w3] ... m[wk,w1]`` (0-based letters)."""
    acc = m.ring.one
    k = len(word)
    for i in range(k):
        acc = acc * m[word[i], word[(i + 1) % k]]
        if m.ring.is_zero(acc):
            return m.ring.zero
    return acc


def reciprocal_char_poly(m: Matrix):
    """``det(I - tM)`` as a polynomial in ``t`` (fraction-free elimination)."""
    ring = PolynomialRing(m.ring, "t")
    n = m.rows
    t = ring.gen()
    one = ring.one
    entries = []
    for i in range(n):
        for j in range(n):
            x = m[i, j]
            e = ring.zero if m.ring.is_zero(x) else t * (-x)
            entries.append(e + one if i == j else e)
    return det_bareiss(Matrix._raw(ring, n, n, entries))


def fz_product(m: Matrix, order: int) -> TruncatedSeries:
    """``prod (1 - circ_M(l) t^|l|)`` over Lyndon words with ``|l| <= order``."""
    f = m.ring
    result = TruncatedSeries.one(f, order)
    if order == 0 or m.rows == 0:
        return result
    coeffs = list(result.coeffs)
    for w in iter_lyndon_words(m.rows, order):
        c = circ_matrix(m, [x - 1 for x in w])
        if f.is_zero(c):
            continue
        k = len(w)
        # multiply in place by (1 - c t^k), high degrees first
        for i in range(order, k - 1, -1):
            if not f.is_zero(coeffs[i - k]):
                coeffs[i] = coeffs[i] - c * coeffs[i - k]
    return TruncatedSeries(f, coeffs, order)


def fz_truncated_check(m: Matrix, order: int) -> bool:
    """Compare the truncated Lyndon product with ``det(I - tM)`` mod ``t^(order+1)``."""
    if not m.is_square():
        raise ValueError("matrix must be square")
    det = reciprocal_char_poly(m)
    return fz_product(m, order) == TruncatedSeries.from_poly(det, order)


# -- the exponential and Euler expressions ----------------------------------

def n_m_sequence(d: Digraph, scheme: WeightScheme, order: int, reduced: bool = False,
                 max_paths: int = DEFAULT_MAX_PATHS) -> list:
    return [n_m(d, scheme, m, reduced, max_paths) for m in range(1, order + 1)]


def exp_expression_truncated(d: Digraph, scheme: WeightScheme, order: int = DEFAULT_ORDER,
                             reduced: bool = False,
                             max_paths: int = DEFAULT_MAX_PATHS) -> TruncatedSeries:
    """``exp(sum_m N_m t^m / m)`` truncated at ``order``."""
    f = scheme.field
    if order == 0:
        return TruncatedSeries.one(f, 0)
    log_coeffs = [f.zero]
    for m, nm in enumerate(n_m_sequence(d, scheme, order, reduced, max_paths), start=1):
        log_coeffs.append(nm / f.coerce(m))
    return series_exp(TruncatedSeries(f, log_coeffs, order))


def prime_cycle_classes(d: Digraph, max_len: int, reduced: bool = False,
                        max_paths: int = DEFAULT_MAX_PATHS) -> list[CycleClass]:
    """One representative per prime cycle of length ``<= max_len``."""
    out = []
    for m in range(1, max_len + 1):
        for p in iter_closed_paths(d, m, reduced, max_paths):
            if p == canonical_rotation(p) and prime_period(p) == m:
                out.append(CycleClass(p, m, m, is_reduced(d, p), m))
    return out


def euler_expression_truncated(d: Digraph, scheme: WeightScheme, order: int = DEFAULT_ORDER,
                               reduced: bool = False,
                               max_paths: int = DEFAULT_MAX_PATHS) -> TruncatedSeries:
    """Product over prime cycles of ``(1 - circ(c) t^len(c))^-1``, truncated."""
    f = scheme.field
    result = TruncatedSeries.one(f, order)
    if order == 0:
        return result
    for c in prime_cycle_classes(d, order, reduced, max_paths):
        w = circ_theta(d, scheme, c.representative)
        if f.is_zero(w):
            continue
        factor = [f.one] + [f.zero] * order
        factor[c.length] = -w
        result = series_product(result, series_inverse(TruncatedSeries(f, factor, order)))
    return result


def hashimoto_series(d: Digraph, scheme: WeightScheme, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Power-series expansion of ``1 / det(I - t M)``."""
    det = reciprocal_char_poly(edge_matrix(d, scheme))
    return series_inverse(TruncatedSeries.from_poly(det, order))
