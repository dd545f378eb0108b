"""Formal power series truncated at a fixed order."""

from __future__ import annotations

from .poly import UniPoly
from .rings import Ring


class SeriesDomainError(ValueError):
    """Raised when exp/log/inverse is applied outside its domain."""


class TruncatedSeries:
    """Coefficients of ``t^0 .. t^order`` of a power series over ``field``."""

    __slots__ = ("field", "order", "coeffs")

    def __init__(self, field: Ring, coeffs, order: int):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        cs = [field.coerce(c) for c in list(coeffs)[: order + 1]]
        cs += [field.zero] * (order + 1 - len(cs))
        self.field = field
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, field, order):
        return cls(field, [field.one], order)

    @classmethod
    def from_poly(cls, p: UniPoly, order: int):
        return cls(p.field, p.coeffs, order)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return self.order + 1

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise ValueError(f"order mismatch {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self):
        return TruncatedSeries(self.field, [-a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_product(self, other)
        c = self.field.coerce(other)
        return TruncatedSeries(self.field, [a * c for a in self.coeffs], self.order)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({', '.join(self.field.format(c) for c in self.coeffs)})"


def series_product(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    f._check(g)
    T = f.order
    is_zero = f.field.is_zero
    out = [f.field.zero] * (T + 1)
    for i, a in enumerate(f.coeffs):
        if is_zero(a):
            continue
        for j in range(T + 1 - i):
            b = g.coeffs[j]
            if not is_zero(b):
                out[i + j] = out[i + j] + a * b
    return TruncatedSeries(f.field, out, T)


def series_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; requires ``f(0) == 1``."""
    if not f.field.is_one(f.coeffs[0]):
        raise SeriesDomainError("series_inverse needs constant term 1")
    T = f.order
    g = [f.field.one] + [f.field.zero] * T
    for n in range(1, T + 1):
        acc = f.field.zero
        for k in range(1, n + 1):
            acc = acc + f.coeffs[k] * g[n - k]
        g[n] = -acc
    return TruncatedSeries(f.field, g, T)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """``exp(f)`` via ``n g_n = sum_k k f_k g_{n-k}``; requires ``f(0) == 0``."""
    if not f.field.is_zero(f.coeffs[0]):
        raise SeriesDomainError("series_exp needs constant term 0")
    T = f.order
    field = f.field
    g = [field.one] + [field.zero] * T
    for n in range(1, T + 1):
        acc = field.zero
        for k in range(1, n + 1):
            if not field.is_zero(f.coeffs[k]):
                acc = acc + field.coerce(k) * f.coeffs[k] * g[n - k]
        g[n] = acc / field.coerce(n)
    return TruncatedSeries(field, g, T)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """``log(f)`` for ``f(0) == 1``, from ``f * L' = f'``."""
    if not f.field.is_one(f.coeffs[0]):
        raise SeriesDomainError("series_log needs constant term 1")
    T = f.order
    field = f.field
    L = [field.zero] * (T + 1)
    # n L_n = n f_n - sum_{k=1}^{n-1} k L_k f_{n-k}
    for n in range(1, T + 1):
        acc = field.coerce(n) * f.coeffs[n]
        for k in range(1, n):
            acc = acc - field.coerce(k) * L[k] * f.coeffs[n - k]
        L[n] = acc / field.coerce(n)
    return TruncatedSeries(field, L, T)
