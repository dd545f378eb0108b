"""Reduced rational functions and the field they form.

A :class:`RatFunc` is kept in the normal form ``num/den`` with ``den`` monic
and ``gcd(num, den) == 1``; zero is ``0/1``.  With that normal form equality
is structural, which is what the identity checks rely on.

Fields nest: ``RationalFunctionField(QQ, "q")`` is Bartholdi's ``Q(q)`` and
``RationalFunctionField(QQ_q, "t")`` is ``Q(q)(t)``.
"""

from __future__ import annotations

from .poly import UniPoly, format_poly, poly_gcd, _needs_parens
from .rings import QQ, Ring


class RatFunc:
    __slots__ = ("field", "num", "den")

    def __init__(self, field: "RationalFunctionField", num: UniPoly, den: UniPoly | None = None):
        if den is None:
            den = UniPoly._raw(field.base, [field.base.one], field.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num = UniPoly._raw(field.base, [], field.var)
            den = UniPoly._raw(field.base, [field.base.one], field.var)
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc
        if not field.base.is_one(lc):
            inv = field.base.one / lc
            num = num * inv
            den = den * inv
        self.field = field
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, field, num, den):
        r = object.__new__(cls)
        r.field = field
        r.num = num
        r.den = den
        return r

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return not self.num.is_zero()

    def _pair(self, other):
        """Bring ``self`` and ``other`` into one field, or return ``None``."""
        if isinstance(other, RatFunc):
            if other.field == self.field:
                return self, other
            if other.field.contains(self):
                # self sits lower in the tower; same-type reflection never fires
                return other.field.coerce(self), other
        if self.field.contains(other):
            return self, self.field.coerce(other)
        return None

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        if b.is_zero():
            return a
        if a.is_zero():
            return b
        if a.den == b.den:
            return RatFunc(a.field, a.num + b.num, a.den)
        return RatFunc(a.field, a.num * b.den + b.num * a.den, a.den * b.den)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return RatFunc._reduced(self.field, -self.num, self.den)

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        return p[0] + (-p[1])

    def __rsub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        return p[1] + (-p[0])

    def __mul__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        if a.is_zero() or b.is_zero():
            return a.field.zero
        if a.den.degree == 0 and b.den.degree == 0:
            return RatFunc._reduced(a.field, a.num * b.num, a.den)
        # cross-cancel before multiplying keeps degrees small
        g1 = poly_gcd(a.num, b.den)
        g2 = poly_gcd(b.num, a.den)
        n = a.num.exact_div(g1) * b.num.exact_div(g2)
        d = a.den.exact_div(g2) * b.den.exact_div(g1)
        return RatFunc(a.field, n, d)

    def __rmul__(self, other):
        return self.__mul__(other)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.field, self.den, self.num)

    def __truediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        return p[0] * p[1].inverse()

    def __rtruediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        return p[1] * p[0].inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._reduced(self.field, self.num ** n, self.den ** n)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return self.num(x) / d

    def map_coeffs(self, fn, field: "RationalFunctionField"):
        """Apply ``fn`` to every coefficient of numerator and denominator."""
        return RatFunc(field, self.num.map_coeffs(fn, field.base), self.den.map_coeffs(fn, field.base))

    def __eq__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self.den.degree == 0 and self.num.degree <= 0:
            return hash(self.num)
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.field.format(self)})"

    def __str__(self):
        return self.field.format(self)


class RationalFunctionField(Ring):
    """The field ``base(var)`` of reduced rational functions."""

    is_field = True

    def __init__(self, base: Ring, var: str):
        self.base = base
        self.var = var
        self.name = f"{base!r}({var})"
        one = UniPoly._raw(base, [base.one], var)
        self._zero = RatFunc._reduced(self, UniPoly._raw(base, [], var), one)
        self._one = RatFunc._reduced(self, one, one)

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def is_zero(self, x) -> bool:
        return x.num.is_zero()

    def is_one(self, x) -> bool:
        return x.den.degree == 0 and x.num.degree == 0 and self.base.is_one(x.num.coeffs[0])

    def gen(self) -> RatFunc:
        return RatFunc._reduced(self, UniPoly.gen(self.base, self.var), self._one.den)

    def poly(self, coeffs) -> UniPoly:
        return UniPoly(self.base, coeffs, self.var)

    def coerce(self, x) -> RatFunc:
        if isinstance(x, RatFunc) and x.field == self:
            return x
        if isinstance(x, UniPoly) and x.field == self.base and x.var == self.var:
            return RatFunc._reduced(self, x, self._one.den)
        c = self.base.coerce(x)
        return RatFunc._reduced(self, UniPoly._raw(self.base, [c], self.var), self._one.den)

    def contains(self, x) -> bool:
        if isinstance(x, RatFunc) and x.field == self:
            return True
        if isinstance(x, UniPoly):
            return x.field == self.base and x.var == self.var
        return self.base.contains(x)

    def exact_div(self, a, b):
        return a / b

    def fraction(self, num: UniPoly, den: UniPoly) -> RatFunc:
        return RatFunc(self, num, den)

    def format(self, x: RatFunc) -> str:
        n = format_poly(x.num)
        if x.den.degree == 0:
            return n
        d = format_poly(x.den)
        if _needs_parens(n) or "/" in n:
            n = f"({n})"
        if _needs_parens(d) or "*" in d or "/" in d or "^" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __eq__(self, other):
        return (isinstance(other, RationalFunctionField)
                and other.var == self.var and other.base == self.base)

    def __hash__(self):
        return hash(("ratfunc", self.base, self.var))


#: Bartholdi's scalar field Q(q).
QQ_q = RationalFunctionField(QQ, "q")


def rational_functions_in_t(base: Ring) -> RationalFunctionField:
    return RationalFunctionField(base, "t")


def evaluate_q(x, value):
    """Substitute ``q = value`` into an element of ``Q(q)``; rationals pass through."""
    if isinstance(x, RatFunc):
        return x(QQ.coerce(value))
    return QQ.coerce(x)
