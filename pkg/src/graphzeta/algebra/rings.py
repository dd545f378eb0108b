"""Coefficient rings and fields.

Every polynomial, rational function and matrix in this package carries a
reference to the ring its entries live in.  A ring object knows its zero and
one, can test for zero, and coerces plain Python integers (and elements of
smaller rings in the tower) into its own element type.  Arithmetic on the
elements themselves goes through ordinary Python operators.

Two fields are needed by the zeta machinery: ``QQ`` (``fractions.Fraction``)
and ``QQ_q``, the rational functions in the indeterminate ``q``.  The latter is
built in :mod:`graphzeta.algebra.ratfunc` to avoid an import cycle.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Integral


class Ring:
    """Base class for coefficient domains."""

    name = "ring"
    is_field = False

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == self.zero

    def is_one(self, x) -> bool:
        return x == self.one

    def coerce(self, x):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def exact_div(self, a, b):
        """Divide ``a`` by ``b`` when the quotient is known to lie in the ring."""
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    def __repr__(self) -> str:
        return self.name


class IntegerRing(Ring):
    name = "ZZ"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def is_zero(self, x) -> bool:
        return x == 0

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, Integral):
            raise TypeError(f"cannot coerce {x!r} into ZZ")
        return int(x)

    def contains(self, x) -> bool:
        return isinstance(x, Integral) and not isinstance(x, bool)

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{a} is not divisible by {b}")
        return q

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` exactly.  Decimal and float notation is refused."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class RationalField(Ring):
    name = "QQ"
    is_field = True

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def is_zero(self, x) -> bool:
        return x == 0

    def is_one(self, x) -> bool:
        return x == 1

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, Integral) and not isinstance(x, bool):
            return Fraction(int(x))
        if isinstance(x, str):
            return parse_rational(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def contains(self, x) -> bool:
        return isinstance(x, Fraction) or (isinstance(x, Integral) and not isinstance(x, bool))

    def exact_div(self, a, b):
        return a / b

    def format(self, x) -> str:
        return format_rational(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


ZZ = IntegerRing()
QQ = RationalField()
