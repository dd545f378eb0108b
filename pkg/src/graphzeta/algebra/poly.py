"""Dense univariate polynomials over a field."""

from __future__ import annotations

from .rings import Ring


class UniPoly:
    """Polynomial ``sum(coeffs[i] * var**i)`` with coefficients in ``field``.

    Coefficient lists never carry trailing zeros, so the zero polynomial has
    an empty list and ``degree == -1``.
    """

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field: Ring, coeffs=(), var: str = "t"):
        cs = [field.coerce(c) for c in coeffs]
        _strip(field, cs)
        self.field = field
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def _raw(cls, field, coeffs, var):
        # coeffs already coerced; only trailing zeros are removed
        cs = list(coeffs)
        _strip(field, cs)
        p = object.__new__(cls)
        p.field = field
        p.coeffs = tuple(cs)
        p.var = var
        return p

    @classmethod
    def constant(cls, field, c, var="t"):
        return cls._raw(field, [field.coerce(c)], var)

    @classmethod
    def monomial(cls, field, degree, c=1, var="t"):
        return cls._raw(field, [field.zero] * degree + [field.coerce(c)], var)

    @classmethod
    def gen(cls, field, var="t"):
        return cls.monomial(field, 1, 1, var)

    # -- basic queries ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    # -- ring operations -------------------------------------------------
    def _lift(self, other):
        if isinstance(other, UniPoly):
            if other.field != self.field or other.var != self.var:
                return None
            return other
        if self.field.contains(other):
            return UniPoly._raw(self.field, [self.field.coerce(other)], self.var)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._raw(self.field, out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw(self.field, [-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if other.field != self.field or other.var != self.var:
                return NotImplemented
            return self._mul_poly(other)
        if self.field.contains(other):
            c = self.field.coerce(other)
            if self.field.is_zero(c):
                return UniPoly._raw(self.field, [], self.var)
            return UniPoly._raw(self.field, [x * c for x in self.coeffs], self.var)
        return NotImplemented

    __rmul__ = __mul__

    def _mul_poly(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw(self.field, [], self.var)
        zero = self.field.zero
        is_zero = self.field.is_zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UniPoly._raw(self.field, out, self.var)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly._raw(self.field, [self.field.one], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        return self * c

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        inv_lc = self.field.one / other.lc
        quot = [self.field.zero] * max(len(rem) - dd, 0)
        is_zero = self.field.is_zero
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if is_zero(c):
                continue
            c = c * inv_lc
            quot[k - dd] = c
            for j, y in enumerate(other.coeffs):
                rem[k - dd + j] = rem[k - dd + j] - c * y
        return (UniPoly._raw(self.field, quot, self.var),
                UniPoly._raw(self.field, rem[:dd] if dd > 0 else [], self.var))

    def __floordiv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.divmod(o)[0]

    def __mod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.divmod(o)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero():
            return self
        lc = self.lc
        if self.field.is_one(lc):
            return self
        inv = self.field.one / lc
        return UniPoly._raw(self.field, [c * inv for c in self.coeffs], self.var)

    def derivative(self):
        return UniPoly._raw(self.field,
                            [c * self.field.coerce(i) for i, c in enumerate(self.coeffs)][1:],
                            self.var)

    # -- evaluation and conversion ---------------------------------------
    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self.field.zero
        return acc

    def map_coeffs(self, fn, field: Ring | None = None):
        field = field or self.field
        return UniPoly(field, [fn(c) for c in self.coeffs], self.var)

    def truncate(self, order: int):
        """Drop every term of degree above ``order``."""
        return UniPoly._raw(self.field, self.coeffs[: order + 1], self.var)

    def coeff_list(self, order: int):
        return [self.coeff(i) for i in range(order + 1)]

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        if self.field.contains(other):
            c = self.field.coerce(other)
            if self.field.is_zero(c):
                return not self.coeffs
            return self.coeffs == (c,)
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0]) if self.coeffs else hash(0)
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"UniPoly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


def _strip(field, cs):
    while cs and field.is_zero(cs[-1]):
        cs.pop()


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor; ``gcd(0, 0) == 0``."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def _needs_parens(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and i > 0 and ch in "+-" and s[i - 1] == " ":
            return True
        elif depth == 0 and ch == "/" and (s[i - 1:i] == ")" or s[i + 1:i + 2] == "("):
            return True
    return False


def format_poly(p: UniPoly) -> str:
    """Canonical text form, ascending powers: ``1 - 2*t^2 + t^4``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if p.field.is_zero(c):
            continue
        s = p.field.format(c)
        negative = s.startswith("-") and not _needs_parens(s)
        body = s[1:] if negative else s
        if i == 0:
            term = body
        else:
            mono = p.var if i == 1 else f"{p.var}^{i}"
            if body == "1":
                term = mono
            elif _needs_parens(body):
                term = f"({body})*{mono}"
            else:
                term = f"{body}*{mono}"
        if not parts:
            parts.append(f"-{term}" if negative else term)
        else:
            parts.append(f" - {term}" if negative else f" + {term}")
    return "".join(parts)


class PolynomialRing(Ring):
    """``field[var]`` viewed as an integral domain (used by Bareiss elimination)."""

    is_field = False

    def __init__(self, field: Ring, var: str = "t"):
        self.field = field
        self.var = var
        self.name = f"{field!r}[{var}]"

    @property
    def zero(self):
        return UniPoly._raw(self.field, [], self.var)

    @property
    def one(self):
        return UniPoly._raw(self.field, [self.field.one], self.var)

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def gen(self):
        return UniPoly.gen(self.field, self.var)

    def coerce(self, x):
        if isinstance(x, UniPoly) and x.field == self.field and x.var == self.var:
            return x
        return UniPoly.constant(self.field, x, self.var)

    def contains(self, x) -> bool:
        if isinstance(x, UniPoly):
            return x.field == self.field and x.var == self.var
        return self.field.contains(x)

    def exact_div(self, a, b):
        return a.exact_div(b)

    def format(self, x) -> str:
        return format_poly(x)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.field == self.field and other.var == self.var

    def __hash__(self):
        return hash(("poly", self.field, self.var))
