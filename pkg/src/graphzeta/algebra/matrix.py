"""Dense exact matrices, determinants and the block-matrix lemmas.

Matrices are immutable row-major tuples tagged with the ring of their
entries.  Nothing here uses floating point.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .rings import Ring


class NotColumnConstantError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


class Matrix:
    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, rows: int, cols: int, entries: Iterable):
        entries = tuple(ring.coerce(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def _raw(cls, ring, rows, cols, entries):
        m = object.__new__(cls)
        m.ring = ring
        m.rows = rows
        m.cols = cols
        m.entries = tuple(entries)
        return m

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(ring, len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._raw(ring, rows, cols, [ring.zero] * (rows * cols))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        z, o = ring.zero, ring.one
        return cls._raw(ring, n, n, [o if i == j else z for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, ring: Ring, values: Sequence) -> "Matrix":
        n = len(values)
        z = ring.zero
        return cls(ring, n, n, [values[i] if i == j else z for i in range(n) for j in range(n)])

    @classmethod
    def from_function(cls, ring: Ring, rows: int, cols: int, fn: Callable[[int, int], object]) -> "Matrix":
        return cls(ring, rows, cols, [fn(i, j) for i in range(rows) for j in range(cols)])

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a matrix from a grid of compatible blocks."""
        ring = blocks[0][0].ring
        out_rows = []
        for brow in blocks:
            h = brow[0].rows
            if any(b.rows != h for b in brow):
                raise ValueError("block heights differ within a block row")
            for i in range(h):
                out_rows.append([x for b in brow for x in b.row(i)])
        return cls.from_rows(ring, out_rows)

    # -- access ------------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix._raw(self.ring, len(row_idx), len(col_idx),
                           [self[i, j] for i in row_idx for j in col_idx])

    def split(self, k: int):
        """Return blocks ``(A, B, C, D)`` with ``A`` the leading ``k x k`` block."""
        if not self.is_square():
            raise ValueError("block split needs a square matrix")
        lo, hi = list(range(k)), list(range(k, self.rows))
        return (self.submatrix(lo, lo), self.submatrix(lo, hi),
                self.submatrix(hi, lo), self.submatrix(hi, hi))

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.ring, self.cols, self.rows,
                           [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    @property
    def T(self):
        return self.transpose()

    def map(self, fn, ring: Ring | None = None) -> "Matrix":
        ring = ring or self.ring
        return Matrix(ring, self.rows, self.cols, [fn(x) for x in self.entries])

    def change_ring(self, ring: Ring) -> "Matrix":
        return Matrix(ring, self.rows, self.cols, self.entries)

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        acc = self.ring.zero
        for i in range(self.rows):
            acc = acc + self[i, i]
        return acc

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(x) for x in self.entries)

    # -- arithmetic --------------------------------------------------------
    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix._raw(self.ring, self.rows, self.cols,
                           [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix._raw(self.ring, self.rows, self.cols,
                           [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix._raw(self.ring, self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        c = self.ring.coerce(other)
        return Matrix._raw(self.ring, self.rows, self.cols, [a * c for a in self.entries])

    def __rmul__(self, other):
        c = self.ring.coerce(other)
        return Matrix._raw(self.ring, self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        is_zero = self.ring.is_zero
        zero = self.ring.zero
        out = []
        ocols = [other.column(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, x) for k, x in enumerate(r) if not is_zero(x)]
            for j in range(other.cols):
                col = ocols[j]
                acc = zero
                for k, x in nz:
                    y = col[k]
                    if not is_zero(y):
                        acc = acc + x * y
                out.append(acc)
        return Matrix._raw(self.ring, self.rows, other.cols, out)

    def __pow__(self, n: int):
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if n < 0:
            return inverse(self) ** (-n)
        result = Matrix.identity(self.ring, self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(self.ring.format(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix[{self.rows}x{self.cols}]({body})"


def _require_square(m: Matrix):
    if not m.is_square():
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")


def det_over_field(m: Matrix):
    """Gaussian elimination with first-nonzero pivoting over a field."""
    _require_square(m)
    ring = m.ring
    n = m.rows
    a = m.to_rows()
    det = ring.one
    is_zero = ring.is_zero
    for k in range(n):
        p = next((i for i in range(k, n) if not is_zero(a[i][k])), None)
        if p is None:
            return ring.zero
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        pivot = a[k][k]
        det = det * pivot
        inv = ring.one / pivot
        for i in range(k + 1, n):
            if is_zero(a[i][k]):
                continue
            f = a[i][k] * inv
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                if not is_zero(rk[j]):
                    ri[j] = ri[j] - f * rk[j]
    return det


def det_bareiss(m: Matrix):
    """Fraction-free (Bareiss) determinant over an integral domain.

    Every intermediate division is exact, so the ring only has to supply
    ``exact_div``.
    """
    _require_square(m)
    ring = m.ring
    n = m.rows
    if n == 0:
        return ring.one
    a = m.to_rows()
    is_zero = ring.is_zero
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        p = next((i for i in range(k, n) if not is_zero(a[i][k])), None)
        if p is None:
            return ring.zero
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = ring.exact_div(ri[j] * akk - aik * rk[j], prev)
            ri[k] = ring.zero
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse over a field."""
    _require_square(m)
    ring = m.ring
    n = m.rows
    a = m.to_rows()
    inv = Matrix.identity(ring, n).to_rows()
    is_zero = ring.is_zero
    for k in range(n):
        p = next((i for i in range(k, n) if not is_zero(a[i][k])), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        a[k], a[p] = a[p], a[k]
        inv[k], inv[p] = inv[p], inv[k]
        s = ring.one / a[k][k]
        a[k] = [x * s for x in a[k]]
        inv[k] = [x * s for x in inv[k]]
        for i in range(n):
            if i == k or is_zero(a[i][k]):
                continue
            f = a[i][k]
            a[i] = [x - f * y for x, y in zip(a[i], a[k])]
            inv[i] = [x - f * y for x, y in zip(inv[i], inv[k])]
    return Matrix.from_rows(ring, inv)


def is_column_constant(m: Matrix) -> bool:
    """All rows identical (so every column holds a single value)."""
    first = m.row(0) if m.rows else ()
    return all(m.row(i) == first for i in range(1, m.rows))


def row_sum(m: Matrix):
    """Common row sum of a column-constant matrix."""
    if not is_column_constant(m):
        raise NotColumnConstantError("row sum is only defined for column-constant matrices")
    acc = m.ring.zero
    for x in (m.row(0) if m.rows else ()):
        acc = acc + x
    return acc


def column_constant_inverse(m: Matrix, tfield) -> Matrix:
    """``(I + tM)^{-1} = det(I + tM)^{-1} (I - t(M - rho I))`` over ``tfield``.

    ``tfield`` is the rational-function field in ``t`` over the entry field
    of ``m``.
    """
    if not m.is_square():
        raise ValueError("column-constant inverse needs a square matrix")
    rho = row_sum(m)
    t = tfield.gen()
    n = m.rows
    lifted = m.change_ring(tfield)
    shifted = lifted - Matrix.identity(tfield, n) * tfield.coerce(rho)
    det = tfield.one + t * rho
    return (Matrix.identity(tfield, n) - shifted * t) * (tfield.one / det)


def schur_complement(m: Matrix, k: int, which: str = "A") -> Matrix:
    """Schur complement of the leading ``k x k`` block (``which="A"``) or of
    the trailing block (``which="D"``): ``M/A = D - C A^-1 B``,
    ``M/D = A - B D^-1 C``."""
    a, b, c, d = m.split(k)
    if which == "A":
        return d - c @ inverse(a) @ b
    if which == "D":
        return a - b @ inverse(d) @ c
    raise ValueError(f"which must be 'A' or 'D', not {which!r}")
