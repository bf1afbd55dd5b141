"""Exact Gaussian-rational scalars, dense matrices and fraction-free elimination.

Every number in the library is a ``Scalar``: a complex number whose real and
imaginary parts are arbitrary-precision rationals.  Internally a scalar is
kept as ``(a + b i) / d`` with integers ``a``, ``b``, ``d``, ``d > 0`` and
``gcd(a, b, d) = 1``.  That triple is canonical, so equality and hashing are
plain tuple comparisons, and arithmetic never touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "ExactArithmeticError",
    "ScalarDivisionByZero",
    "ShapeError",
    "Scalar",
    "Matrix",
    "KernelReport",
    "ZERO",
    "ONE",
    "I",
    "as_scalar",
    "scalar_arith",
    "mat_arith",
    "rank_and_kernel",
    "rank",
    "same_subspace",
    "span_contains",
]


class ExactArithmeticError(ArithmeticError):
    """Base class for failures of the exact arithmetic layer."""


class ScalarDivisionByZero(ExactArithmeticError, ZeroDivisionError):
    """Raised when a Scalar is divided by exact zero."""


class ShapeError(ValueError):
    """Dimension mismatch between matrix operands."""

    def __init__(self, op: str, a: tuple[int, int], b: tuple[int, int] | None = None):
        self.op = op
        self.shapes = (a, b)
        if b is None:
            msg = f"{op}: incompatible shape {a[0]}x{a[1]}"
        else:
            msg = f"{op}: incompatible shapes {a[0]}x{a[1]} and {b[0]}x{b[1]}"
        super().__init__(msg)


def _reduced(a: int, b: int, d: int) -> "Scalar":
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(a, b, d)
    if g != 1:
        a //= g
        b //= g
        d //= g
    s = object.__new__(Scalar)
    s._a = a
    s._b = b
    s._d = d
    return s


class Scalar:
    """Gaussian rational ``re + im*i`` with exact rational parts."""

    __slots__ = ("_a", "_b", "_d")

    def __new__(cls, re=0, im=0):
        if isinstance(re, Scalar) and im == 0:
            return re
        fr = Fraction(re)
        fi = Fraction(im)
        d = fr.denominator * fi.denominator // gcd(fr.denominator, fi.denominator)
        return _reduced(
            fr.numerator * (d // fr.denominator),
            fi.numerator * (d // fi.denominator),
            d,
        )

    # parts -------------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def is_real(self) -> bool:
        return self._b == 0

    def conj(self) -> "Scalar":
        return _reduced(self._a, -self._b, self._d)

    def abs2(self) -> Fraction:
        """Squared modulus, an exact rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = as_scalar(other)
        if o._d == self._d:
            return _reduced(self._a + o._a, self._b + o._b, self._d)
        return _reduced(
            self._a * o._d + o._a * self._d,
            self._b * o._d + o._b * self._d,
            self._d * o._d,
        )

    __radd__ = __add__

    def __neg__(self):
        return _reduced(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return NotImplemented
        o = as_scalar(other)
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return _reduced(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * o._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = as_scalar(other)
        n = o._a * o._a + o._b * o._b
        if n == 0:
            raise ScalarDivisionByZero(f"division of {self} by zero")
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return _reduced((a1 * a2 + b1 * b2) * o._d, (b1 * a2 - a1 * b2) * o._d, self._d * n)

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def inverse(self) -> "Scalar":
        return ONE / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (ONE / self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Rational)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        if isinstance(other, complex):
            return False
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        if re == 0:
            return f"{im}i"
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{abs(im)}i"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def as_scalar(x) -> Scalar:
    """Coerce an int, Fraction, str or Scalar to a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return _reduced(x, 0, 1)
    if isinstance(x, (Fraction, Rational)):
        return Scalar(x)
    if isinstance(x, str):
        return Scalar(Fraction(x))
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def scalar_arith(a, b, op: str) -> Scalar:
    """Apply ``op`` in {add, sub, mul, div, conj} to exact scalars."""
    a = as_scalar(a)
    if op == "conj":
        return a.conj()
    b = as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown scalar op {op!r}")


class Matrix:
    """Immutable dense matrix of Scalars stored row-major."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(as_scalar(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeError("construct", (rows, cols))
        self.rows = rows
        self.cols = cols
        self._e = entries

    @classmethod
    def _make(cls, rows: int, cols: int, entries: tuple) -> "Matrix":
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._e = entries
        return m

    # constructors ------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        values = list(values)
        return cls(len(values), 1, values)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._make(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([ONE] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        values = [as_scalar(v) for v in values]
        n = len(values)
        e = [ZERO] * (n * n)
        for i, v in enumerate(values):
            e[i * n + i] = v
        return cls._make(n, n, tuple(e))

    @classmethod
    def unit(cls, n: int, k: int) -> "Matrix":
        """Column vector e_k of length n."""
        e = [ZERO] * n
        e[k] = ONE
        return cls._make(n, 1, tuple(e))

    @classmethod
    def vstack(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        blocks = list(blocks)
        cols = blocks[0].cols
        for b in blocks:
            if b.cols != cols:
                raise ShapeError("vstack", blocks[0].shape, b.shape)
        return cls._make(sum(b.rows for b in blocks), cols, tuple(x for b in blocks for x in b._e))

    @classmethod
    def hstack(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        return cls.vstack([b.T for b in blocks]).T

    # access ------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        return self._e

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._e[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._e[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def col(self, j: int) -> "Matrix":
        return Matrix._make(self.rows, 1, self._e[j::self.cols])

    def columns(self) -> list["Matrix"]:
        return [self.col(j) for j in range(self.cols)]

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix._make(
            r1 - r0, c1 - c0,
            tuple(self._e[i * self.cols + j] for i in range(r0, r1) for j in range(c0, c1)),
        )

    # structure ---------------------------------------------------------
    @property
    def T(self) -> "Matrix":
        r, c, e = self.rows, self.cols, self._e
        return Matrix._make(c, r, tuple(e[i * c + j] for j in range(c) for i in range(r)))

    def conj(self) -> "Matrix":
        return Matrix._make(self.rows, self.cols, tuple(x.conj() for x in self._e))

    @property
    def H(self) -> "Matrix":
        return self.conj().T

    def is_zero(self) -> bool:
        return not any(self._e)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def trace(self) -> Scalar:
        if not self.is_square():
            raise ShapeError("trace", self.shape)
        return sum((self._e[i * self.cols + i] for i in range(self.rows)), ZERO)

    def frobenius2(self) -> Fraction:
        """Sum of squared moduli of the entries (exact residual measure)."""
        return sum((x.abs2() for x in self._e), Fraction(0))

    def nonzero_count(self) -> int:
        return sum(1 for x in self._e if x)

    # arithmetic --------------------------------------------------------
    def _check_same(self, other: "Matrix", op: str) -> None:
        if not isinstance(other, Matrix) or self.shape != other.shape:
            raise ShapeError(op, self.shape, getattr(other, "shape", None))

    def __add__(self, other):
        self._check_same(other, "add")
        return Matrix._make(self.rows, self.cols, tuple(a + b for a, b in zip(self._e, other._e)))

    def __sub__(self, other):
        self._check_same(other, "sub")
        return Matrix._make(self.rows, self.cols, tuple(a - b for a, b in zip(self._e, other._e)))

    def __neg__(self):
        return Matrix._make(self.rows, self.cols, tuple(-a for a in self._e))

    def scale(self, s) -> "Matrix":
        s = as_scalar(s)
        if not s:
            return Matrix.zeros(self.rows, self.cols)
        return Matrix._make(self.rows, self.cols, tuple(s * a if a else ZERO for a in self._e))

    def __mul__(self, s):
        if isinstance(s, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(s)

    __rmul__ = __mul__

    def __truediv__(self, s):
        return self.scale(ONE / as_scalar(s))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError("mul", self.shape, other.shape)
        n, m = other.rows, other.cols
        b = other._e
        brows = [[(j, b[k * m + j]) for j in range(m) if b[k * m + j]] for k in range(n)]
        out = []
        for i in range(self.rows):
            acc = [ZERO] * m
            for k, a in enumerate(self._e[i * n:(i + 1) * n]):
                if a:
                    for j, x in brows[k]:
                        acc[j] = acc[j] + a * x
            out.extend(acc)
        return Matrix._make(self.rows, m, tuple(out))

    def __pow__(self, n: int) -> "Matrix":
        if not self.is_square() or n < 0:
            raise ShapeError("pow", self.shape)
        result, base = Matrix.identity(self.rows), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def kron(self, other: "Matrix") -> "Matrix":
        r1, c1, r2, c2 = self.rows, self.cols, other.rows, other.cols
        a, b = self._e, other._e
        e = []
        for i1 in range(r1):
            for i2 in range(r2):
                for j1 in range(c1):
                    x = a[i1 * c1 + j1]
                    for j2 in range(c2):
                        y = b[i2 * c2 + j2]
                        e.append(x * y if x and y else ZERO)
        return Matrix._make(r1 * r2, c1 * c2, tuple(e))

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def anticommutator(self, other: "Matrix") -> "Matrix":
        return self @ other + other @ self

    def det(self) -> Scalar:
        if not self.is_square():
            raise ShapeError("det", self.shape)
        a = self.to_rows()
        n = self.rows
        d = ONE
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c]), None)
            if piv is None:
                return ZERO
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                d = -d
            p = a[c][c]
            d = d * p
            for r in range(c + 1, n):
                f = a[r][c]
                if f:
                    f = f / p
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return d

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; raises ScalarDivisionByZero when singular."""
        if not self.is_square():
            raise ShapeError("inverse", self.shape)
        n = self.rows
        a = [r + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.to_rows())]
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c]), None)
            if piv is None:
                raise ScalarDivisionByZero("singular matrix")
            a[c], a[piv] = a[piv], a[c]
            p = a[c][c]
            a[c] = [x / p for x in a[c]]
            for r in range(n):
                f = a[r][c]
                if r != c and f:
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return Matrix.from_rows([r[n:] for r in a])

    # comparison --------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {[[str(x) for x in r] for r in self.to_rows()]})"


def mat_arith(A: Matrix, B, op: str) -> Matrix:
    """Apply ``op`` in {add, sub, mul, scalar_mul, kron, conj_transpose}."""
    if op == "add":
        return A + B
    if op == "sub":
        return A - B
    if op == "mul":
        return A @ B
    if op == "scalar_mul":
        return A.scale(B)
    if op == "kron":
        return A.kron(B)
    if op == "conj_transpose":
        return A.H
    raise ValueError(f"unknown matrix op {op!r}")


# ----------------------------------------------------------------------
# Fraction-free elimination over the Gaussian integers


def _gi_div(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    """Exact division in Z[i]; the Bareiss recurrence guarantees exactness."""
    a, b = x
    c, d = y
    n = c * c + d * d
    re, r1 = divmod(a * c + b * d, n)
    im, r2 = divmod(b * c - a * d, n)
    if r1 or r2:
        raise ExactArithmeticError("inexact Bareiss division")
    return re, im


def _integer_rows(M: Matrix) -> list[list[tuple[int, int]]]:
    """Scale each row by the lcm of its denominators, giving Z[i] entries."""
    out = []
    for i in range(M.rows):
        row = M.row(i)
        lcm = 1
        for x in row:
            lcm = lcm * x._d // gcd(lcm, x._d)
        out.append([(x._a * (lcm // x._d), x._b * (lcm // x._d)) for x in row])
    return out


def _bareiss(M: Matrix) -> tuple[list[int], list[int]]:
    """Return (pivot columns, original row index of each pivot row)."""
    rows = _integer_rows(M)
    order = list(range(M.rows))
    n, ncols = M.rows, M.cols
    prev = (1, 0)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == n:
            break
        piv = next((i for i in range(r, n) if rows[i][c] != (0, 0)), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            order[r], order[piv] = order[piv], order[r]
        pr = rows[r]
        pa, pb = pr[c]
        for i in range(r + 1, n):
            ri = rows[i]
            fa, fb = ri[c]
            for j in range(c + 1, ncols):
                xa, xb = ri[j]
                ya, yb = pr[j]
                num = (pa * xa - pb * xb - (fa * ya - fb * yb),
                       pa * xb + pb * xa - (fa * yb + fb * ya))
                ri[j] = _gi_div(num, prev) if prev != (1, 0) else num
            ri[c] = (0, 0)
        prev = (pa, pb)
        pivots.append(c)
        r += 1
    return pivots, order[:r]


def rank(M: Matrix) -> int:
    """Exact rank by fraction-free elimination."""
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(_bareiss(M)[0])


@dataclass(frozen=True)
class KernelReport:
    """Rank and reduced-echelon kernel basis of a matrix."""

    rank: int
    kernel_dim: int
    kernel_basis: tuple
    pivot_columns: tuple
    cols: int

    def basis_matrix(self) -> Matrix:
        """Kernel basis as the columns of one matrix (cols x kernel_dim)."""
        if not self.kernel_basis:
            return Matrix.zeros(self.cols, 0)
        return Matrix.hstack(self.kernel_basis)


def _rref(rows: list[list[Scalar]], pivots: list[int]) -> list[list[Scalar]]:
    """Reduce an echelon system with known pivots to reduced echelon form."""
    out = []
    rows = [list(r) for r in rows]
    for k, c in enumerate(pivots):
        # eliminate column c from the independent rows below the pivot
        p = rows[k][c]
        rows[k] = [x / p for x in rows[k]]
        for i in range(len(rows)):
            if i != k and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[k])]
    out = rows[:len(pivots)]
    return out


def rank_and_kernel(M: Matrix) -> KernelReport:
    """Exact rank and deterministic kernel basis of ``M``.

    The rank and the set of pivot columns come from Bareiss elimination over
    Z[i].  The independent rows it selects are then reduced to echelon form
    over the Gaussian rationals and back-substituted, one basis vector per
    free column (that column set to 1, the other free columns to 0).  Every
    basis vector is multiplied back through ``M`` before being returned.
    """
    if M.rows == 0 or M.cols == 0:
        raise ValueError("rank_and_kernel needs a nonempty matrix")
    pivots, used = _bareiss(M)
    # Gaussian elimination on the selected rows in original order reproduces
    # the same pivot columns because they are independent and span the row space.
    sub = [list(M.row(i)) for i in sorted(used)]
    ech = _echelon(sub)
    piv2 = [next(j for j, x in enumerate(r) if x) for r in ech]
    if piv2 != pivots:
        raise ExactArithmeticError("pivot mismatch between elimination passes")
    red = _rref(ech, pivots)
    free = [j for j in range(M.cols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * M.cols
        v[f] = ONE
        for k, c in enumerate(pivots):
            v[c] = -red[k][f]
        vec = Matrix.column(v)
        if not (M @ vec).is_zero():
            raise ExactArithmeticError("kernel vector failed verification")
        basis.append(vec)
    return KernelReport(len(pivots), len(free), tuple(basis), tuple(pivots), M.cols)


def _echelon(rows: list[list[Scalar]]) -> list[list[Scalar]]:
    rows = [list(r) for r in rows]
    n = len(rows)
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, n) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, n):
            f = rows[i][c]
            if f:
                f = f / p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return rows[:r]


def _as_columns(vectors) -> list[Matrix]:
    if isinstance(vectors, Matrix):
        return vectors.columns()
    return list(vectors)


def same_subspace(basis_a, basis_b) -> bool:
    """True iff the two families of column vectors span the same space."""
    a, b = _as_columns(basis_a), _as_columns(basis_b)
    lengths = {v.rows for v in a + b}
    if len(lengths) > 1:
        raise ShapeError("same_subspace", (min(lengths), 1), (max(lengths), 1))
    if not a or not b:
        return all(v.is_zero() for v in a + b)
    ra = rank(Matrix.hstack(a))
    rb = rank(Matrix.hstack(b))
    return ra == rb == rank(Matrix.hstack(a + b))


def span_contains(basis, vectors) -> bool:
    """True iff every vector in ``vectors`` lies in the span of ``basis``."""
    a, v = _as_columns(basis), _as_columns(vectors)
    if not v:
        return True
    if not a:
        return all(x.is_zero() for x in v)
    return rank(Matrix.hstack(a)) == rank(Matrix.hstack(a + v))
