"""Exact scalars and dense matrices over Q and Q(i).

Rationals are :class:`fractions.Fraction`.  :class:`GaussianRational` adds an
imaginary part, and :class:`ExactMatrix` is an immutable row-major matrix of
Gaussian rationals.  Nothing in this module ever rounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction, "GaussianRational"]

DEFAULT_SEED = 20240611


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value: Scalar) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value), Fraction(0))
        if isinstance(value, complex):
            raise TypeError("floating point complex values are not exact")
        raise TypeError(f"cannot coerce {value!r} to GaussianRational")

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Squared modulus ``|z|^2``."""
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I_UNIT = GaussianRational(0, 1)


def gq(re=0, im=0) -> GaussianRational:
    return GaussianRational(Fraction(re), Fraction(im))


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        entries = tuple(GaussianRational.coerce(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    # construction ---------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence[Scalar]) -> "ExactMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Sequence[Scalar]) -> "ExactMatrix":
        return cls(len(values), 1, tuple(values))

    @classmethod
    def block_diag(cls, *blocks: "ExactMatrix") -> "ExactMatrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[ZERO] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(out)

    # access -----------------------------------------------------------------

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix.from_rows([[self[i, j] for j in cols] for i in rows])

    # arithmetic -------------------------------------------------------------

    def _same_shape(self, other: "ExactMatrix", op: str):
        if self.shape != other.shape:
            raise DimensionError(f"cannot {op} {self.rows}x{self.cols} and {other.rows}x{other.cols}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other, "add")
        return ExactMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other, "subtract")
        return ExactMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: Scalar) -> "ExactMatrix":
        c = GaussianRational.coerce(c)
        return ExactMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def conj(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(a.conj() for a in self.entries))

    def conj_transpose(self) -> "ExactMatrix":
        return self.conj().transpose()

    @property
    def H(self) -> "ExactMatrix":
        return self.conj_transpose()

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_real(self) -> bool:
        return all(a.im == 0 for a in self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_unitary(self) -> bool:
        return self.is_square() and self.H @ self == ExactMatrix.identity(self.rows)

    def is_skew_hermitian(self) -> bool:
        return self.is_square() and self.H == -self

    def trace(self) -> GaussianRational:
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), ZERO)

    def det(self) -> GaussianRational:
        if not self.is_square():
            raise DimensionError(f"determinant of non-square {self.rows}x{self.cols} matrix")
        m = self.to_rows()
        n = self.rows
        d = ONE
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c]), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            piv = m[c][c]
            d = d * piv
            inv = piv.inverse()
            for r in range(c + 1, n):
                f = m[r][c] * inv
                if f:
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return d

    def inverse(self) -> "ExactMatrix":
        if not self.is_square():
            raise DimensionError(f"inverse of non-square {self.rows}x{self.cols} matrix")
        n = self.rows
        aug = [self.row(i) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for c in range(n):
            p = next((r for r in range(c, n) if aug[r][c]), None)
            if p is None:
                raise SingularMatrixError("matrix is singular")
            aug[c], aug[p] = aug[p], aug[c]
            inv = aug[c][c].inverse()
            aug[c] = [inv * a for a in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
        return ExactMatrix.from_rows([r[n:] for r in aug])

    def rank(self) -> int:
        return len(_rref(self.to_rows())[1])

    def __str__(self):
        return "[" + ",\n ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.to_rows()) + "]"


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Exact product ``a @ b``."""
    if a.cols != b.rows:
        raise DimensionError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}: inner dimensions differ"
        )
    bcols = [b.col(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.row(i)
        for col in bcols:
            acc = ZERO
            for x, y in zip(r, col):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
    return ExactMatrix(a.rows, b.cols, tuple(out))


def kronecker(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product; block ``(i, j)`` of the result is ``a[i, j] * b``."""
    rows = []
    for i in range(a.rows):
        for k in range(b.rows):
            rows.append([a[i, j] * b[k, l] for j in range(a.cols) for l in range(b.cols)])
    return ExactMatrix(a.rows * b.rows, a.cols * b.cols, tuple(e for r in rows for e in r))


def _rref(rows: list) -> tuple:
    """Reduced row echelon form; pivots chosen as the first nonzero entry in column order."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        m[r] = [inv * x for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(m: ExactMatrix) -> list:
    """Basis of the right nullspace of ``m`` over Q(i), as column vectors.

    One basis vector per free column, with a 1 in that column, so the basis is
    deterministic for a given matrix.
    """
    if m.rows == 0:
        return [ExactMatrix.column([ONE if i == j else ZERO for i in range(m.cols)]) for j in range(m.cols)]
    red, pivots = _rref(m.to_rows())
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        basis.append(ExactMatrix.column(v))
    return basis


def rank_of_vectors(vectors: Iterable[Sequence[Scalar]]) -> int:
    rows = [[GaussianRational.coerce(x) for x in v] for v in vectors]
    if not rows:
        return 0
    return len(_rref(rows)[1])


def cayley_unitary(s: ExactMatrix) -> ExactMatrix:
    """Cayley transform ``(I - s)(I + s)^-1`` of a skew-Hermitian matrix.

    The result is unitary with entries in Q(i).  Because ``s`` has purely
    imaginary spectrum, ``I + s`` is never singular for a genuine
    skew-Hermitian input.
    """
    if not s.is_skew_hermitian():
        raise ValueError("cayley_unitary needs a skew-Hermitian matrix (s^H = -s)")
    ident = ExactMatrix.identity(s.rows)
    try:
        inv = (ident + s).inverse()
    except SingularMatrixError as exc:
        raise SingularMatrixError("I + s is singular; resample s") from exc
    return (ident - s) @ inv


def random_rational(rng: random.Random, bound: int = 3, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_gaussian(rng: random.Random, bound: int = 3, max_den: int = 3) -> GaussianRational:
    return GaussianRational(random_rational(rng, bound, max_den), random_rational(rng, bound, max_den))


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int = 3) -> ExactMatrix:
    return ExactMatrix(rows, cols, tuple(random_gaussian(rng, bound) for _ in range(rows * cols)))


def random_skew_hermitian(rng: random.Random, n: int, bound: int = 3) -> ExactMatrix:
    a = random_matrix(rng, n, n, bound)
    return a - a.H


def circle_point(t: Fraction) -> tuple:
    """Rational point ``((1-t^2)/(1+t^2), 2t/(1+t^2))`` on the unit circle."""
    t = Fraction(t)
    d = 1 + t * t
    return (1 - t * t) / d, 2 * t / d


def sphere3_point(v: Sequence[Fraction]) -> tuple:
    """Rational point on S^3 in C^2 by inverse stereographic projection of ``v`` in Q^3.

    Returns ``(z, w)`` with ``|z|^2 + |w|^2 = 1``.
    """
    a, b, c = (Fraction(x) for x in v)
    s = a * a + b * b + c * c
    d = 1 + s
    z = GaussianRational((1 - s) / d, 2 * a / d)
    w = GaussianRational(2 * b / d, 2 * c / d)
    return z, w


def real_linear_kernel(fn, n_unknowns: int) -> list:
    """R-basis of the kernel of an R-linear map ``fn: Q(i)^n -> Q(i)^m``.

    Each complex unknown is split into real and imaginary parts, so maps that
    mix ``u`` with ``conj(u)`` are handled.  ``fn`` takes and returns flat lists
    of Gaussian rationals.  Returned vectors are lists of length ``n_unknowns``.
    """
    columns = []
    for k in range(2 * n_unknowns):
        x = [ZERO] * n_unknowns
        x[k // 2] = ONE if k % 2 == 0 else I_UNIT
        y = fn(x)
        columns.append([c for z in y for c in (z.re, z.im)])
    nrows = len(columns[0]) if columns else 0
    real = ExactMatrix(nrows, 2 * n_unknowns, tuple(columns[j][i] for i in range(nrows) for j in range(2 * n_unknowns)))
    out = []
    for v in nullspace(real):
        col = v.col(0)
        out.append([GaussianRational(col[2 * i].re, col[2 * i + 1].re) for i in range(n_unknowns)])
    return out


def realify(vec: Sequence[GaussianRational]) -> list:
    """Flatten a complex vector to its interleaved real coordinates."""
    return [c for z in vec for c in (z.re, z.im)]
