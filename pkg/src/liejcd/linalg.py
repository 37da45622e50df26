"""Exact linear algebra over the rationals.

Scalars are :class:`gmpy2.mpq` values (exact, always in lowest terms with a
positive denominator).  Vectors are plain tuples of scalars; matrices are
:class:`QMatrix` instances.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import LinearlyDependentBasis, ValidationError

Rational = type(mpq())
Vector = tuple

ZERO = mpq(0)
ONE = mpq(1)


def rational(value) -> Rational:
    """Coerce ``value`` to an exact rational.

    Accepts ints, :class:`fractions.Fraction`, mpq and strings of the form
    ``"n"`` or ``"p/q"``.  Floats are rejected outright.
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise ValidationError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                num, den = int(num), int(den)
                if den == 0:
                    raise ZeroDivisionError
                return mpq(num, den)
            return mpq(int(text))
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"not a rational number: {value!r}") from None
    if isinstance(value, _RationalABC):
        return mpq(int(value.numerator), int(value.denominator))
    raise ValidationError(f"not a rational number: {value!r}")


def format_rational(x) -> str:
    """Serialize as ``"p/q"`` or ``"n"``."""
    return str(rational(x))


def vector(values: Iterable) -> Vector:
    return tuple(rational(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def vadd(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def linear_combination(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


class QMatrix:
    """Dense immutable rational matrix stored as a tuple of row tuples."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(rational(x) for x in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValidationError("ragged matrix rows")
        else:
            width = cols or 0
        self._data = rows
        self.rows = len(rows)
        self.cols = width
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple, cols: int) -> "QMatrix":
        # trusted constructor: rows already tuples of mpq
        m = object.__new__(cls)
        m._data = rows
        m.rows = len(rows)
        m.cols = cols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "QMatrix":
        cols = rows if cols is None else cols
        return cls._raw(tuple((ZERO,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls._raw(tuple(unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def diag(cls, entries: Sequence) -> "QMatrix":
        n = len(entries)
        rows = []
        for i, d in enumerate(entries):
            r = [ZERO] * n
            r[i] = rational(d)
            rows.append(tuple(r))
        return cls._raw(tuple(rows), n)

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "QMatrix":
        """Elementary matrix with a single 1 at (i, j), zero-based."""
        rows = [[ZERO] * n for _ in range(n)]
        rows[i][j] = ONE
        return cls._raw(tuple(tuple(r) for r in rows), n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "QMatrix":
        if not columns:
            return cls._raw(tuple(() for _ in range(rows)), 0)
        return cls._raw(tuple(zip(*(vector(c) for c in columns))), len(columns))

    @classmethod
    def from_flat(cls, flat: Sequence, rows: int, cols: int) -> "QMatrix":
        return cls._raw(tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows)), cols)

    @classmethod
    def block_diag(cls, *blocks: "QMatrix") -> "QMatrix":
        n = sum(b.cols for b in blocks)
        out = []
        offset = 0
        for b in blocks:
            for row in b._data:
                out.append((ZERO,) * offset + row + (ZERO,) * (n - offset - b.cols))
            offset += b.cols
        return cls._raw(tuple(out), n)

    # -- access ---------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        """Row-major flat tuple of entries."""
        return tuple(x for row in self._data for x in row)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    # -- algebra --------------------------------------------------------
    def _check_same_shape(self, other: "QMatrix") -> None:
        if self.shape != other.shape:
            raise ValidationError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other)
        return QMatrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other)
        return QMatrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix._raw(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def scale(self, c) -> "QMatrix":
        c = rational(c)
        return QMatrix._raw(tuple(tuple(c * a for a in r) for r in self._data), self.cols)

    def __rmul__(self, c) -> "QMatrix":
        return self.scale(c)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValidationError(f"cannot multiply {self.shape} by {other.shape}")
        n = other.cols
        odata = other._data
        out = []
        for row in self._data:
            acc = [ZERO] * n
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(odata[k]):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return QMatrix._raw(tuple(out), n)

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product ``self · v``."""
        if len(v) != self.cols:
            raise ValidationError(f"vector of length {len(v)} for {self.shape} matrix")
        nz = [(k, a) for k, a in enumerate(v) if a]
        return tuple(sum((r[k] * a for k, a in nz), ZERO) for r in self._data)

    def transpose(self) -> "QMatrix":
        if not self.rows:
            return QMatrix._raw(tuple(() for _ in range(self.cols)), 0)
        return QMatrix._raw(tuple(zip(*self._data)), self.rows)

    T = property(transpose)

    def commutator(self, other: "QMatrix") -> "QMatrix":
        return self @ other - other @ self

    def trace(self):
        return sum((self._data[i][i] for i in range(min(self.rows, self.cols))), ZERO)

    def __pow__(self, k: int) -> "QMatrix":
        if not self.is_square or k < 0:
            raise ValidationError("power needs a square matrix and k >= 0")
        result = QMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def kron(self, other: "QMatrix") -> "QMatrix":
        out = []
        for r in self._data:
            for s in other._data:
                out.append(tuple(a * b for a in r for b in s))
        return QMatrix._raw(tuple(out), self.cols * other.cols)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    def is_upper_triangular(self) -> bool:
        return all(not self._data[i][j] for i in range(self.rows) for j in range(min(i, self.cols)))

    def is_diagonal(self) -> bool:
        return all(
            not self._data[i][j] for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def inverse(self) -> "QMatrix":
        if not self.is_square:
            raise ValidationError("only square matrices can be inverted")
        n = self.rows
        aug = QMatrix._raw(
            tuple(r + unit_vector(n, i) for i, r in enumerate(self._data)), 2 * n
        )
        red, pivots, rank = rref(aug)
        if rank < n or pivots[n - 1] != n - 1:
            raise ValidationError("matrix is singular")
        return QMatrix._raw(tuple(r[n:] for r in red._data), n)

    def rank(self) -> int:
        return rref(self)[2]

    def determinant(self):
        if not self.is_square:
            raise ValidationError("determinant of a non-square matrix")
        rows = [list(r) for r in self._data]
        n = self.rows
        det = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if rows[i][c]), None)
            if p is None:
                return ZERO
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = -det
            pivot = rows[c][c]
            det *= pivot
            for i in range(c + 1, n):
                f = rows[i][c]
                if f:
                    f = f / pivot
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return det

    # -- dunder ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.cols == other.cols and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"QMatrix([{body}])"


def as_matrix(m) -> QMatrix:
    return m if isinstance(m, QMatrix) else QMatrix(m)


def rref(m: QMatrix) -> tuple[QMatrix, list[int], int]:
    """Reduced row echelon form, pivot columns and rank of ``m``."""
    m = as_matrix(m)
    rows = [list(r) for r in m]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = ONE / pr[c]
        if inv != ONE:
            pr = [a * inv for a in pr]
            rows[r] = pr
        nz = [(j, a) for j, a in enumerate(pr) if a and j >= c]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j, a in nz:
                        ri[j] -= f * a
        pivots.append(c)
        r += 1
    return QMatrix._raw(tuple(tuple(x) for x in rows), ncols), pivots, len(pivots)


def solve_linear(a: QMatrix, b: Sequence) -> Vector | None:
    """Solve ``a · x = b`` exactly.

    Returns ``None`` when the system is inconsistent.  Free variables of an
    underdetermined system are set to zero.
    """
    a = as_matrix(a)
    if a.rows != len(b):
        raise ValidationError(f"right-hand side has length {len(b)}, expected {a.rows}")
    b = vector(b)
    aug = QMatrix._raw(tuple(r + (c,) for r, c in zip(a, b)), a.cols + 1)
    red, pivots, _ = rref(aug)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [ZERO] * a.cols
    for i, p in enumerate(pivots):
        x[p] = red[i, a.cols]
    return tuple(x)


class Subspace:
    """A subspace of Q^n held by its canonical reduced-row-echelon basis.

    Two subspaces are equal exactly when their stored bases are equal.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: tuple, pivots: tuple):
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vecs = [vector(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValidationError(f"vector of length {len(v)} in Q^{ambient_dim}")
        vecs = [v for v in vecs if any(v)]
        if not vecs:
            return cls.zero(ambient_dim)
        red, pivots, rank = rref(QMatrix._raw(tuple(vecs), ambient_dim))
        return cls(ambient_dim, tuple(red.row(i) for i in range(rank)), tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(
            ambient_dim,
            tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)),
            tuple(range(ambient_dim)),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence) -> Vector:
        """Representative of ``v`` modulo this subspace that vanishes on the pivots."""
        out = list(v)
        for p, b in zip(self.pivots, self.basis):
            c = out[p]
            if c:
                for k in range(p, self.ambient_dim):
                    if b[k]:
                        out[k] -= c * b[k]
        return tuple(out)

    def coordinates(self, v: Sequence) -> Vector | None:
        if len(v) != self.ambient_dim:
            raise ValidationError(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        coords = tuple(rational(v[p]) for p in self.pivots)
        if linear_combination(coords, self.basis, self.ambient_dim) != tuple(v):
            return None
        return coords

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(b in self for b in other.basis)

    def complement_indices(self) -> tuple[int, ...]:
        """Coordinates not used as pivots; their unit vectors span a complement."""
        ps = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in ps)

    def annihilator(self) -> QMatrix:
        """Matrix whose kernel is exactly this subspace."""
        if not self.basis:
            return QMatrix.identity(self.ambient_dim)
        k = kernel(QMatrix._raw(self.basis, self.ambient_dim))
        return QMatrix._raw(k.basis, self.ambient_dim) if k.basis else QMatrix.zeros(0, self.ambient_dim)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        vecs = ", ".join("(" + ", ".join(str(x) for x in b) + ")" for b in self.basis)
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim}: {vecs})"


def kernel(a: QMatrix) -> Subspace:
    """Null space ``{x : a·x = 0}`` as a canonical subspace."""
    a = as_matrix(a)
    red, pivots, _ = rref(a)
    pivot_set = set(pivots)
    vecs = []
    for f in range(a.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * a.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        vecs.append(v)
    return Subspace.span(vecs, a.cols)


def image(a: QMatrix) -> Subspace:
    """Column space of ``a``."""
    a = as_matrix(a)
    return Subspace.span((a.column(j) for j in range(a.cols)), a.rows)


def coordinates_in(s: Subspace, v: Sequence) -> Vector | None:
    return s.coordinates(v)


def _check_ambient(s1: Subspace, s2: Subspace) -> None:
    if s1.ambient_dim != s2.ambient_dim:
        raise ValidationError(f"ambient dimensions differ: {s1.ambient_dim} vs {s2.ambient_dim}")


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    _check_ambient(s1, s2)
    return Subspace.span(s1.basis + s2.basis, s1.ambient_dim)


def subspace_intersect(s1: Subspace, s2: Subspace) -> Subspace:
    _check_ambient(s1, s2)
    n = s1.ambient_dim
    stacked = s1.annihilator().tolist() + s2.annihilator().tolist()
    if not stacked:
        return Subspace.full(n)
    return kernel(QMatrix(stacked))


class CoordinateMap:
    """Coordinates with respect to a fixed list of linearly independent vectors.

    Precomputes an invertible square minor so each query costs one small
    matrix-vector product plus an exact membership check.
    """

    def __init__(self, columns: Sequence[Sequence], ambient_dim: int):
        self.columns = tuple(vector(c) for c in columns)
        self.ambient_dim = ambient_dim
        k = len(self.columns)
        if k == 0:
            self._rows: list[int] = []
            self._inv = QMatrix.zeros(0, 0)
            return
        m = QMatrix.from_columns(self.columns, ambient_dim)
        _, pivots, rank = rref(m.transpose())
        if rank != k:
            raise LinearlyDependentBasis(f"{k} vectors span only a {rank}-dimensional space")
        # pivot columns of the transpose are independent rows of m
        self._rows = pivots
        self._inv = QMatrix._raw(tuple(m.row(i) for i in pivots), k).inverse()

    def __call__(self, v: Sequence) -> Vector | None:
        if len(v) != self.ambient_dim:
            raise ValidationError(f"vector of length {len(v)}, expected {self.ambient_dim}")
        if not self.columns:
            return () if not any(v) else None
        coords = self._inv.apply(tuple(v[i] for i in self._rows))
        if linear_combination(coords, self.columns, self.ambient_dim) != tuple(v):
            return None
        return coords
