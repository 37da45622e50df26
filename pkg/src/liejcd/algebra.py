"""Finite-dimensional Lie algebras over Q given by structure constants.

An algebra may additionally carry a *realization*: one square matrix per
basis element, in which case brackets agree with matrix commutators.
Elements are coordinate vectors in the algebra basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LinearlyDependentBasis, NotClosed, ValidationError
from .linalg import (
    ZERO,
    CoordinateMap,
    QMatrix,
    Subspace,
    Vector,
    as_matrix,
    kernel,
    linear_combination,
    vector,
)


class LieAlgebra:
    """Lie algebra with basis ``b_0 .. b_{dim-1}``.

    ``structure_constants[i][j]`` is the coordinate vector of ``[b_i, b_j]``.
    Antisymmetry and the Jacobi identity are checked on construction.
    """

    def __init__(
        self,
        structure_constants: Sequence[Sequence[Sequence]],
        realization: Sequence[QMatrix] | None = None,
        *,
        check: bool = True,
    ):
        dim = len(structure_constants)
        table = []
        for i, row in enumerate(structure_constants):
            if len(row) != dim:
                raise ValidationError(f"structure constant row {i} has {len(row)} entries, expected {dim}")
            out_row = []
            for j, v in enumerate(row):
                v = vector(v)
                if len(v) != dim:
                    raise ValidationError(f"bracket [{i},{j}] has {len(v)} coordinates, expected {dim}")
                out_row.append(v)
            table.append(tuple(out_row))
        self.dim = dim
        self.structure_constants = tuple(table)
        # sparse table of nonzero brackets, used by bracket()
        self._terms = [
            (i, j, [(k, c) for k, c in enumerate(v) if c])
            for i, row in enumerate(self.structure_constants)
            for j, v in enumerate(row)
            if any(v)
        ]
        self._ad_basis = tuple(
            QMatrix.from_columns(self.structure_constants[i], dim) if dim else QMatrix.zeros(0)
            for i in range(dim)
        )
        self.realization: tuple[QMatrix, ...] | None = None
        self.ambient_dim: int | None = None
        self._coord_map: CoordinateMap | None = None
        if realization is not None:
            mats = tuple(as_matrix(m) for m in realization)
            if len(mats) != dim:
                raise ValidationError(f"{len(mats)} realization matrices for a {dim}-dimensional algebra")
            self.realization = mats
            self.ambient_dim = mats[0].rows if mats else 0
            self._coord_map = _matrix_coordinate_map(mats, self.ambient_dim)
        if check:
            self._check_axioms()

    # -- construction ---------------------------------------------------
    @classmethod
    def from_brackets(cls, dim: int, brackets: Sequence[tuple[int, int, Sequence]]) -> "LieAlgebra":
        """Build from ``(i, j, coords)`` triples with ``i < j``; all other brackets vanish."""
        zero = (ZERO,) * dim
        table = [[zero] * dim for _ in range(dim)]
        for i, j, coords in brackets:
            if not (0 <= i < j < dim):
                raise ValidationError(f"bracket index pair ({i}, {j}) must satisfy 0 <= i < j < {dim}")
            v = vector(coords)
            if len(v) != dim:
                raise ValidationError(f"bracket ({i}, {j}) has {len(v)} coordinates, expected {dim}")
            table[i][j] = v
            table[j][i] = tuple(-c for c in v)
        return cls(table)

    @property
    def is_matrix_mode(self) -> bool:
        return self.realization is not None

    def without_realization(self) -> "LieAlgebra":
        return LieAlgebra(self.structure_constants, check=False)

    def _check_axioms(self) -> None:
        n = self.dim
        c = self.structure_constants
        for i in range(n):
            if any(c[i][i]):
                raise ValidationError(f"[b{i}, b{i}] is nonzero")
            for j in range(i + 1, n):
                if tuple(-x for x in c[j][i]) != c[i][j]:
                    raise ValidationError(f"structure constants not antisymmetric at ({i}, {j})")
        # Jacobi on all basis triples <=> ad([b_i, b_j]) = [ad b_i, ad b_j]
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.ad(c[i][j])
                rhs = self._ad_basis[i].commutator(self._ad_basis[j])
                if lhs != rhs:
                    raise ValidationError(f"Jacobi identity fails for basis elements {i}, {j}")
        if self.realization is not None:
            for i in range(n):
                for j in range(i + 1, n):
                    comm = self.realization[i].commutator(self.realization[j])
                    if comm != self.realize(c[i][j]):
                        raise ValidationError(
                            f"realization commutator of ({i}, {j}) disagrees with structure constants"
                        )

    # -- elements -------------------------------------------------------
    def _check_vec(self, x: Sequence) -> Vector:
        if len(x) != self.dim:
            raise ValidationError(f"element has {len(x)} coordinates, algebra has dimension {self.dim}")
        return vector(x)

    def basis_vector(self, i: int) -> Vector:
        v = [ZERO] * self.dim
        v[i] = 1
        return vector(v)

    def zero(self) -> Vector:
        return (ZERO,) * self.dim

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        x = self._check_vec(x)
        y = self._check_vec(y)
        out = [ZERO] * self.dim
        for i, j, terms in self._terms:
            xi = x[i]
            if xi:
                w = xi * y[j]
                if w:
                    for k, c in terms:
                        out[k] += w * c
        return tuple(out)

    def ad(self, x: Sequence) -> QMatrix:
        """Matrix of ``y ↦ [x, y]`` in the algebra basis."""
        x = self._check_vec(x)
        n = self.dim
        acc = [[ZERO] * n for _ in range(n)]
        for i, xi in enumerate(x):
            if xi:
                for r, row in enumerate(self._ad_basis[i]):
                    for col, a in enumerate(row):
                        if a:
                            acc[r][col] += xi * a
        return QMatrix._raw(tuple(tuple(r) for r in acc), n)

    def ad_basis(self, i: int) -> QMatrix:
        return self._ad_basis[i]

    def realize(self, x: Sequence) -> QMatrix:
        """Matrix of ``x`` under the realization (matrix mode only)."""
        if self.realization is None:
            raise ValidationError("algebra has no matrix realization")
        x = self._check_vec(x)
        n = self.ambient_dim
        acc = [[ZERO] * n for _ in range(n)]
        for xi, m in zip(x, self.realization):
            if xi:
                for r, row in enumerate(m):
                    for col, a in enumerate(row):
                        if a:
                            acc[r][col] += xi * a
        return QMatrix._raw(tuple(tuple(r) for r in acc), n)

    def matrix_coordinates(self, m: QMatrix) -> Vector | None:
        """Coordinates of a matrix in the realization span, or None if outside it."""
        if self._coord_map is None:
            raise ValidationError("algebra has no matrix realization")
        m = as_matrix(m)
        if m.shape != (self.ambient_dim, self.ambient_dim):
            raise ValidationError(f"matrix of shape {m.shape}, realization is {self.ambient_dim}x{self.ambient_dim}")
        return self._coord_map(m.entries)

    def span(self, vectors) -> Subspace:
        return Subspace.span(vectors, self.dim)

    def bracket_subspaces(self, a: Subspace, b: Subspace) -> Subspace:
        """Span of ``[u, v]`` over basis vectors ``u`` of ``a`` and ``v`` of ``b``."""
        return self.span(self.bracket(u, v) for u in a.basis for v in b.basis)

    def __repr__(self) -> str:
        mode = f"matrix, n={self.ambient_dim}" if self.is_matrix_mode else "structure"
        return f"LieAlgebra(dim={self.dim}, {mode})"


@dataclass(frozen=True)
class Ideal:
    subspace: Subspace
    parent: LieAlgebra

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def basis(self) -> tuple:
        return self.subspace.basis

    def __contains__(self, v) -> bool:
        return v in self.subspace

    def is_ideal(self) -> bool:
        g = self.parent
        return all(
            g.bracket(g.basis_vector(i), v) in self.subspace
            for i in range(g.dim)
            for v in self.subspace.basis
        )


def _matrix_coordinate_map(mats: Sequence[QMatrix], n: int) -> CoordinateMap:
    for k, m in enumerate(mats):
        if m.shape != (n, n):
            raise ValidationError(f"basis matrix {k} has shape {m.shape}, expected {n}x{n}")
    return CoordinateMap([m.entries for m in mats], n * n)


def from_matrices(mats: Sequence) -> LieAlgebra:
    """Lie algebra spanned by the given square matrices.

    Raises :class:`NotClosed` with the first offending pair if some commutator
    leaves the span, and :class:`LinearlyDependentBasis` for a redundant basis.
    """
    mats = [as_matrix(m) for m in mats]
    if not mats:
        raise ValidationError("need at least one basis matrix")
    n = mats[0].rows
    coords = _matrix_coordinate_map(mats, n)
    dim = len(mats)
    zero = (ZERO,) * dim
    table = [[zero] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            c = coords(mats[i].commutator(mats[j]).entries)
            if c is None:
                raise NotClosed((i, j))
            table[i][j] = c
            table[j][i] = tuple(-x for x in c)
    return LieAlgebra(table, realization=mats)


def lie_closure(mats: Sequence) -> list[QMatrix]:
    """Extend the basis by iterated commutators until the span is closed.

    The given matrices (minus any linearly dependent ones) come first, so
    their indices are preserved when they were independent to begin with.
    """
    mats = [as_matrix(m) for m in mats]
    if not mats:
        raise ValidationError("need at least one basis matrix")
    n = mats[0].rows
    basis: list[QMatrix] = []
    span = Subspace.zero(n * n)

    def add(m: QMatrix) -> bool:
        nonlocal span
        if m.entries in span:
            return False
        basis.append(m)
        span = Subspace.span(span.basis + (m.entries,), n * n)
        return True

    for m in mats:
        add(m)
    i = 0
    while i < len(basis):
        for j in range(i):
            add(basis[j].commutator(basis[i]))
        i += 1
    return basis


def derived_algebra(g: LieAlgebra) -> Ideal:
    n = g.dim
    vecs = [g.structure_constants[i][j] for i in range(n) for j in range(i + 1, n)]
    return Ideal(g.span(vecs), g)


def killing_gram(g: LieAlgebra) -> QMatrix:
    """Gram matrix of the Killing form, entry (i, j) = trace(ad b_i · ad b_j)."""
    n = g.dim
    ads = [g.ad_basis(i) for i in range(n)]
    # trace(A B) = sum_{k,l} A[k][l] * B[l][k]
    transposed = [m.transpose() for m in ads]
    gram = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = ZERO
            for ra, rb in zip(ads[i], transposed[j]):
                for a, b in zip(ra, rb):
                    if a and b:
                        t += a * b
            gram[i][j] = gram[j][i] = t
    return QMatrix._raw(tuple(tuple(r) for r in gram), n)


def killing_form(g: LieAlgebra, x: Sequence, y: Sequence):
    return (g.ad(x) @ g.ad(y)).trace()


def solvable_radical(g: LieAlgebra) -> Ideal:
    """Killing-orthogonal complement of ``[g, g]`` (Cartan's criterion, char 0)."""
    d = derived_algebra(g)
    if not d.basis:
        return Ideal(Subspace.full(g.dim), g)
    gram = killing_gram(g)
    rows = [gram.apply(v) for v in d.basis]
    return Ideal(kernel(QMatrix(rows)), g)


def center(g: LieAlgebra) -> Ideal:
    if g.dim == 0:
        return Ideal(Subspace.zero(0), g)
    rows = [row for i in range(g.dim) for row in g.ad_basis(i)]
    return Ideal(kernel(QMatrix(rows)), g)


def derived_series(g: LieAlgebra, start: Subspace | None = None) -> list[Subspace]:
    """``start ⊇ [start, start] ⊇ ...`` until it stabilizes (last entry repeats nothing)."""
    current = Subspace.full(g.dim) if start is None else start
    series = [current]
    while current.dim:
        nxt = g.bracket_subspaces(current, current)
        if nxt == current:
            break
        series.append(nxt)
        current = nxt
    return series


def is_solvable(g: LieAlgebra, sub: Subspace | None = None) -> bool:
    return derived_series(g, sub)[-1].dim == 0


def quotient_indices(ideal: Subspace) -> tuple[int, ...]:
    """Coordinates spanning the standard complement used for quotient algebras."""
    return ideal.complement_indices()


def quotient_algebra(g: LieAlgebra, ideal: Subspace) -> LieAlgebra:
    """``g / ideal`` on the basis of unit vectors at the non-pivot coordinates."""
    idx = quotient_indices(ideal)
    table = []
    for i in idx:
        row = []
        for j in idx:
            red = ideal.reduce(g.structure_constants[i][j])
            row.append(tuple(red[k] for k in idx))
        table.append(row)
    return LieAlgebra(table, check=False)


def subalgebra(g: LieAlgebra, basis: Sequence[Sequence]) -> LieAlgebra:
    """Structure constants of the subalgebra with the given (independent) basis."""
    cmap = CoordinateMap(basis, g.dim)
    table = []
    for u in basis:
        row = []
        for v in basis:
            c = cmap(g.bracket(u, v))
            if c is None:
                raise ValidationError("basis does not span a subalgebra")
            row.append(c)
        table.append(row)
    realization = None
    if g.is_matrix_mode:
        realization = [g.realize(u) for u in basis]
    return LieAlgebra(table, realization=realization, check=False)


def is_nondegenerate(gram: QMatrix) -> bool:
    return gram.rank() == gram.rows

