"""Abstract Jordan-Chevalley decomposition of elements of ``[g, g]``.

Pipeline for ``x ∈ [g, g]`` with a Levi decomposition ``g = s ⋉ r`` and
``n = [g, r]``:

1. split ``x = a + r`` with ``a`` in the Levi subalgebra and ``r ∈ n``;
2. decompose ``a = s + n`` inside the (semisimple) Levi subalgebra;
3. split ``n`` into the kernel ``n0`` and image ``n*`` of ``ad s``;
4. solve ``[x, b] = [s, r]`` for ``b ∈ n*``;
5. return ``S = s + b`` and ``N = n + r - b``.

Everything stays over Q: ``n*`` is taken to be ``[s, n]``, which equals the
sum of the nonzero eigenspaces because ``ad s`` acts semisimply on ``n``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import LieAlgebra
from .errors import InternalInvariantViolation, NotInDerivedAlgebra, ValidationError
from .levi import LeviDecomposition, levi_decomposition
from .linalg import (
    ZERO,
    CoordinateMap,
    QMatrix,
    Subspace,
    Vector,
    image,
    kernel,
    linear_combination,
    solve_linear,
    subspace_intersect,
    subspace_sum,
    vadd,
    vector,
    vsub,
)
from .matrix_jcd import is_nilpotent_matrix, is_semisimple_matrix, matrix_jordan_chevalley


@dataclass(frozen=True)
class Internals:
    a: Vector
    r: Vector
    s: Vector
    n: Vector
    b: Vector
    n0: Subspace
    nstar: Subspace


@dataclass(frozen=True)
class AbstractJordanPair:
    element: Vector
    semisimple: Vector
    nilpotent: Vector
    internals: Internals = field(repr=False)


class Decomposer:
    """Caches the Levi decomposition and coordinate maps of one algebra.

    Use this when decomposing many elements of the same algebra;
    :func:`abstract_jordan_chevalley` is the one-shot wrapper.
    """

    def __init__(self, g: LieAlgebra, levi: LeviDecomposition | None = None):
        self.algebra = g
        self.levi = levi or levi_decomposition(g)
        n = g.dim
        ld = self.levi
        self._nil_basis = ld.nilpotent_ideal.basis
        self._split_map = CoordinateMap(ld.levi_basis + self._nil_basis, n)
        self._levi_ad_map = CoordinateMap([g.ad(y).entries for y in ld.levi_basis], n * n)

    # -- stages ---------------------------------------------------------
    def split(self, x: Sequence) -> tuple[Vector, Vector]:
        g = self.algebra
        x = vector(x)
        if len(x) != g.dim:
            raise ValidationError(f"element has {len(x)} coordinates, algebra has dimension {g.dim}")
        coords = self._split_map(x)
        if coords is None:
            d = self.levi.derived.subspace
            residue = tuple(d.reduce(x)[k] for k in d.complement_indices())
            raise NotInDerivedAlgebra(x, residue)
        k = len(self.levi.levi_basis)
        a = linear_combination(coords[:k], self.levi.levi_basis, g.dim)
        r = linear_combination(coords[k:], self._nil_basis, g.dim)
        return a, r

    def jordan_in_levi(self, a: Sequence) -> tuple[Vector, Vector]:
        g = self.algebra
        a = vector(a)
        if a not in self.levi.levi:
            raise ValidationError("element is not in the Levi subalgebra")
        if g.is_matrix_mode:
            pair = matrix_jordan_chevalley(g.realize(a))
            s = g.matrix_coordinates(pair.semisimple)
            if s is None or s not in self.levi.levi:
                raise InternalInvariantViolation("semisimple part of a Levi element left the Levi subalgebra")
        else:
            # ad is injective on the Levi subalgebra (it has trivial center)
            pair = matrix_jordan_chevalley(g.ad(a))
            coeffs = self._levi_ad_map(pair.semisimple.entries)
            if coeffs is None:
                raise InternalInvariantViolation("semisimple part of ad(a) is not ad of a Levi element")
            s = linear_combination(coeffs, self.levi.levi_basis, g.dim)
        n = vsub(a, s)
        if n not in self.levi.levi:
            raise InternalInvariantViolation("nilpotent part of a Levi element left the Levi subalgebra")
        return s, n

    def weight_split(self, s: Sequence) -> tuple[Subspace, Subspace]:
        g = self.algebra
        nil = self.levi.nilpotent_ideal.subspace
        basis = nil.basis
        if not basis:
            return Subspace.zero(g.dim), Subspace.zero(g.dim)
        cols = []
        for v in basis:
            c = nil.coordinates(g.bracket(s, v))
            if c is None:
                raise InternalInvariantViolation("[s, n] is not contained in n")
            cols.append(c)
        restricted = QMatrix.from_columns(cols, len(basis))
        n0 = Subspace.span((linear_combination(k, basis, g.dim) for k in kernel(restricted).basis), g.dim)
        nstar = Subspace.span((linear_combination(k, basis, g.dim) for k in image(restricted).basis), g.dim)
        if subspace_intersect(n0, nstar).dim or n0.dim + nstar.dim != nil.dim:
            raise InternalInvariantViolation("ad(s) is not semisimple on n: kernel and image overlap")
        return n0, nstar

    def solve_commutator_equation(self, x: Sequence, s: Sequence, r: Sequence, nstar: Subspace) -> Vector:
        """The unique ``b ∈ n*`` with ``[x, b] = [s, r]``."""
        g = self.algebra
        target = g.bracket(s, r)
        if target not in nstar:
            raise InternalInvariantViolation("[s, r] does not lie in n*")
        if not nstar.dim:
            if any(target):
                raise InternalInvariantViolation("commutator equation has no solution")
            return g.zero()
        cols = [g.bracket(x, w) for w in nstar.basis]
        system = QMatrix.from_columns(cols, g.dim)
        if system.rank() != nstar.dim:
            raise InternalInvariantViolation("solution of the commutator equation is not unique in n*")
        beta = solve_linear(system, target)
        if beta is None:
            raise InternalInvariantViolation("commutator equation has no solution in n*")
        return linear_combination(beta, nstar.basis, g.dim)

    # -- assembly -------------------------------------------------------
    def decompose(self, x: Sequence) -> AbstractJordanPair:
        g = self.algebra
        x = vector(x)
        a, r = self.split(x)
        s, n = self.jordan_in_levi(a)
        n0, nstar = self.weight_split(s)
        b = self.solve_commutator_equation(x, s, r, nstar)
        big_s = vadd(s, b)
        big_n = vsub(vadd(n, r), b)
        if vadd(big_s, big_n) != x or any(g.bracket(big_s, big_n)):
            raise InternalInvariantViolation("assembled parts do not commute or do not sum to x")
        if g.is_matrix_mode:
            oracle = matrix_jordan_chevalley(g.realize(x))
            if g.realize(big_s) != oracle.semisimple:
                raise InternalInvariantViolation("abstract and matrix decompositions disagree")
        return AbstractJordanPair(x, big_s, big_n, Internals(a, r, s, n, b, n0, nstar))

    # -- certificates ---------------------------------------------------
    def commutator_operator(self, x: Sequence, n0: Subspace, nstar: Subspace) -> QMatrix:
        """Matrix on ``n*`` of ``b ↦`` (``n*``-component of ``[x, b]`` along ``n0``)."""
        g = self.algebra
        k = nstar.dim
        if not k:
            return QMatrix.zeros(0)
        cmap = CoordinateMap(n0.basis + nstar.basis, g.dim)
        cols = []
        for w in nstar.basis:
            c = cmap(g.bracket(x, w))
            if c is None:
                raise InternalInvariantViolation("[x, n*] is not contained in n")
            cols.append(c[n0.dim:])
        return QMatrix.from_columns(cols, k)

    def verify(self, pair: AbstractJordanPair, reps: Sequence = (), samples: int = 50,
               rng: random.Random | None = None) -> dict:
        return verify_decomposition(self, pair, reps, samples=samples, rng=rng)


def split_against_levi(ld: LeviDecomposition, x: Sequence) -> tuple[Vector, Vector]:
    return Decomposer(ld.algebra, ld).split(x)


def jordan_in_levi(ld: LeviDecomposition, a: Sequence) -> tuple[Vector, Vector]:
    return Decomposer(ld.algebra, ld).jordan_in_levi(a)


def weight_split(ld: LeviDecomposition, s: Sequence) -> tuple[Subspace, Subspace]:
    return Decomposer(ld.algebra, ld).weight_split(s)


def solve_commutator_equation(ld: LeviDecomposition, x, s, r, nstar: Subspace) -> Vector:
    return Decomposer(ld.algebra, ld).solve_commutator_equation(x, s, r, nstar)


def abstract_jordan_chevalley(g: LieAlgebra, x: Sequence) -> AbstractJordanPair:
    return Decomposer(g).decompose(x)


def _random_in(sub: Subspace, rng: random.Random, bound: int = 3) -> Vector:
    coeffs = [rng.randint(-bound, bound) for _ in sub.basis]
    return linear_combination(coeffs, sub.basis, sub.ambient_dim)


def verify_decomposition(dec: Decomposer | LieAlgebra, pair: AbstractJordanPair, reps: Sequence = (),
                         samples: int = 50, rng: random.Random | None = None) -> dict:
    """Recheck a decomposition; every entry of the returned report is a bool.

    Per-representation entries are keyed by the representation descriptor.
    """
    from .reps import check_compatibility

    if isinstance(dec, LieAlgebra):
        dec = Decomposer(dec)
    g = dec.algebra
    rng = rng or random.Random(0)
    x, S, N = pair.element, pair.semisimple, pair.nilpotent
    it = pair.internals
    derived = dec.levi.derived.subspace
    report: dict = {
        "sum": vadd(S, N) == x,
        "commute": not any(g.bracket(S, N)),
        "semisimple_in_derived": S in derived,
        "nilpotent_in_derived": N in derived,
    }
    if g.is_matrix_mode:
        report["natural_semisimple"] = is_semisimple_matrix(g.realize(S))
        report["natural_nilpotent"] = is_nilpotent_matrix(g.realize(N))
        oracle = matrix_jordan_chevalley(g.realize(x))
        report["matrix_oracle"] = (g.realize(S), g.realize(N)) == oracle.as_tuple()
    report["representations"] = {
        rep.descriptor: check_compatibility(rep, x, S, N) for rep in reps
    }
    nil = dec.levi.nilpotent_ideal.subspace
    nil_ok = ss_ok = True
    for _ in range(samples):
        b = _random_in(nil, rng)
        y = vadd(it.n, b)
        nil_ok &= all(is_nilpotent_matrix(rep.apply(y)) for rep in reps)
        b = _random_in(it.nstar, rng)
        y = vadd(it.s, b)
        ss_ok &= all(is_semisimple_matrix(rep.apply(y)) for rep in reps)
    report["nilpotent_translates"] = nil_ok
    report["semisimple_translates"] = ss_ok
    op = dec.commutator_operator(x, it.n0, it.nstar)
    report["commutator_operator_invertible"] = op.rows == 0 or op.determinant() != ZERO
    report["n_decomposes"] = (
        subspace_sum(it.n0, it.nstar) == nil and it.n0.dim + it.nstar.dim == nil.dim
    )
    return report


def report_ok(report: dict) -> bool:
    return all(report_ok(v) if isinstance(v, dict) else bool(v) for v in report.values())
