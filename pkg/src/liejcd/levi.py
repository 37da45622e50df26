"""Levi decomposition ``g = s ⋉ r`` by lifting the semisimple quotient.

Start from the standard complement of the radical (unit vectors at the
non-pivot coordinates), which is closed under the bracket modulo ``r``.
Then walk down the derived series ``r = r_0 ⊇ r_1 ⊇ ... ⊇ 0``: at each step
the complement is closed modulo ``r_t`` and a linear correction with values
in ``r_t`` makes it closed modulo ``r_{t+1}``.  Because ``[r_t, r_t] ⊆ r_{t+1}``
the correction equations are linear.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Ideal,
    LieAlgebra,
    derived_algebra,
    derived_series,
    is_nondegenerate,
    killing_gram,
    solvable_radical,
    subalgebra,
)
from .errors import InternalInvariantViolation
from .linalg import ZERO, QMatrix, Subspace, linear_combination, solve_linear, subspace_intersect, subspace_sum


@dataclass(frozen=True)
class LeviDecomposition:
    algebra: LieAlgebra
    levi: Subspace
    levi_basis: tuple
    radical: Ideal
    nilpotent_ideal: Ideal
    derived: Ideal

    def invariants(self) -> dict[str, bool]:
        return check_levi_invariants(self)


def _lift_step(g: LieAlgebra, ys: list, quotient: list, upper: Subspace, lower: Subspace) -> list:
    """Correct ``ys`` by elements of ``upper`` so brackets close modulo ``lower``."""
    s = len(ys)
    n = g.dim
    rs = upper.basis
    m = len(rs)
    pairs = [(p, q) for p in range(s) for q in range(p + 1, s)]
    if not pairs or not m:
        return ys
    # column (i, k) <-> unknown coefficient of rs[k] in the correction of ys[i]
    columns = []
    for i in range(s):
        for k in range(m):
            col = []
            for p, q in pairs:
                v = [ZERO] * n
                if i == q:
                    v = list(g.bracket(ys[p], rs[k]))
                if i == p:
                    w = g.bracket(rs[k], ys[q])
                    v = [a + b for a, b in zip(v, w)]
                c = quotient[p][q][i]
                if c:
                    v = [a - c * b for a, b in zip(v, rs[k])]
                col.extend(lower.reduce(v))
            columns.append(col)
    rhs = []
    for p, q in pairs:
        defect = g.bracket(ys[p], ys[q])
        defect = [a - b for a, b in zip(defect, linear_combination(quotient[p][q], ys, n))]
        rhs.extend(-x for x in lower.reduce(defect))
    system = QMatrix.from_columns(columns, len(rhs))
    sol = solve_linear(system, rhs)
    if sol is None:
        raise InternalInvariantViolation("Levi lifting system has no solution")
    out = []
    for i in range(s):
        corr = linear_combination(sol[i * m:(i + 1) * m], rs, n)
        out.append(tuple(a + b for a, b in zip(ys[i], corr)))
    return out


def levi_decomposition(g: LieAlgebra) -> LeviDecomposition:
    n = g.dim
    radical = solvable_radical(g)
    r = radical.subspace
    derived = derived_algebra(g)
    nil = g.span(g.bracket(g.basis_vector(i), v) for i in range(n) for v in r.basis)
    idx = r.complement_indices()
    ys = [g.basis_vector(i) for i in idx]
    # structure constants of g / r in the basis ys
    quotient = [
        [tuple(r.reduce(g.structure_constants[i][j])[k] for k in idx) for j in idx] for i in idx
    ]
    series = derived_series(g, r)
    if series[-1].dim:
        raise InternalInvariantViolation("computed radical is not solvable")
    for upper, lower in zip(series, series[1:] + [Subspace.zero(n)]):
        if upper.dim == 0:
            break
        ys = _lift_step(g, ys, quotient, upper, lower)
    for p in range(len(ys)):
        for q in range(p + 1, len(ys)):
            if g.bracket(ys[p], ys[q]) != linear_combination(quotient[p][q], ys, n):
                raise InternalInvariantViolation(f"lifted Levi basis not closed at ({p}, {q})")
    ld = LeviDecomposition(
        algebra=g,
        levi=g.span(ys),
        levi_basis=tuple(ys),
        radical=radical,
        nilpotent_ideal=Ideal(nil, g),
        derived=derived,
    )
    failed = [k for k, ok in check_levi_invariants(ld).items() if not ok]
    if failed:
        raise InternalInvariantViolation(f"Levi decomposition invariants failed: {', '.join(failed)}")
    return ld


def check_levi_invariants(ld: LeviDecomposition) -> dict[str, bool]:
    g = ld.algebra
    s, r, nil, d = ld.levi, ld.radical.subspace, ld.nilpotent_ideal.subspace, ld.derived.subspace
    full = Subspace.full(g.dim)
    zero = Subspace.zero(g.dim)
    closed = all(g.bracket(u, v) in s for u in ld.levi_basis for v in ld.levi_basis)
    if s.dim:
        levi_alg = subalgebra(g, ld.levi_basis)
        semisimple = is_nondegenerate(killing_gram(levi_alg))
    else:
        semisimple = True
    return {
        "levi_plus_radical_is_everything": subspace_sum(s, r) == full and s.dim + r.dim == g.dim,
        "levi_meets_radical_trivially": subspace_intersect(s, r) == zero,
        "levi_closed": closed,
        "levi_killing_nondegenerate": semisimple,
        "radical_is_ideal": ld.radical.is_ideal(),
        "nilpotent_ideal_is_ideal": ld.nilpotent_ideal.is_ideal(),
        "nilpotent_ideal_in_radical": r.contains_subspace(nil),
        "derived_is_levi_plus_nilpotent": subspace_sum(s, nil) == d and s.dim + nil.dim == d.dim,
    }
