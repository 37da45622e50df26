"""Jordan-Chevalley decomposition of a single rational matrix.

No eigenvalues and no factorization: the semisimple part is obtained as a
polynomial in the matrix by Newton iteration on the squarefree part of the
minimal polynomial, carried out in ``Q[t] / (minimal polynomial)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantViolation, ValidationError
from .linalg import QMatrix, as_matrix
from .poly import T, QPoly, is_squarefree, minimal_polynomial, poly_xgcd, squarefree_part


@dataclass(frozen=True)
class JordanPair:
    semisimple: QMatrix
    nilpotent: QMatrix
    witness_poly: QPoly

    def as_tuple(self) -> tuple[QMatrix, QMatrix]:
        return (self.semisimple, self.nilpotent)


def matrix_jordan_chevalley(a: QMatrix) -> JordanPair:
    a = as_matrix(a)
    if not a.is_square:
        raise ValidationError("Jordan-Chevalley decomposition needs a square matrix")
    m = minimal_polynomial(a)
    f = squarefree_part(m)
    x = T % m
    if f != m:
        g, u, _ = poly_xgcd(f.derivative(), f)
        if g.degree != 0:
            raise InternalInvariantViolation("squarefree part shares a factor with its derivative")
        # f(x_k) lies in (f)^(2^k) modulo m, so deg m steps is a generous cap
        for _ in range(m.degree + 1):
            fx = f.compose_mod(x, m)
            if fx.is_zero():
                break
            x = (x - fx * u.compose_mod(x, m)) % m
        else:
            raise InternalInvariantViolation("Newton iteration for the semisimple part did not converge")
    s = x(a)
    return JordanPair(s, a - s, x)


def is_semisimple_matrix(a: QMatrix) -> bool:
    """Squarefree minimal polynomial, i.e. diagonalizable over an algebraic closure."""
    return is_squarefree(minimal_polynomial(as_matrix(a)))


def is_nilpotent_matrix(a: QMatrix) -> bool:
    a = as_matrix(a)
    if not a.is_square:
        raise ValidationError("nilpotency test needs a square matrix")
    n = a.rows
    power, exponent = a, 1
    while exponent < n:
        power = power @ power
        exponent *= 2
        if power.is_zero():
            return True
    return power.is_zero()
