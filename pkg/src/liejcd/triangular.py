"""Diagonalizability of upper-triangular matrices and the triangular sweep
that diagonalizes them by an upper-triangular change of basis."""

from __future__ import annotations

from .errors import ValidationError
from .linalg import ONE, ZERO, QMatrix, as_matrix


def _require_upper_triangular(a: QMatrix) -> QMatrix:
    a = as_matrix(a)
    if not a.is_square:
        raise ValidationError("expected a square matrix")
    if not a.is_upper_triangular():
        raise ValidationError("expected an upper-triangular matrix")
    return a


def entrywise_criterion(a: QMatrix) -> bool:
    """``a_ij = 0`` whenever ``i < j`` and ``a_ii = a_jj``.

    Decides diagonalizability when equal diagonal entries sit in contiguous
    runs, and in particular when only one row has off-diagonal entries.  For
    other orderings it can fail in both directions, e.g.
    ``[[1,1,0],[0,2,1],[0,0,1]]`` passes but is not diagonalizable.
    """
    a = _require_upper_triangular(a)
    n = a.rows
    return all(
        not a[i, j] for i in range(n) for j in range(i + 1, n) if a[i, i] == a[j, j]
    )


def _sweep(a: QMatrix):
    """Run the triangular sweep; ``None`` if some entry cannot be cleared.

    Rows are cleared bottom-up.  When row ``i`` is reached, rows below it are
    already diagonal, so the trailing block has the shape ``[[a_ii, r], [0, D]]``
    with ``D`` diagonal, for which the entrywise criterion is exact.
    Conjugating by ``I + α E_ij`` with ``α = a_ij / (a_jj - a_ii)`` zeroes
    ``(i, j)`` and changes nothing else in row ``i``.
    """
    n = a.rows
    m = a.tolist()
    p = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for i in range(n - 2, -1, -1):
        for j in range(i + 1, n):
            if not m[i][j]:
                continue
            if m[i][i] == m[j][j]:
                return None
            alpha = m[i][j] / (m[j][j] - m[i][i])
            # m <- (I - α E_ij) m (I + α E_ij); row j is already diagonal
            for r in range(i + 1):
                if m[r][i]:
                    m[r][j] += alpha * m[r][i]
            m[i][j] -= alpha * m[j][j]
            for r in range(n):
                if p[r][i]:
                    p[r][j] += alpha * p[r][i]
    return QMatrix(p), QMatrix(m)


def is_ut_diagonalizable(a: QMatrix) -> bool:
    a = _require_upper_triangular(a)
    return _sweep(a) is not None


def ut_diagonalize(a: QMatrix) -> tuple[QMatrix, QMatrix]:
    """Return ``(p, d)`` with ``p`` unit upper triangular and ``p⁻¹ a p = d`` diagonal."""
    a = _require_upper_triangular(a)
    out = _sweep(a)
    if out is None:
        raise ValidationError("matrix is not diagonalizable")
    p, d = out
    if not d.is_diagonal():
        raise ValidationError("triangular sweep did not reach a diagonal matrix")
    return p, d
