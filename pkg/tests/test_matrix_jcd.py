import random
from fractions import Fraction

import pytest

from liejcd.linalg import QMatrix
from liejcd.matrix_jcd import is_nilpotent_matrix, is_semisimple_matrix, matrix_jordan_chevalley
from liejcd.poly import is_squarefree, minimal_polynomial

from conftest import E, random_invertible
from jcd_blocks import ROT, random_block_pair


def check_pair_invariants(a, pair):
    s, n = pair.semisimple, pair.nilpotent
    assert s + n == a
    assert s @ n == n @ s
    assert is_squarefree(minimal_polynomial(s))
    assert (n ** a.rows).is_zero()
    assert pair.witness_poly(a) == s
    assert pair.witness_poly.degree < max(minimal_polynomial(a).degree, 1)


def test_examples():
    p = matrix_jordan_chevalley(QMatrix([[1, 1], [0, 1]]))
    assert p.as_tuple() == (QMatrix.identity(2), E(2, 1, 2))
    p = matrix_jordan_chevalley(ROT)
    assert p.as_tuple() == (ROT, QMatrix.zeros(2))
    a = QMatrix([[1, 1, 0], [0, 1, 0], [0, 0, 2]])
    p = matrix_jordan_chevalley(a)
    assert p.as_tuple() == (QMatrix.diag([1, 1, 2]), E(3, 1, 2))
    check_pair_invariants(a, p)


def test_witness_is_reduced_mod_minimal_polynomial():
    a = QMatrix([[1, 1, 0], [0, 1, 0], [0, 0, 2]])
    # minimal polynomial (t-1)^2 (t-2); the semisimple part is t^2 - 2t + 2 evaluated at a
    assert matrix_jordan_chevalley(a).witness_poly.coeffs == (2, -2, 1)
    assert matrix_jordan_chevalley(QMatrix.identity(3)).witness_poly.coeffs == (1,)


def test_predicates():
    assert is_semisimple_matrix(QMatrix.identity(2))
    assert not is_semisimple_matrix(E(2, 1, 2))
    assert is_semisimple_matrix(ROT)
    assert is_nilpotent_matrix(E(2, 1, 2))
    assert not is_nilpotent_matrix(QMatrix.identity(2))
    assert is_nilpotent_matrix(QMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]]))
    assert is_nilpotent_matrix(QMatrix.zeros(1))
    assert not is_nilpotent_matrix(QMatrix([[0, 1, 0, 0, 0], [0] * 5, [0] * 5, [0] * 5, [0, 0, 0, 0, 1]]))


@pytest.mark.parametrize("seed", range(25))
def test_uniqueness_on_conjugated_blocks(seed):
    rng = random.Random(seed)
    s, n = random_block_pair(rng)
    g = random_invertible(rng, s.rows)
    gi = g.inverse()
    a = g @ (s + n) @ gi
    pair = matrix_jordan_chevalley(a)
    assert pair.as_tuple() == (g @ s @ gi, g @ n @ gi)
    check_pair_invariants(a, pair)


@pytest.mark.parametrize("seed", range(10))
def test_idempotence_scaling_equivariance(seed):
    rng = random.Random(100 + seed)
    a = QMatrix([[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)])
    pair = matrix_jordan_chevalley(a)
    check_pair_invariants(a, pair)
    assert matrix_jordan_chevalley(pair.semisimple).as_tuple() == (pair.semisimple, QMatrix.zeros(4))
    lam = Fraction(rng.choice([-3, -1, 2, 5]), rng.choice([1, 2, 7]))
    scaled = matrix_jordan_chevalley(a.scale(lam))
    assert scaled.as_tuple() == (pair.semisimple.scale(lam), pair.nilpotent.scale(lam))
    g = random_invertible(rng, 4)
    gi = g.inverse()
    conj = matrix_jordan_chevalley(g @ a @ gi)
    assert conj.as_tuple() == (g @ pair.semisimple @ gi, g @ pair.nilpotent @ gi)
