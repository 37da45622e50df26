import random

import pytest

from liejcd import fixtures
from liejcd.linalg import QMatrix, vadd


def E(n, i, j):
    """Elementary n×n matrix, 1-based indices as in the usual E_ij notation."""
    return QMatrix.unit(n, i - 1, j - 1)


def sample_derived(g, rng, bound=3):
    """Random element of [g, g]: a sum of two brackets of integer vectors."""

    def rand():
        return tuple(rng.randint(-bound, bound) for _ in range(g.dim))

    return vadd(g.bracket(rand(), rand()), g.bracket(rand(), rand()))


def random_matrix(rng, n, bound=3, density=1.0):
    return QMatrix(
        [[rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)]
    )


def random_invertible(rng, n, bound=2):
    while True:
        m = random_matrix(rng, n, bound)
        if m.determinant() != 0:
            return m


@pytest.fixture
def rng():
    return random.Random(20261017)


@pytest.fixture(params=fixtures.NAMES)
def fixture_name(request):
    return request.param
