from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liejcd.errors import ValidationError
from liejcd.linalg import (
    QMatrix,
    Subspace,
    coordinates_in,
    format_rational,
    kernel,
    rational,
    rref,
    solve_linear,
    subspace_intersect,
    subspace_sum,
)

small = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    ).map(QMatrix)


def test_rational_parsing_and_format():
    assert rational("3/4") == Fraction(3, 4)
    assert rational("-6/8") == Fraction(-3, 4)
    assert rational(5) == 5
    assert rational(Fraction(1, 3)) == Fraction(1, 3)
    assert format_rational(rational("6/3")) == "2"
    assert format_rational(rational("-1/2")) == "-1/2"
    x = rational("10/-4")
    assert x.denominator > 0 and x == Fraction(-5, 2)
    for bad in ("1.5", "a", "1/0", 0.5, True):
        with pytest.raises(ValidationError):
            rational(bad)


def test_rref_examples():
    red, piv, rank = rref(QMatrix([[2, 4], [1, 2]]))
    assert red == QMatrix([[1, 2], [0, 0]]) and piv == [0] and rank == 1
    red, piv, rank = rref(QMatrix.identity(3))
    assert red == QMatrix.identity(3) and piv == [0, 1, 2] and rank == 3
    red, piv, rank = rref(QMatrix.zeros(2))
    assert red == QMatrix.zeros(2) and piv == [] and rank == 0


def test_solve_linear_examples():
    assert solve_linear(QMatrix.identity(2), [3, 5]) == (3, 5)
    assert solve_linear(QMatrix([[1, 1], [2, 2]]), [1, 3]) is None
    assert solve_linear(QMatrix([[1, 1], [0, 0]]), [4, 0]) == (4, 0)
    with pytest.raises(ValidationError):
        solve_linear(QMatrix.identity(2), [1, 2, 3])


def test_kernel_examples():
    assert kernel(QMatrix.identity(2)).dim == 0
    assert kernel(QMatrix.zeros(2)) == Subspace.full(2)
    # nullspace of [[1,2],[2,4]] is span{(-2, 1)}; the canonical basis scales the pivot to 1
    k = kernel(QMatrix([[1, 2], [2, 4]]))
    assert k.basis == ((1, Fraction(-1, 2)),)


def test_coordinates_in_examples():
    axis = Subspace.span([(1, 0)], 2)
    assert coordinates_in(axis, (5, 0)) == (5,)
    assert coordinates_in(axis, (0, 1)) is None
    full = Subspace.full(3)
    assert coordinates_in(full, (1, -2, Fraction(1, 3))) == (1, -2, Fraction(1, 3))


def test_sum_and_intersection_examples():
    x, y = Subspace.span([(1, 0)], 2), Subspace.span([(0, 1)], 2)
    assert subspace_sum(x, y) == Subspace.full(2)
    assert subspace_intersect(x, y).dim == 0
    assert subspace_sum(x, x) == x and subspace_intersect(x, x) == x
    assert subspace_intersect(Subspace.span([(1, 1)], 2), x).dim == 0
    with pytest.raises(ValidationError):
        subspace_sum(x, Subspace.full(3))


def test_matrix_basics():
    a = QMatrix([[1, 2], [3, 4]])
    assert a @ a.inverse() == QMatrix.identity(2)
    assert a.determinant() == -2
    assert (a ** 3) == a @ a @ a
    assert a.T == QMatrix([[1, 3], [2, 4]])
    assert a.kron(QMatrix.identity(1)) == a
    with pytest.raises(ValidationError):
        QMatrix([[1, 2], [2, 4]]).inverse()
    with pytest.raises(ValidationError):
        QMatrix([[1, 2], [3]])


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    red, piv, rank = rref(m)
    assert rref(red) == (red, piv, rank)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    k = kernel(m)
    assert k.dim + rref(m)[2] == m.cols
    for v in k.basis:
        assert not any(m.apply(v))


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_solve_linear_is_exact(m, xs):
    b = m.apply(xs[: m.cols])  # consistent by construction
    x = solve_linear(m, b)
    assert x is not None and m.apply(x) == b


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), max_size=3),
       st.lists(st.lists(small, min_size=4, max_size=4), max_size=3))
def test_dimension_formula(u, v):
    s1, s2 = Subspace.span(u, 4), Subspace.span(v, 4)
    total = subspace_sum(s1, s2)
    meet = subspace_intersect(s1, s2)
    assert total.dim + meet.dim == s1.dim + s2.dim
    assert s1.contains_subspace(meet) and s2.contains_subspace(meet)
    assert total.contains_subspace(s1) and total.contains_subspace(s2)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=3))
def test_subspace_basis_is_canonical(vs):
    s = Subspace.span(vs, 3)
    # any spanning set of the same space, e.g. the reversed list plus a sum, gives the same basis
    extra = [tuple(sum(c) for c in zip(*vs))]
    assert Subspace.span(list(reversed(vs)) + extra, 3) == s
    for p, b in zip(s.pivots, s.basis):
        assert b[p] == 1
        assert all(other[p] == 0 for other in s.basis if other is not b)
    assert list(s.pivots) == sorted(set(s.pivots))
