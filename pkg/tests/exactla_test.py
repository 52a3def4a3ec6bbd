# coding=utf-8
import pytest
from hypothesis import given, strategies as st
from fractions import Fraction

from triangulated_quotient.exactla import FieldSpec, Subspace, rank_and_echelon, \
    rank, nullspace, column_space, solve, search_points, first_point

F3 = FieldSpec('prime', 3)
QQ = FieldSpec('rational')


def _matrix(rows, cols, p=3):
    return st.lists(st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


def test_field_spec_init():
    """Test the initialization of FieldSpec and basic properties."""
    assert F3.kind == 'prime'
    assert F3.p == 3
    assert F3.order == 3
    assert F3.is_finite
    assert str(F3) == 'F_3'
    assert not QQ.is_finite
    assert QQ.p is None
    assert str(QQ) == 'Q'
    assert FieldSpec.from_dict(F3.to_dict()) == F3
    assert FieldSpec.from_dict(QQ.to_dict()) == QQ

    with pytest.raises(ValueError):
        FieldSpec('complex')
    with pytest.raises(AssertionError):
        FieldSpec('prime', 4)


def test_field_arithmetic():
    """Test that prime field arrays reduce modulo p and rationals stay exact."""
    arr = F3.array([4, -1, 3])
    assert F3.to_json(arr) == [1, 2, 0]
    assert F3.is_zero(F3.zeros((2, 2)))
    assert F3.equal(F3.matmul(F3.identity(2), F3.array([[1, 2], [0, 1]])),
                    F3.array([[1, 2], [0, 1]]))
    assert F3.to_json(F3.array([Fraction(1, 2)])) == [2]

    half = QQ.array([[Fraction(1, 2), 0], [0, 2]])
    inv = QQ.inverse(half)
    assert QQ.equal(QQ.matmul(half, inv), QQ.identity(2))
    assert F3.inverse(F3.array([[1, 1], [1, 1]])) is None


def test_rational_nullspace():
    """Test the nullspace of a rational matrix."""
    m = QQ.array([[1, 2, 3], [2, 4, 6]])
    space = nullspace(QQ, m)
    assert space.dim == 2
    for vec in space.basis:
        assert QQ.is_zero(QQ.matmul(m, vec.reshape(-1, 1)))
    assert rank(QQ, m) == 1


@given(_matrix(3, 4))
def test_echelon_is_canonical(rows):
    """Test that the echelon form of a matrix is unchanged by row reduction and row operations."""
    m = F3.array(rows)
    r, red, pivots = rank_and_echelon(F3, m)
    again = rank_and_echelon(F3, red)
    assert again[0] == r
    assert F3.equal(again[1], red)
    assert again[2] == pivots
    combo = m[0] + m[1] * F3.scalar(2)
    assert Subspace(F3, 4, F3.array(rows[::-1])) == Subspace(F3, 4, m)
    assert Subspace(F3, 4, F3.vstack([m, combo.reshape(1, -1)], 4)) == \
        Subspace(F3, 4, m)
    assert rank(F3, m.T) == r


@given(_matrix(3, 4), st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_solve_is_sound(rows, x):
    """Test that solve finds solutions of consistent systems and only true solutions."""
    a = F3.array(rows)
    b = F3.matmul(a, F3.array(x).reshape(-1, 1)).reshape(-1)
    solution = solve(F3, a, b)
    assert solution is not None
    particular, homogeneous = solution
    assert F3.equal(F3.matmul(a, particular.reshape(-1, 1)).reshape(-1), b)
    for vec in homogeneous.basis:
        assert F3.is_zero(F3.matmul(a, vec.reshape(-1, 1)))
    assert homogeneous.dim == 4 - rank(F3, a)


def test_solve_inconsistent():
    """Test that an inconsistent system has no solution."""
    a = F3.array([[1, 0], [1, 0]])
    assert solve(F3, a, F3.array([1, 2])) is None
    particular, space = solve(F3, F3.zeros((0, 2)), F3.zeros(0))
    assert space.dim == 2


@given(_matrix(2, 4), st.lists(st.integers(0, 2), min_size=4, max_size=4),
       st.lists(st.integers(0, 2), min_size=2, max_size=2))
def test_coset_representative_is_constant(rows, v, coeffs):
    """Test that every member of a coset v + U has the same representative."""
    space = Subspace(F3, 4, F3.array(rows))
    vec = F3.array(v)
    shift = space.combine(F3.array(coeffs[:space.dim]))
    assert space.contains(shift)
    rep = space.coset_representative(vec)
    assert F3.equal(space.coset_representative(vec + shift), rep)
    assert F3.equal(space.quotient_coordinates(vec + shift),
                    space.quotient_coordinates(vec))
    assert F3.equal(space.lift(space.quotient_coordinates(vec)), rep)
    assert F3.equal(F3.matmul(space.quotient_matrix(), vec.reshape(-1, 1)).reshape(-1),
                    space.quotient_coordinates(vec))


def test_subspace_operations():
    """Test sums, images and basis extension of subspaces."""
    u = Subspace(F3, 3, [[1, 0, 0]])
    v = Subspace(F3, 3, [[0, 1, 0]])
    total = u + v
    assert total.dim == 2
    assert u.is_subspace_of(total)
    assert not total.is_subspace_of(u)
    assert total.complement == (2,)
    assert Subspace.full(F3, 3).dim == 3
    assert Subspace.zero(F3, 3).dim == 0
    assert len(list(u.points())) == 3

    chosen, span = u.extend_basis([[2, 0, 0], [0, 0, 1], [1, 0, 1]])
    assert chosen == (1,)
    assert span.dim == 2

    proj = F3.array([[0, 1, 0]])
    assert u.image(proj).dim == 0
    assert v.image(proj).dim == 1
    assert column_space(F3, F3.array([[1, 2], [0, 0]])).dim == 1
    assert F3.to_json(u.coordinates(F3.array([2, 0, 0]))) == [2]
    with pytest.raises(ValueError):
        u.contains(F3.array([1, 0]))


def test_search_points():
    """Test exhaustive and sampled searches of affine spaces."""
    space = Subspace.full(F3, 2)
    points, exhaustive = search_points(F3, F3.zeros(2), space, seed=1)
    assert exhaustive
    seen = set(F3.key(p) for p in points)
    assert len(seen) == 9

    points, exhaustive = search_points(F3, F3.zeros(2), space, seed=1, limit=4,
                                       samples=5)
    assert not exhaustive
    assert len(list(points)) == 5

    status, found = first_point(F3, F3.zeros(2), space,
                                lambda p: p if int(p[0]) == 2 else None)
    assert status == 'Yes'
    assert int(found[0]) == 2
    status, found = first_point(F3, F3.zeros(2), Subspace.zero(F3, 2),
                                lambda p: p if int(p[0]) == 2 else None)
    assert status == 'No'
    assert found is None


def test_search_points_is_seeded():
    """Test that identical seeds give identical sampled searches."""
    space = Subspace.full(F3, 12)
    first, _ = search_points(F3, F3.zeros(12), space, seed=7, samples=10)
    second, _ = search_points(F3, F3.zeros(12), space, seed=7, samples=10)
    assert [F3.key(p) for p in first] == [F3.key(p) for p in second]
