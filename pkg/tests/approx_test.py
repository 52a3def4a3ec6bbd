# coding=utf-8
import pytest
from hypothesis import given, settings, HealthCheck, strategies as st

import numpy as np

from triangulated_quotient.addcat.obj import Obj
from triangulated_quotient.approx import SubcatSpec, ideal_subspace, \
    is_left_approximation, is_right_approximation, left_approximation, \
    right_approximation, minimize, approximation_triangle, is_extension_closed, \
    mu, mu_inverse, verify_mutation_pair, z_equals_mu, shift_orbit_length, \
    is_factor_through_epic


def test_subcat_spec_init(nakayama4):
    """Test the initialization of SubcatSpec and basic properties."""
    cat, _ = nakayama4
    d_sub = SubcatSpec(cat, ['M3', 'M1'])
    str(d_sub)  # test the string representation

    assert d_sub.members == ('M1', 'M3')
    assert len(d_sub) == 2
    assert d_sub.contains('M1')
    assert d_sub.contains(Obj(('M1', 'M3', 'M1')))
    assert not d_sub.contains(Obj(('M1', 'M2')))
    assert d_sub.contains(Obj.zero())
    assert d_sub.is_subcategory_of(SubcatSpec.all(cat))
    assert SubcatSpec.empty(cat).is_empty
    assert repr(SubcatSpec.empty(cat)) == 'add(0)'
    assert d_sub.union(SubcatSpec(cat, ['M2'])) == SubcatSpec.all(cat)
    assert SubcatSpec.all(cat).difference(d_sub) == ('M2',)
    assert SubcatSpec(cat, ['M1']).shifted() == SubcatSpec(cat, ['M3'])
    assert SubcatSpec.from_dict(cat, d_sub.to_dict()) == d_sub

    with pytest.raises(ValueError):
        SubcatSpec(cat, ['M7'])


def test_ideal_subspace(nakayama4):
    """Test the dimensions of factor-through ideals on k[x]/(x^4)."""
    cat, _ = nakayama4
    d_sub = SubcatSpec(cat, ['M2'])
    m1, m2 = Obj('M1'), Obj('M2')
    assert ideal_subspace(d_sub, m1, m1).dim == 0
    assert ideal_subspace(d_sub, m2, m2).dim == cat.hom_dim(m2, m2)
    assert ideal_subspace(d_sub, m1, m2).dim == cat.hom_dim(m1, m2)
    assert ideal_subspace(SubcatSpec.empty(cat), m2, m2).dim == 0
    full = SubcatSpec.all(cat)
    assert ideal_subspace(full, m1, m1).dim == cat.hom_dim(m1, m1)


@settings(max_examples=40, deadline=None,
          suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(seed=st.integers(0, 2 ** 16), i=st.integers(0, 5), j=st.integers(0, 5),
       k=st.integers(0, 5), m=st.integers(0, 5))
def test_ideal_is_closed_under_composition(nakayama4, seed, i, j, k, m):
    """Test that v o w o u factors through D whenever w does."""
    cat, _ = nakayama4
    d_sub = SubcatSpec(cat, ['M2'])
    objs = cat.objects(1)
    x_0, x, y, y_0 = (objs[n % len(objs)] for n in (i, j, k, m))
    ideal = ideal_subspace(d_sub, x, y)
    if not ideal.dim:
        return
    rng = np.random.default_rng(seed)
    coeffs = rng.integers(0, cat.field.order, ideal.dim)
    w = cat.coords_to_mor(x, y, ideal.combine(coeffs))
    u, v = cat.random_mor(x_0, x, rng), cat.random_mor(y, y_0, rng)
    composite = cat.compose(v, cat.compose(w, u))
    assert ideal_subspace(d_sub, x_0, y_0).contains(composite.coords)


def test_approximations(nakayama4):
    """Test universal and minimal approximations by add(M2)."""
    cat, _ = nakayama4
    d_sub = SubcatSpec(cat, ['M2'])
    left = left_approximation(Obj('M1'), d_sub)
    assert is_left_approximation(left, d_sub)
    assert left.target.rank == cat.hom_dim(Obj('M1'), Obj('M2'))
    right = right_approximation(Obj('M3'), d_sub)
    assert is_right_approximation(right, d_sub)

    doubled = left_approximation(Obj(('M1', 'M1')), d_sub)
    small = minimize(doubled, d_sub, 'left')
    assert is_left_approximation(small, d_sub)
    assert small.target.rank <= doubled.target.rank

    with pytest.raises(ValueError):
        minimize(left, d_sub, 'middle')


def test_approximation_triangle(nakayama4):
    """Test the triangle on the left add(M2)-approximation of M1."""
    cat, triangulation = nakayama4
    d_sub = SubcatSpec(cat, ['M2'])
    decision = approximation_triangle('M1', d_sub, triangulation)
    assert decision.is_yes
    tri = decision.witness
    assert tri.A == Obj('M1')
    assert d_sub.contains(tri.B)
    assert is_left_approximation(tri.f, d_sub)
    assert approximation_triangle(Obj('M1'), d_sub, triangulation) is decision


def test_extension_closed(nakayama4):
    """Test extension closure of the whole category and of add(M1)."""
    cat, triangulation = nakayama4
    result = is_extension_closed(SubcatSpec.all(cat), triangulation)
    assert result.status == 'Pass'
    assert result.checked > 0

    result = is_extension_closed(SubcatSpec(cat, ['M1']), triangulation)
    assert result.status == 'Fail'
    assert result.violations[0]['code'] == '030001'


def test_mutation_pair(nakayama4):
    """Test that the whole category is an add(M2)-mutation pair with itself."""
    cat, triangulation = nakayama4
    z_sub, d_sub = SubcatSpec.all(cat), SubcatSpec(cat, ['M2'])
    assert mu_inverse(z_sub, d_sub, triangulation) == z_sub
    assert mu(z_sub, d_sub, triangulation) == z_sub
    decision = verify_mutation_pair(z_sub, d_sub, triangulation)
    assert decision.is_yes
    witness = decision.witness
    str(witness)  # test the string representation
    assert set(witness.cones) == {'M1', 'M3'}
    assert set(witness.cocones) == {'M1', 'M3'}
    assert z_equals_mu(z_sub, d_sub, triangulation).is_yes

    with pytest.raises(ValueError):
        verify_mutation_pair(SubcatSpec(cat, ['M1']), d_sub, triangulation)


def test_mutation_pair_failure(nakayama4):
    """Test that add(M1) is not a mutation pair with itself over the zero subcategory."""
    cat, triangulation = nakayama4
    z_sub = SubcatSpec(cat, ['M1'])
    decision = verify_mutation_pair(z_sub, SubcatSpec.empty(cat), triangulation)
    assert decision.is_no
    assert decision.witness['object'] == 'M3'


def test_shift_orbit_length(nakayama4):
    """Test the orbit lengths of subcategories under the shift."""
    cat, _ = nakayama4
    assert shift_orbit_length(SubcatSpec(cat, ['M2'])) == (1, False)
    assert shift_orbit_length(SubcatSpec(cat, ['M1'])) == (2, False)
    assert shift_orbit_length(SubcatSpec.empty(cat)) == (1, False)


def test_factor_through_epic(nakayama4):
    """Test that T reflects the factor-through ideal of add(M2)."""
    cat, _ = nakayama4
    result = is_factor_through_epic(SubcatSpec(cat, ['M2']), rank_bound=1)
    assert result.status == 'Pass'
    assert result.checked > 0
    result = is_factor_through_epic(SubcatSpec.empty(cat), rank_bound=1, n_max=1)
    assert result.status == 'Pass'
    assert result.notes
