# coding=utf-8
import pytest
from hypothesis import given, settings, HealthCheck, strategies as st

import numpy as np

from triangulated_quotient.addcat.obj import Obj
from triangulated_quotient.addcat.mor import Mor, column, row, diagonal, \
    permutation_isomorphism
from triangulated_quotient.addcat.functor import AdditiveFunctorData, \
    apply_functor, functor_full_on, functor_faithful_on
from triangulated_quotient.addcat.presentation import CategoryPresentation, \
    validate_presentation

_fixture_settings = settings(
    max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture])


def _algebra(compose, ids=None):
    """Get a one-object presentation over F_2 from composition constants."""
    return CategoryPresentation.from_dict({
        'field': {'kind': 'prime', 'p': 2},
        'indecomposables': ['X'],
        'hom': {'X|X': {'dim': len(compose)}},
        'compose': {'X|X|X': compose},
        'identity': {'X': ids or [1] + [0] * (len(compose) - 1)}
    })


def _dual_numbers(square):
    """Get k[x]/(x^2 - square x) with basis (1, x)."""
    return _algebra([[[1, 0], [0, 1]], [[0, 1], [0, square]]])


def test_obj_init():
    """Test the initialization of Obj and basic properties."""
    obj = Obj(('M1', 'M2', 'M1'))
    str(obj)  # test the string representation

    assert obj.rank == 3
    assert not obj.is_zero
    assert obj.multiset == (('M1', 2), ('M2', 1))
    assert obj == Obj(('M2', 'M1', 'M1'))
    assert not obj.is_identical(Obj(('M2', 'M1', 'M1')))
    assert obj.in_add(['M1', 'M2'])
    assert not obj.in_add(['M1'])
    kept, idx = obj.without(['M2'])
    assert kept.is_identical(Obj(('M1', 'M1')))
    assert idx == [0, 2]
    assert Obj.zero().is_zero
    assert repr(Obj.zero()) == '0'
    assert (Obj('M1') + Obj('M2')).is_identical(Obj(('M1', 'M2')))
    assert Obj.from_dict(obj.to_dict()).is_identical(obj)

    with pytest.raises(AssertionError):
        Obj(('M 1',))


def test_mor_init(nakayama3):
    """Test the initialization of Mor and basic properties."""
    cat, _ = nakayama3
    m1, m2 = Obj('M1'), Obj('M2')
    f = cat.hom_basis(m1, m2)[0]
    str(f)  # test the string representation

    assert f.source == m1
    assert f.target == m2
    assert not f.is_zero
    assert (f - f).is_zero
    assert f + f == Mor.zero(cat, m1, m2)
    assert -f == f
    assert f.scale(0).is_zero
    assert Mor.identity(cat, m1).compose(Mor.identity(cat, m1)) == \
        Mor.identity(cat, m1)
    assert Mor.from_dict(cat, f.to_dict()) == f
    assert len(f.blocks) == 1 and len(f.blocks[0]) == 1

    with pytest.raises(AssertionError):
        Mor(cat, m1, m2, [1, 1, 1])
    with pytest.raises(ValueError):
        f + Mor.identity(cat, m1)
    with pytest.raises(ValueError):
        cat.compose(f, f)


def test_block_morphisms(nakayama3):
    """Test morphisms into and out of direct sums."""
    cat, _ = nakayama3
    m1, m2 = Obj('M1'), Obj('M2')
    f = cat.hom_basis(m1, m2)[0]
    one = Mor.identity(cat, m1)
    col = column(cat, m1, [one, f])
    assert col.target.is_identical(Obj(('M1', 'M2')))
    assert col.component([1], [0]) == f

    r = row(cat, m2, [f, Mor.identity(cat, m2)])
    assert r.source.is_identical(Obj(('M1', 'M2')))
    assert cat.compose(r, col) == f + f

    diag = diagonal(cat, [one, Mor.identity(cat, m2)])
    assert diag == Mor.identity(cat, Obj(('M1', 'M2')))

    total, i_x, i_y, p_x, p_y = cat.direct_sum(m1, m2)
    assert cat.compose(p_x, i_x) == one
    assert cat.compose(p_y, i_x).is_zero
    assert cat.compose(i_x, p_x) + cat.compose(i_y, p_y) == Mor.identity(cat, total)

    perm = permutation_isomorphism(cat, Obj(('M1', 'M2')), Obj(('M2', 'M1')))
    back = permutation_isomorphism(cat, Obj(('M2', 'M1')), Obj(('M1', 'M2')))
    assert cat.compose(back, perm) == Mor.identity(cat, Obj(('M1', 'M2')))
    ok, inverse = cat.is_isomorphism(perm)
    assert ok
    assert inverse == back


@_fixture_settings
@given(seed=st.integers(0, 2 ** 16), i=st.integers(0, 5), j=st.integers(0, 5),
       k=st.integers(0, 5), scalar=st.integers(0, 1))
def test_composition_is_bilinear(nakayama3, seed, i, j, k, scalar):
    """Test that composition is linear in both arguments."""
    cat, _ = nakayama3
    objs = cat.objects(2)
    x, y, z = objs[i], objs[j], objs[k]
    rng = np.random.default_rng(seed)
    f1, f2 = cat.random_mor(x, y, rng), cat.random_mor(x, y, rng)
    g1, g2 = cat.random_mor(y, z, rng), cat.random_mor(y, z, rng)
    assert cat.compose(g1, f1 + f2) == cat.compose(g1, f1) + cat.compose(g1, f2)
    assert cat.compose(g1 + g2, f1) == cat.compose(g1, f1) + cat.compose(g2, f1)
    assert cat.compose(g1, f1.scale(scalar)) == cat.compose(g1, f1).scale(scalar)
    post = cat.post_matrix(g1, x)
    assert cat.field.equal(
        cat.field.matmul(post, f1.coords.reshape(-1, 1)).reshape(-1),
        cat.compose(g1, f1).coords)
    pre = cat.pre_matrix(f1, z)
    assert cat.field.equal(
        cat.field.matmul(pre, g1.coords.reshape(-1, 1)).reshape(-1),
        cat.compose(g1, f1).coords)


@_fixture_settings
@given(seed=st.integers(0, 2 ** 16), i=st.integers(0, 5), j=st.integers(0, 5),
       k=st.integers(0, 5))
def test_shift_is_functorial(nakayama3, seed, i, j, k):
    """Test that the shift preserves composition and identities."""
    cat, _ = nakayama3
    shift = cat.shift
    objs = cat.objects(2)
    x, y, z = objs[i], objs[j], objs[k]
    rng = np.random.default_rng(seed)
    f, g = cat.random_mor(x, y, rng), cat.random_mor(y, z, rng)
    assert apply_functor(shift, cat.compose(g, f)) == \
        cat.compose(apply_functor(shift, g), apply_functor(shift, f))
    image = apply_functor(shift, Mor.identity(cat, x))
    assert image == Mor.identity(cat, image.source)


def test_identity_functor(nakayama3):
    """Test that the identity functor is full and faithful."""
    cat, _ = nakayama3
    ident = AdditiveFunctorData.identity(cat)
    pairs = [(x, y) for x in cat.objects(1) for y in cat.objects(1)]
    assert functor_full_on(ident, pairs, cat)
    assert functor_faithful_on(ident, pairs, cat)
    f = cat.hom_basis(Obj('M1'), Obj('M2'))[0]
    assert apply_functor(ident, f) == f
    str(ident)  # test the string representation


def test_nakayama_presentation_is_valid(nakayama4):
    """Test that the catalog presentation passes every structural check."""
    cat, _ = nakayama4
    result = validate_presentation(cat)
    assert result.status == 'Pass'
    assert result.checked > 0
    assert cat.check_all(raise_exception=False) == ''


def test_presentation_to_from_dict(nakayama3):
    """Test the round trip of a presentation through its dictionary."""
    cat, _ = nakayama3
    cat_dict = cat.to_dict()
    assert cat_dict['format'] == 1
    assert cat_dict['catalog'] == {'kind': 'nakayama', 'n': 3, 'p': 2}
    new_cat = CategoryPresentation.from_dict(cat_dict)
    assert new_cat.indecomposables == cat.indecomposables
    assert new_cat.hom_dims == cat.hom_dims
    assert new_cat.to_dict()['hom'] == cat_dict['hom']
    assert new_cat.shift.image('M1') == cat.shift.image('M1')


def test_objects_and_morphisms(nakayama3):
    """Test the enumeration of objects and hom-spaces."""
    cat, _ = nakayama3
    objs = cat.objects(2)
    assert len(objs) == 6
    assert objs[0].is_zero
    m2 = Obj('M2')
    mors, exhaustive = cat.morphisms(m2, m2)
    assert exhaustive
    assert len(mors) == 2 ** cat.hom_dim(m2, m2)
    mors, exhaustive = cat.morphisms(Obj(('M1', 'M2')), Obj(('M1', 'M2')), budget=4)
    assert not exhaustive
    assert mors[0].is_zero


def test_restrict(nakayama4):
    """Test the full subcategory on a subset of indecomposables."""
    cat, _ = nakayama4
    sub = cat.restrict(['M1', 'M3'])
    assert sub.indecomposables == ('M1', 'M3')
    assert sub.hom_dim_names('M1', 'M3') == cat.hom_dim_names('M1', 'M3')
    assert sub.shift is not None
    assert cat.restrict(['M1']).shift is None


def test_local_algebra_passes():
    """Test that k[x]/(x^2) is a valid one-object presentation."""
    cat = _dual_numbers(0)
    assert validate_presentation(cat).status == 'Pass'


def test_idempotent_breaks_locality():
    """Test that a nontrivial idempotent is reported as a locality violation."""
    cat = _dual_numbers(1)
    result = validate_presentation(cat)
    assert result.status == 'Fail'
    assert '010003' in [e['code'] for e in result.violations]
    with pytest.raises(ValueError):
        cat.check_locality()


def test_broken_identity():
    """Test that wrong identity coordinates are reported."""
    cat = _algebra([[[1, 0], [0, 1]], [[0, 1], [0, 0]]], ids=[1, 1])
    errors = cat.check_identities(raise_exception=False, detailed=True)
    assert errors
    assert errors[0]['code'] == '010001'


def test_broken_associativity():
    """Test that non-associative composition constants are reported."""
    # basis (1, x, y) with x y = y and every other product of x, y zero
    compose = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 0], [0, 0, 1]],
        [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
    ]
    cat = _algebra(compose)
    msg = cat.check_associativity(raise_exception=False)
    assert 'not associative' in msg
    errors = cat.check_associativity(raise_exception=False, detailed=True)
    assert errors[0]['code'] == '010002'
