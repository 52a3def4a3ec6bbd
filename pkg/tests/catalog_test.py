# coding=utf-8
import pytest

from triangulated_quotient.addcat.obj import Obj
from triangulated_quotient.addcat.presentation import validate_presentation
from triangulated_quotient.addcat.functor import functor_faithful_on
from triangulated_quotient.exactla import FieldSpec
from triangulated_quotient.catalog import ModuleRep, nakayama_stable, syzygy, \
    tau_orbit, oracle_stable_hom, oracle_table, oracle_syzygy, oracle_costable_end, \
    catalog_stable, catalog_cone_builder, CATALOG_KINDS


def test_module_rep_init():
    """Test the initialization of ModuleRep and basic properties."""
    field = FieldSpec('prime', 2)
    module = ModuleRep(field, 2, {'x': [[0, 0], [1, 0]]}, 'M2')
    str(module)  # test the string representation

    assert module.dim == 2
    assert module.name == 'M2'
    assert field.to_json(module.act('x')) == [[0, 0], [1, 0]]
    new_module = ModuleRep.from_dict(module.to_dict())
    assert new_module.field == field
    assert field.equal(new_module.act('x'), module.act('x'))

    with pytest.raises(AssertionError):
        ModuleRep(field, 2, {'x': [[0, 1, 0]]})


def test_nakayama_hom_dims(nakayama4):
    """Test stable hom dimensions of k[x]/(x^4) against min(i, j, n - i, n - j)."""
    cat, _ = nakayama4
    n = 4
    assert cat.indecomposables == ('M1', 'M2', 'M3')
    assert str(cat.field) == 'F_2'
    for i in range(1, n):
        for j in range(1, n):
            expected = min(i, j, n - i, n - j)
            assert cat.hom_dim_names('M{}'.format(i), 'M{}'.format(j)) == expected


def test_nakayama_matches_oracle():
    """Test that the presentations agree with the brute-force oracle."""
    for n, p in ((3, 2), (4, 2), (4, 3)):
        cat, _ = nakayama_stable(n, p)
        table = oracle_table(n, p)
        for i in range(1, n):
            for j in range(1, n):
                assert cat.hom_dim_names('M{}'.format(i), 'M{}'.format(j)) == \
                    table[i - 1][j - 1]
    dim, reps = oracle_stable_hom(4, 2, 2, 2)
    assert dim == 2
    assert len(reps) == 2


def test_nakayama_shift(nakayama4):
    """Test that the shift of k[x]/(x^4) is the syzygy."""
    cat, _ = nakayama4
    shift = cat.shift
    assert shift.apply_obj(Obj('M1')) == Obj('M3')
    assert shift.apply_obj(Obj('M3')) == Obj('M1')
    assert shift.apply_obj(Obj('M2')) == Obj('M2')
    for p in (2, 3):
        for i in range(1, 4):
            assert syzygy(4, p, i) == oracle_syzygy(4, p, i)
    assert [oracle_syzygy(5, 3, i) for i in range(1, 5)] == [4, 3, 2, 1]
    assert syzygy(4, 2, 1) == 3
    images, fixed = tau_orbit(4, 2)
    assert images == {'M1': 'M1', 'M2': 'M2', 'M3': 'M3'}
    assert fixed


def test_nakayama_presentation(nakayama4):
    """Test the provenance and structure checks of the catalog presentation."""
    cat, triangulation = nakayama4
    assert cat.provenance == {'kind': 'nakayama', 'n': 4, 'p': 2}
    assert validate_presentation(cat).status == 'Pass'
    assert len(triangulation.generators) > 0
    assert catalog_stable(cat.provenance).names == cat.indecomposables
    builder = catalog_cone_builder(cat)
    f = cat.hom_basis(Obj('M1'), Obj('M2'))[0]
    tri = builder(f)
    assert tri.f == f
    assert triangulation.is_distinguished(tri).is_yes


def test_nakayama_is_validated():
    """Test that unsupported parameters are rejected."""
    with pytest.raises(AssertionError):
        nakayama_stable(7, 2)
    with pytest.raises(AssertionError):
        nakayama_stable(1, 2)
    with pytest.raises(ValueError):
        nakayama_stable(3, 7)
    with pytest.raises(ValueError):
        catalog_stable({'kind': 'dynkin'})
    assert CATALOG_KINDS == ('nakayama', 'a2_costable')


def test_a2_costable(a2):
    """Test the injectively stable category of the quiver 1 -> 2."""
    cat, triangulation = a2
    s2 = Obj('S2')
    assert cat.indecomposables == ('S2',)
    assert cat.provenance == {'kind': 'a2_costable', 'p': 2}
    assert cat.hom_dim(s2, s2) == oracle_costable_end(2)[0] == 1
    assert oracle_costable_end(2)[1] == 0
    assert cat.shift.apply_obj(s2).is_zero
    assert not functor_faithful_on(cat.shift, [(s2, s2)], cat)
    assert validate_presentation(cat).status == 'Pass'
    assert triangulation.generators[0].A.is_zero
