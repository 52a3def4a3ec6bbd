# coding=utf-8
import pytest

from triangulated_quotient.addcat.obj import Obj
from triangulated_quotient.addcat.mor import Mor
from triangulated_quotient.rtstruct import Triangle, Triangulation, \
    trivial_triangle, identity_triangle, check_axioms
from triangulated_quotient.rtstruct.triangle import sextuple_isomorphic, \
    completion_space, complete_morphism, direct_sum_triangle, derotations, derotate
from triangulated_quotient.rtstruct.axioms import ALL_LEVELS, check_tr1, \
    check_tr2, check_tr3, check_tr4, check_tr5, check_exactness, check_derotation


def _basic(cat, x, y):
    return cat.hom_basis(Obj(x), Obj(y))[0]


def test_triangle_init(nakayama3):
    """Test the initialization of Triangle objects and basic properties."""
    cat, triangulation = nakayama3
    tri = triangulation.triangle_on(_basic(cat, 'M1', 'M2'))
    str(tri)  # test the string representation

    assert tri.A == Obj('M1')
    assert tri.B == Obj('M2')
    assert tri.shifted_a == cat.shift.apply_obj(tri.A)
    assert tri.category is cat
    assert tri.composites_vanish()
    assert Triangle.from_dict(cat, tri.to_dict()) == tri

    with pytest.raises(ValueError):
        Triangle(tri.f, tri.f, tri.h)


def test_rotate(nakayama3):
    """Test that rotation moves every object one step to the left."""
    cat, triangulation = nakayama3
    tri = triangulation.triangle_on(_basic(cat, 'M2', 'M1'))
    rot = tri.rotate()
    assert rot.A.is_identical(tri.B)
    assert rot.B.is_identical(tri.C)
    assert rot.C.is_identical(tri.shifted_a)
    assert rot.f == tri.g
    assert triangulation.is_distinguished(rot).is_yes


def test_trivial_triangles(nakayama3):
    """Test that trivial and identity triangles are distinguished."""
    cat, triangulation = nakayama3
    for name in cat.indecomposables:
        assert triangulation.is_distinguished(trivial_triangle(cat, Obj(name))).is_yes
        assert triangulation.is_distinguished(identity_triangle(cat, Obj(name))).is_yes
    split = direct_sum_triangle(cat, Obj('M1'), Obj('M2'))
    assert split.h.is_zero
    assert triangulation.is_distinguished(split).is_yes


def test_conjugate_is_isomorphic(nakayama3):
    """Test that a conjugated triangle is isomorphic to the original one."""
    cat, triangulation = nakayama3
    tri = triangulation.triangle_on(_basic(cat, 'M1', 'M1'))
    a = cat.random_automorphism(tri.A, 1)
    b = cat.random_automorphism(tri.B, 2)
    c = cat.random_automorphism(tri.C, 3)
    conj = tri.conjugate(a, b, c)
    decision = sextuple_isomorphic(tri, conj)
    assert decision.is_yes
    assert set(decision.witness) == {'a', 'b', 'c'}
    assert triangulation.is_distinguished(conj).is_yes

    with pytest.raises(ValueError):
        tri.conjugate(Mor.zero(cat, tri.A, tri.A), b, c)


def test_completion_space(nakayama3):
    """Test the completions of a pair of identities."""
    cat, triangulation = nakayama3
    tri = triangulation.triangle_on(_basic(cat, 'M1', 'M2'))
    ones = Mor.identity(cat, tri.A), Mor.identity(cat, tri.B)
    solution = completion_space(tri, tri, *ones)
    assert solution is not None
    c = complete_morphism(tri, tri, *ones)
    assert c is not None
    assert cat.is_isomorphism(c)[0]

    with pytest.raises(ValueError):
        completion_space(tri, tri, ones[0], Mor.zero(cat, tri.B, tri.B))


def test_direct_sum_of_triangles(nakayama3):
    """Test that the direct sum of distinguished triangles is distinguished."""
    cat, triangulation = nakayama3
    t1 = triangulation.triangle_on(_basic(cat, 'M1', 'M2'))
    t2 = triangulation.triangle_on(_basic(cat, 'M2', 'M1'))
    total = t1.direct_sum(t2)
    assert total.A.is_identical(Obj(('M1', 'M2')))
    assert total.composites_vanish()
    assert triangulation.is_distinguished(total).is_yes


def test_non_triangle_is_rejected(nakayama3):
    """Test that a sextuple with a wrong connecting morphism is not distinguished."""
    cat, triangulation = nakayama3
    tris, _ = triangulation.triangles()
    tri = next(t for t in tris if not t.h.is_zero)
    broken = Triangle(tri.f, tri.g, Mor.zero(cat, tri.C, tri.shifted_a))
    assert triangulation.is_distinguished(broken).is_no


def test_zero_sextuple_is_rejected(a2):
    """Test that (S2, S2, 0, 0, 0, 0) is not distinguished on the quiver fixture."""
    cat, triangulation = a2
    s2 = Obj('S2')
    zero_tri = Triangle(Mor.zero(cat, s2, s2), Mor.zero(cat, s2, s2),
                        Mor.zero(cat, s2, cat.shift.apply_obj(s2)))
    assert triangulation.is_distinguished(zero_tri).is_no


def test_derotation(nakayama3):
    """Test that de-rotating a rotated triangle recovers a distinguished triangle."""
    cat, triangulation = nakayama3
    tri = triangulation.triangle_on(_basic(cat, 'M1', 'M2'))
    rot = tri.rotate()
    data = derotations(rot, tri.A)
    assert data is not None
    particular, _, _ = data
    back = derotate(rot, tri.A, Mor(cat, tri.A, rot.A, particular))
    assert back.A.is_identical(tri.A)
    assert triangulation.is_distinguished(back).is_yes


def test_triangulation_to_dict(nakayama3):
    """Test that a triangulation is stored as its list of generators."""
    cat, triangulation = nakayama3
    tri_list = triangulation.to_dict()
    assert len(tri_list) == len(triangulation)
    new_tri = Triangulation.from_dict(cat, tri_list)
    assert new_tri.generators == triangulation.generators
    assert new_tri.cone_builder is None
    assert new_tri.is_distinguished(triangulation.generators[0]).is_yes


def test_basic_levels(nakayama3):
    """Test the cheap axiom levels on k[x]/(x^3)."""
    _, triangulation = nakayama3
    assert check_tr1(triangulation).status == 'Pass'
    assert check_tr3(triangulation).status == 'Pass'
    assert check_exactness(triangulation).status == 'Pass'


def test_axiom_suite(nakayama4):
    """Test that the k[x]/(x^4) fixture passes every axiom level."""
    _, triangulation = nakayama4
    report = check_axioms(triangulation)
    assert [c.name for c in report.checks] == list(ALL_LEVELS)
    for chk in report.checks:
        assert chk.status == 'Pass', chk.to_text()
    assert report.check('iso_completion').checked >= 100
    assert report.exit_code == 0


def test_axiom_levels_are_validated(nakayama3):
    """Test that unknown axiom levels are rejected."""
    _, triangulation = nakayama3
    with pytest.raises(ValueError):
        check_axioms(triangulation, ['tr9'])
    report = check_axioms(triangulation, ['tr3', 'tr1'])
    assert [c.name for c in report.checks] == ['tr1', 'tr3']


def test_derotation_fails_without_faithful_shift(a2):
    """Test that the quiver fixture violates de-rotation."""
    _, triangulation = a2
    result = check_derotation(triangulation)
    assert result.status == 'Fail'
    assert result.violations
    assert 'witness' in result.violations[0]


def test_missing_triangles_fail_tr2(nakayama3):
    """Test that a store with only the trivial triangle on M1 fails TR2."""
    cat, _ = nakayama3
    store = Triangulation(cat, [trivial_triangle(cat, Obj('M1'))], rank_bound=1)
    f = _basic(cat, 'M1', 'M2')
    assert store.extend_morphism(f).is_no
    result = check_tr2(store)
    assert result.status == 'Fail'
    assert all(err['code'] == '020002' for err in result.violations)
    assert any(err['element_id'] == repr(f) for err in result.violations)


def test_non_completing_square_fails_tr4(nakayama3):
    """Test that a triangle with a zero second morphism breaks TR4."""
    cat, _ = nakayama3
    m1, zero = Obj('M1'), Obj.zero()
    bogus = Triangle(Mor(cat, zero, m1), Mor.zero(cat, m1, m1), Mor(cat, m1, zero))
    store = Triangulation(cat, [trivial_triangle(cat, m1), bogus], rank_bound=1)
    result = check_tr4(store)
    assert result.status == 'Fail'
    assert result.violations[0]['code'] == '020004'


def test_missing_cone_fails_tr5(nakayama3):
    """Test that a store without the zero triangle fails the octahedral axiom."""
    cat, _ = nakayama3
    store = Triangulation(cat, [identity_triangle(cat, Obj('M1'))], rank_bound=1)
    one = Mor.identity(cat, Obj('M1'))
    tri = store.triangle_on(one)
    assert store.octahedron(tri, tri, tri).is_no
    result = check_tr5(store)
    assert result.status == 'Fail'
    assert any(err['code'] == '020005' for err in result.violations)


def test_nonzero_composite_fails_exactness(nakayama3):
    """Test that (f, 1, 0) with g o f != 0 fails the exactness check."""
    cat, _ = nakayama3
    f = _basic(cat, 'M1', 'M2')
    m2 = Obj('M2')
    bad = Triangle(f, Mor.identity(cat, m2),
                   Mor.zero(cat, m2, cat.shift.apply_obj(Obj('M1'))))
    assert not bad.composites_vanish()
    store = Triangulation(cat, [bad], rank_bound=1)
    result = check_exactness(store)
    assert result.status == 'Fail'
    assert result.violations[0]['code'] == '020006'


def test_exactness_checks_every_rotation_depth(nakayama3):
    """Test that exactness is tested down to the deepest rotation of a triangle."""
    cat, _ = nakayama3
    m1, zero = Obj('M1'), Obj.zero()
    bogus = Triangle(Mor(cat, zero, m1), Mor.zero(cat, m1, m1), Mor(cat, m1, zero))
    assert bogus.composites_vanish()
    store = Triangulation(cat, [bogus], rank_bound=1)
    result = check_exactness(store)
    assert result.status == 'Fail'
    depths = set()
    for err in result.violations:
        if err['element_id'] == repr(bogus):
            depths.add(int(err['message'].rstrip('.').split()[-1]))
    assert depths == {0, 1, 3}
