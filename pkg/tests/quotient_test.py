# coding=utf-8
import pytest

from triangulated_quotient.addcat.obj import Obj
from triangulated_quotient.addcat.mor import Mor
from triangulated_quotient.approx import SubcatSpec
from triangulated_quotient.rtstruct import check_axioms
from triangulated_quotient.rtstruct.triangle import Triangle
from triangulated_quotient.quotient import HypothesisError, QuotientPresentation, \
    check_hypotheses, build_quotient, fix_sigma_triangles, sigma_on_morphism, \
    quotient_triangle, quotient_cone, induced_triangulation, cone_stays_in_z, \
    factor_through_d_triangle, vanishing_pulls_back, check_vanishing_pullback, \
    check_induced_square, check_sigma_equivalence, check_degeneration
from triangulated_quotient.quotient.omega import sigma_is_equivalence_directly, \
    sigma_is_equivalence_by_omega


def test_quotient_init(quotient4):
    """Test the quotient of k[x]/(x^4) by add(M2)."""
    quotient, _ = quotient4
    str(quotient)  # test the string representation

    assert quotient.survivors == ('M1', 'M3')
    assert quotient.category.indecomposables == ('M1', 'M3')
    assert quotient.z.members == ('M1', 'M2', 'M3')
    assert quotient.d.members == ('M2',)
    assert set(quotient.sigma_table) == {'M1', 'M2', 'M3'}
    assert quotient.sigma_table['M2'].C.is_zero
    table = quotient.hom_dim_table()
    assert table[('M1', 'M1')] == (1, 1)
    for base_dim, q_dim in table.values():
        assert q_dim <= base_dim


def test_project_and_lift(quotient4):
    """Test that lifting then projecting a quotient morphism is the identity."""
    quotient, _ = quotient4
    base, cat = quotient.base, quotient.category
    for x in quotient.survivors:
        for y in quotient.survivors:
            for mor in cat.hom_basis(Obj(x), Obj(y)):
                assert quotient.project(quotient.lift(mor)) == mor
    m1 = Obj('M1')
    wide = Obj(('M1', 'M2'))
    one = Mor.identity(cat, m1)
    lifted = quotient.lift(one, source=wide, target=wide)
    assert lifted.source.is_identical(wide)
    assert quotient.project(lifted) == one
    assert quotient.project_obj(wide).is_identical(m1)
    f = base.hom_basis(m1, Obj('M2'))[0]
    assert quotient.project(f).target.is_zero

    with pytest.raises(ValueError):
        quotient.lift(one, source=Obj('M3'), target=Obj('M3'))


def test_quotient_to_from_dict(quotient4):
    """Test the round trip of a quotient through its sidecar dictionary."""
    quotient, _ = quotient4
    data = quotient.to_dict()
    assert data['indecomposables'] == ['M1', 'M3']
    sidecar = data['quotient']
    assert sidecar['survivors'] == ['M1', 'M3']
    assert sidecar['d'] == ['M2']
    new_quotient = QuotientPresentation.from_dict(quotient.base, sidecar)
    assert new_quotient.survivors == quotient.survivors
    assert new_quotient.category.hom_dims == quotient.category.hom_dims
    assert new_quotient.sigma.image('M1') == quotient.sigma.image('M1')

    sidecar = dict(sidecar, survivors=['M1'])
    with pytest.raises(ValueError):
        QuotientPresentation.from_dict(quotient.base, sidecar)


def test_hypotheses(nakayama4):
    """Test the hypothesis decisions for the whole category over add(M2)."""
    cat, triangulation = nakayama4
    z_sub, d_sub = SubcatSpec.all(cat), SubcatSpec(cat, ['M2'])
    decisions = check_hypotheses(z_sub, d_sub, triangulation, mode='pair')
    assert [name for name, _ in decisions] == \
        ['D contained in Z', 'extension-closed', 'mutation pair', 'factor-through-epic']
    assert all(decision.is_yes for _, decision in decisions)
    decisions = check_hypotheses(z_sub, d_sub, triangulation)
    assert decisions[2][0] == 'Z = mu(Z; D)'

    with pytest.raises(ValueError):
        check_hypotheses(z_sub, d_sub, triangulation, mode='left')


def test_hypothesis_errors(nakayama4):
    """Test that failed hypotheses are reported by name."""
    cat, triangulation = nakayama4
    with pytest.raises(HypothesisError) as err:
        build_quotient(cat, SubcatSpec(cat, ['M1']), SubcatSpec(cat, ['M2']),
                       triangulation)
    assert err.value.name == 'D contained in Z'

    with pytest.raises(HypothesisError) as err:
        build_quotient(cat, SubcatSpec(cat, ['M1']), SubcatSpec.empty(cat),
                       triangulation)
    assert err.value.name == 'extension-closed'
    assert 'hypothesis failed: extension-closed' in str(err.value)

    decisions = check_hypotheses(SubcatSpec(cat, ['M1']), SubcatSpec(cat, ['M2']),
                                 triangulation)
    assert len(decisions) == 1
    assert decisions[0][1].is_no


def test_sigma_equivalence(quotient4):
    """Test that sigma is an equivalence of the quotient by both routes."""
    quotient, triangulation = quotient4
    sigma = quotient.sigma
    for name in quotient.survivors:
        assert sigma.image(name).rank == 1
        assert sigma.image(name)[0] in quotient.survivors
    assert sigma_is_equivalence_directly(quotient).is_yes
    assert sigma_is_equivalence_by_omega(quotient, triangulation).is_yes
    decision = check_sigma_equivalence(quotient, triangulation)
    assert decision.is_yes
    assert 'omega' in decision.witness


def test_sigma_is_independent_of_choices(quotient4):
    """Test that sigma does not depend on the lifts and completions chosen."""
    quotient, triangulation = quotient4
    cat = quotient.category
    for x in quotient.survivors:
        for y in quotient.survivors:
            for mor in cat.hom_basis(Obj(x), Obj(y)):
                canonical = sigma_on_morphism(quotient, mor)
                for seed in (1, 2, 3):
                    assert sigma_on_morphism(quotient, mor, seed) == canonical

    canonical_table = fix_sigma_triangles(quotient, triangulation)
    for seed in (1, 2, 3):
        table = fix_sigma_triangles(quotient, triangulation, seed=seed)
        assert set(table) == set(canonical_table)
        other = QuotientPresentation(quotient.base, quotient.z, quotient.d, table)
        assert other.survivors == quotient.survivors
        assert other.category.hom_dims == quotient.category.hom_dims
        for name in quotient.survivors:
            assert other.sigma.image(name) == quotient.sigma.image(name)
            assert other.sigma_table[name].A == canonical_table[name].A
        assert check_sigma_equivalence(other, triangulation).is_yes


def test_induced_triangulation(quotient4):
    """Test that the induced triangles of the quotient satisfy the axioms."""
    quotient, triangulation = quotient4
    induced = induced_triangulation(quotient, triangulation)
    assert induced.category is quotient.category
    assert len(induced.generators) > 0
    report = check_axioms(induced)
    for chk in report.checks:
        assert chk.status == 'Pass', chk.to_text()

    one = Mor.identity(quotient.category, Obj('M1'))
    cone = quotient_cone(quotient, triangulation, one)
    assert cone.f == one
    assert induced.is_distinguished(cone).is_yes


def test_quotient_triangle(quotient4):
    """Test the quotient image of a fixed sigma triangle."""
    quotient, _ = quotient4
    fixed = quotient.sigma_table['M1']
    image = quotient_triangle(quotient, fixed)
    assert image.A.is_identical(Obj('M1'))
    assert image.B.is_zero
    assert image.C.is_identical(quotient.project_obj(fixed.C))

    ones = Mor.identity(quotient.base, fixed.A), Mor.identity(quotient.base, fixed.B)
    decision = check_induced_square(quotient, fixed, fixed, *ones)
    assert decision.is_yes


def test_cone_stays_in_z(quotient4):
    """Test the cone of a D-monic morphism and the D-monic requirement."""
    quotient, triangulation = quotient4
    base = quotient.base
    fixed = quotient.sigma_table['M1']
    assert cone_stays_in_z(quotient, triangulation, fixed.f)

    with pytest.raises(ValueError):
        cone_stays_in_z(quotient, triangulation, Mor.zero(base, Obj('M1'), Obj('M1')))


def test_factor_through_d_triangle(quotient4):
    """Test that the second morphism of a sigma triangle factors through itself."""
    quotient, _ = quotient4
    fixed = quotient.sigma_table['M1']
    decision = factor_through_d_triangle(fixed, fixed.g, quotient.d)
    assert decision.is_yes
    assert quotient.base.compose(fixed.g, decision.witness) == fixed.g

    with pytest.raises(ValueError):
        factor_through_d_triangle(fixed.rotate(), fixed.h, quotient.d)


def test_vanishing_pulls_back(quotient4):
    """Test the vanishing of a morphism of triangles at its first component."""
    quotient, _ = quotient4
    base, d_sub = quotient.base, quotient.d
    fixed = quotient.sigma_table['M1']
    ones = [Mor.identity(base, obj) for obj in fixed.objects[:3]]
    decision = vanishing_pulls_back(fixed, fixed, *ones, d_sub=d_sub)
    assert decision.is_yes
    assert decision.reason == 'z does not factor through D'

    zeros = [Mor.zero(base, obj, obj) for obj in fixed.objects[:3]]
    decision = vanishing_pulls_back(fixed, fixed, *zeros, d_sub=d_sub)
    assert decision.is_yes
    assert decision.witness['x'] == zeros[0]

    with pytest.raises(ValueError):
        vanishing_pulls_back(fixed, fixed, ones[0], ones[1], zeros[2], d_sub)
    with pytest.raises(ValueError):
        vanishing_pulls_back(fixed.rotate(), fixed, ones[0], ones[1], ones[2], d_sub)


def test_vanishing_needs_faithful_shift(a2):
    """Test that vanishing does not pull back when T kills a nonzero identity."""
    cat, _ = a2
    s2, zero = Obj('S2'), Obj.zero()
    top = Triangle(Mor(cat, s2, zero), Mor(cat, zero, zero), Mor(cat, zero, zero))
    x = Mor.identity(cat, s2)
    y = z = Mor(cat, zero, zero)
    decision = vanishing_pulls_back(top, top, x, y, z, SubcatSpec.empty(cat))
    assert decision.is_no
    assert decision.witness['x'] == x


def test_check_vanishing_pullback(quotient4):
    """Test vanishing on seeded random morphisms of triangles."""
    quotient, triangulation = quotient4
    for seed in (0, 1, 2):
        result = check_vanishing_pullback(quotient, triangulation, samples=60,
                                          seed=seed)
        assert result.status == 'Pass', result.to_text()
        assert result.checked > 0
        assert not result.exhaustive
        assert any('diagrams had z in [D]' in note for note in result.notes)
    again = check_vanishing_pullback(quotient, triangulation, samples=60, seed=2)
    assert again.to_dict() == result.to_dict()


def test_degeneration(nakayama4):
    """Test that the quotient by the zero subcategory reproduces the category."""
    cat, triangulation = nakayama4
    quotient = build_quotient(cat, SubcatSpec.all(cat), SubcatSpec.empty(cat),
                              triangulation, mode='pair')
    assert quotient.survivors == cat.indecomposables
    result = check_degeneration(quotient)
    assert result.status == 'Pass'
    assert result.checked > 0


def test_degeneration_is_skipped(quotient4):
    """Test that the degeneration check only applies to D = 0."""
    quotient, _ = quotient4
    assert check_degeneration(quotient).status == 'Skipped'


def test_quotient_by_everything(nakayama4):
    """Test that Z = D gives the zero category."""
    cat, triangulation = nakayama4
    full = SubcatSpec.all(cat)
    quotient = build_quotient(cat, full, full, triangulation, check=False)
    assert quotient.survivors == ()
    assert quotient.category.indecomposables == ()
    assert quotient.hom_dim_table() == {}
