# coding=utf-8
"""The quasi-inverse omega of sigma and the checks that sigma is an equivalence."""
from __future__ import division
import itertools
import logging

from ..decision import Decision
from ..exactla import solve
from ..report import CheckResult
from ..addcat.obj import Obj
from ..addcat.mor import Mor
from ..addcat.functor import AdditiveFunctorData, functor_full_on, \
    functor_faithful_on
from ..rtstruct.triangle import completion_space
from ..approx import approximation_triangle, is_right_approximation
from .presentation import HypothesisError
from .sigma import sigma_base_morphism

_logger = logging.getLogger(__name__)


def fix_omega_triangles(quotient, triangulation):
    """Fix a triangle omega X -> D^X -> X' -> T omega X for every quotient indecomposable X.

    X' projects to X in the quotient, the first morphism is a left
    D-approximation and the second one is a right D-approximation. The source
    omega X is the first member of Z outside D (in category order) whose
    approximation triangle ends in such an X'.

    Returns:
        A dictionary from quotient indecomposables to Triangle objects.

    Raises:
        HypothesisError: if some X has no such triangle.
    """
    d_sub, z_sub = quotient.d, quotient.z
    found = {}
    for name in z_sub.members:
        if d_sub.contains(name):
            continue
        decision = approximation_triangle(name, d_sub, triangulation)
        if not decision.is_yes:
            continue
        tri = decision.witness
        if not is_right_approximation(tri.g, d_sub) or not z_sub.contains(tri.C):
            continue
        end = quotient.project_obj(tri.C)
        if end.rank == 1:
            found.setdefault(end[0], tri)
    missing = [x for x in quotient.survivors if x not in found]
    if missing:
        raise HypothesisError('omega triangle', {'objects': missing},
                              'no triangle omega X -> D -> X found for {}'.format(
                                  ', '.join(missing)))
    return {x: found[x] for x in quotient.survivors}


def _omega_base_morphism(first, second, mor):
    """Get w: W1 -> W2 with T(w) completing a morphism of the rotated triangles.

    Args:
        first: A triangle W1 -> D1 -> X1 -> TW1 with a right D-approximation D1 -> X1.
        second: A triangle W2 -> D2 -> X2 -> TW2 of the same kind.
        mor: A base Mor X1 -> X2.

    Returns:
        A Mor W1 -> W2 or None if T is not full on Hom(W1, W2).
    """
    cat = mor.category
    field = cat.field
    target = cat.compose(mor, first.g)
    solution = solve(field, cat.post_matrix(second.g, first.B), target.coords)
    if solution is None:
        raise ValueError('{} does not factor through the D-approximation of '
                         '{}.'.format(target, second.C))
    d = Mor(cat, first.B, second.B, solution[0])
    rot1, rot2 = first.rotate(), second.rotate()
    completion = completion_space(rot1, rot2, d, mor)
    if completion is None:
        raise ValueError('The morphism of rotated triangles on {} -> {} does not '
                         'complete.'.format(first.C, second.C))
    shifted = completion[0]
    t_mat = cat.shift.matrix(cat, cat, first.A, second.A)
    lifted = solve(field, t_mat, shifted)
    if lifted is None:
        return None
    return Mor(cat, first.A, second.A, lifted[0])


def build_omega(quotient, triangulation, triangles=None):
    """Get omega as an AdditiveFunctorData on the quotient category.

    A quotient morphism x: X -> Y is lifted to X' -> Y', extended to the right
    D-approximations and completed on the rotated triangles to a morphism
    T omega X -> T omega Y. Fullness of T on Z gives omega x.

    Args:
        quotient: The QuotientPresentation with fixed sigma triangles.
        triangulation: The Triangulation of the base category.
        triangles: An optional result of fix_omega_triangles.

    Returns:
        An AdditiveFunctorData named omega.
    """
    triangles = fix_omega_triangles(quotient, triangulation) if triangles is None \
        else triangles
    cat = quotient.category
    field = cat.field
    on_objects = {x: quotient.project_obj(t.A) for x, t in triangles.items()}
    on_homs = {}
    for x, y in itertools.product(quotient.survivors, repeat=2):
        t_x, t_y = triangles[x], triangles[y]
        rows = cat.hom_dim(on_objects[x], on_objects[y])
        cols = []
        for basis_mor in cat.hom_basis(Obj((x,)), Obj((y,))):
            lifted = quotient.lift(basis_mor, t_x.C, t_y.C)
            w = _omega_base_morphism(t_x, t_y, lifted)
            if w is None:
                raise HypothesisError('shift full on Z', {'source': t_x.A,
                                                          'target': t_y.A})
            cols.append(quotient.project(w).coords)
        if cols:
            on_homs[(x, y)] = field.stack(cols, rows).T
    return AdditiveFunctorData(on_objects, on_homs, 'omega')


def _is_identity(cat, mor):
    return mor.source.is_identical(mor.target) and mor == Mor.identity(cat, mor.source)


def _sigma_omega_iso(quotient, x, cotriangle):
    """Exhibit sigma omega X = X by comparing two triangles starting at omega X."""
    base = quotient.base
    cat = quotient.category
    fixed = quotient.sigma_triangle(cotriangle.A)
    ident = Mor.identity(base, cotriangle.A)
    _, forward = sigma_base_morphism(fixed, cotriangle, ident)
    _, backward = sigma_base_morphism(cotriangle, fixed, ident)
    g, g_inv = quotient.project(forward), quotient.project(backward)
    if not g.target.is_identical(Obj((x,))):
        return Decision.no('sigma omega {} is {}'.format(x, g.source), {'object': x})
    if not _is_identity(cat, cat.compose(g, g_inv)) or \
            not _is_identity(cat, cat.compose(g_inv, g)):
        return Decision.no('sigma omega {} is not isomorphic to {}'.format(x, x),
                           {'object': x, 'g': g, 'g_inverse': g_inv})
    return Decision.yes({'g': g, 'g_inverse': g_inv})


def _omega_sigma_iso(quotient, m, omega_triangles):
    """Exhibit omega sigma M = M by comparing two triangles ending at sigma M."""
    fixed = quotient.sigma_table[m]
    image = quotient.project_obj(fixed.C)
    if image.rank != 1:
        return Decision.no('sigma {} is {}'.format(m, image), {'object': m})
    cotriangle = omega_triangles[image[0]]
    ident = Mor.identity(quotient.category, image)
    there = quotient.lift(ident, fixed.C, cotriangle.C)
    back = quotient.lift(ident, cotriangle.C, fixed.C)
    try:
        forward = _omega_base_morphism(fixed, cotriangle, there)
        backward = _omega_base_morphism(cotriangle, fixed, back)
    except ValueError as e:
        return Decision.no(str(e), {'object': m})
    if forward is None or backward is None:
        return Decision.no('shift is not full between {} and {}'.format(
            m, cotriangle.A), {'object': m})
    cat = quotient.category
    g, g_inv = quotient.project(forward), quotient.project(backward)
    if not _is_identity(cat, cat.compose(g_inv, g)) or \
            not _is_identity(cat, cat.compose(g, g_inv)):
        return Decision.no('omega sigma {} is not isomorphic to {}'.format(m, m),
                           {'object': m, 'g': g, 'g_inverse': g_inv})
    return Decision.yes({'g': g, 'g_inverse': g_inv})


def sigma_is_equivalence_directly(quotient):
    """Decide by linear algebra whether sigma is fully faithful and essentially surjective.

    Returns:
        A Decision. No carries the failing pair or the missed object.
    """
    cat = quotient.category
    sigma = quotient.sigma
    names = quotient.survivors
    pairs = [(Obj((x,)), Obj((y,))) for x, y in itertools.product(names, repeat=2)]
    failures = []
    if not functor_faithful_on(sigma, pairs, cat, failures=failures):
        x, y = failures[0]
        return Decision.no('sigma is not faithful on Hom({}, {})'.format(x, y),
                           {'source': x, 'target': y})
    if not functor_full_on(sigma, pairs, cat, failures=failures):
        x, y = failures[0]
        return Decision.no('sigma is not full on Hom({}, {})'.format(x, y),
                           {'source': x, 'target': y})
    reached = set()
    for name in names:
        image = sigma.image(name)
        if image.rank != 1:
            return Decision.no('sigma {} is {}'.format(name, image), {'object': name})
        reached.add(image[0])
    missed = [x for x in names if x not in reached]
    if missed:
        return Decision.no('{} is not in the image of sigma'.format(missed[0]),
                           {'object': missed[0]})
    return Decision.yes({x: sigma.image(x) for x in names})


def sigma_is_equivalence_by_omega(quotient, triangulation):
    """Decide whether omega is a quasi-inverse of sigma on every indecomposable.

    Returns:
        A Decision. Yes carries omega and the isomorphisms for each object.
    """
    try:
        triangles = fix_omega_triangles(quotient, triangulation)
        omega = build_omega(quotient, triangulation, triangles)
    except HypothesisError as e:
        return Decision.no(str(e), e.witness)
    isos = {}
    for x in quotient.survivors:
        decision = _sigma_omega_iso(quotient, x, triangles[x])
        if not decision.is_yes:
            return decision
        isos['sigma omega {}'.format(x)] = decision.witness
    for m in quotient.survivors:
        decision = _omega_sigma_iso(quotient, m, triangles)
        if not decision.is_yes:
            return decision
        isos['omega sigma {}'.format(m)] = decision.witness
    return Decision.yes({'omega': omega, 'isomorphisms': isos})


def check_sigma_equivalence(quotient, triangulation):
    """Decide whether sigma is an equivalence of the quotient by two independent routes.

    The first route builds omega from triangles omega X -> D^X -> X and exhibits
    the isomorphisms sigma omega = 1 and omega sigma = 1. The second route tests
    full faithfulness and essential surjectivity of sigma directly. The two
    routes must agree.

    Args:
        quotient: The QuotientPresentation with fixed sigma triangles.
        triangulation: The Triangulation of the base category.

    Returns:
        A Decision. No names the hypothesis, object or hom-pair where the
        equivalence fails or says that the routes disagree.
    """
    base = quotient.base
    members = quotient.z.members
    pairs = [(Obj((x,)), Obj((y,))) for x, y in itertools.product(members, repeat=2)]
    failures = []
    if not functor_full_on(base.shift, pairs, base, failures=failures):
        x, y = failures[0]
        return Decision.no('hypothesis failed: shift full on Z',
                           {'source': x, 'target': y})
    by_omega = sigma_is_equivalence_by_omega(quotient, triangulation)
    directly = sigma_is_equivalence_directly(quotient)
    _logger.info('sigma equivalence: omega route %s, direct route %s',
                 by_omega.status, directly.status)
    if by_omega.is_yes and directly.is_yes:
        return Decision.yes({'omega': by_omega.witness['omega'],
                             'sigma_images': directly.witness})
    if by_omega.is_yes != directly.is_yes:
        return Decision.no('the omega route and the direct route disagree',
                           {'omega_route': by_omega, 'direct_route': directly})
    return Decision.no(by_omega.reason, by_omega.witness)


def check_degeneration(quotient):
    """Check that the quotient by the zero subcategory reproduces Z with sigma = T.

    Returns:
        A CheckResult named degeneration. It is skipped when D is not empty.
    """
    if not quotient.d.is_empty:
        return CheckResult.skipped('degeneration', 'D is not empty')
    result = CheckResult('degeneration')
    base = quotient.base
    for (x, y), (base_dim, q_dim) in sorted(quotient.hom_dim_table().items()):
        result.count()
        if base_dim != q_dim:
            result.add_violation(
                '040001', 'Degeneration', 'Hom', '{}|{}'.format(x, y),
                'Hom({}, {}) has dimension {} in the quotient and {} in the '
                'base.'.format(x, y, q_dim, base_dim))
    for x in quotient.survivors:
        result.count()
        sigma_x = quotient.sigma.image(x)
        shift_x = base.shift.image(x)
        if not shift_x.in_add(quotient.z.members) or \
                sigma_x != quotient.project_obj(shift_x):
            result.add_violation(
                '040002', 'Degeneration', 'Object', x,
                'sigma {} is {} but T{} is {}.'.format(x, sigma_x, x, shift_x))
    return result
