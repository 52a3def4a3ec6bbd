# coding=utf-8
"""The shift sigma of a quotient Z/D and its induced triangles."""
from __future__ import division
import itertools
import logging

import numpy as np

from ..decision import Decision
from ..exactla import solve
from ..addcat.obj import Obj
from ..addcat.mor import Mor, column
from ..addcat.functor import AdditiveFunctorData, apply_functor
from ..addcat.presentation import MORPHISM_BUDGET
from ..rtstruct.triangle import Triangle, identity_triangle, completion_space
from ..rtstruct.triangulation import Triangulation
from ..report import CheckResult
from ..approx import approximation_triangle, ideal_subspace, is_d_monic, is_d_epic, \
    is_left_approximation, is_right_approximation
from .presentation import HypothesisError

_logger = logging.getLogger(__name__)

VANISHING_SAMPLES = 200


def fix_sigma_triangles(quotient, triangulation, seed=None):
    """Fix a triangle M -> D_M -> sigma M -> TM for every member M of Z.

    Members of D get the triangle M -> M -> 0 -> TM. The others get the
    distinguished triangle on the minimal left D-approximation of M, whose
    second morphism must be a right D-approximation and whose third object
    must lie in Z.

    Args:
        quotient: The QuotientPresentation.
        triangulation: The Triangulation of the base category.
        seed: Optional integer seed. If given, every triangle is conjugated by
            seeded automorphisms of D_M and sigma M, which gives another valid
            choice. (Default: None).

    Returns:
        A dictionary from member names to Triangle objects.
    """
    base, d_sub, z_sub = quotient.base, quotient.d, quotient.z
    table = {}
    for k, name in enumerate(z_sub.members):
        obj = Obj((name,))
        if d_sub.contains(name):
            table[name] = identity_triangle(base, obj)
            continue
        decision = approximation_triangle(obj, d_sub, triangulation)
        if not decision.is_yes:
            raise HypothesisError('sigma triangle', {'object': name},
                                  'no witness triangle found for {}: {}'.format(
                                      name, decision.reason))
        tri = decision.witness
        if not is_left_approximation(tri.f, d_sub) or \
                not is_right_approximation(tri.g, d_sub) or not z_sub.contains(tri.C):
            raise HypothesisError('sigma triangle', {'object': name, 'triangle': tri},
                                  'no witness triangle found for {}'.format(name))
        if seed is not None:
            u = base.random_automorphism(tri.B, seed + 2 * k)
            v = base.random_automorphism(tri.C, seed + 2 * k + 1)
            tri = tri.conjugate(Mor.identity(base, obj), u, v)
        table[name] = tri
    _logger.debug('sigma triangles fixed for %s', ', '.join(table))
    return table


def _random_point(field, solution, rng):
    """Get the particular solution or, with a numpy Generator, a random solution."""
    particular, space = solution
    if rng is None or not space.dim:
        return particular
    coeffs = field.random(space.dim, rng)
    return particular + field.matmul(coeffs.reshape(1, -1), space.basis).reshape(-1)


def sigma_base_morphism(first, second, mor, rng=None):
    """Get c: sigma M -> sigma N completing a base morphism between fixed triangles.

    Args:
        first: The fixed triangle M -> D_M -> sigma M -> TM.
        second: The fixed triangle N -> D_N -> sigma N -> TN.
        mor: A base Mor M -> N.
        rng: An optional numpy Generator. If given, the intermediate choices
            are random instead of the particular solutions.

    Returns:
        A tuple with g: D_M -> D_N satisfying g alpha_M = alpha_N mor and the
        completion c.
    """
    cat = mor.category
    field = cat.field
    target = cat.compose(second.f, mor)
    solution = solve(field, cat.pre_matrix(first.f, second.B), target.coords)
    if solution is None:
        raise ValueError('{} does not factor through the D-approximation of '
                         '{}.'.format(target, first.A))
    g = Mor(cat, first.B, second.B, _random_point(field, solution, rng))
    completion = completion_space(first, second, mor, g)
    if completion is None:
        raise ValueError('The morphism of sigma triangles on {} -> {} does not '
                         'complete.'.format(first.A, second.A))
    c = Mor(cat, first.C, second.C, _random_point(field, completion, rng))
    return g, c


def sigma_on_morphism(quotient, mor, seed=None):
    """Apply sigma to a morphism of the quotient.

    The morphism is lifted to Z, extended to the D-approximations and completed
    to a morphism of the fixed triangles, whose third component is projected
    back to the quotient.

    Args:
        quotient: The QuotientPresentation.
        mor: A Mor of the quotient category.
        seed: Optional integer seed. If given, the lift and every intermediate
            choice are random, which must not change the result. (Default: None).

    Returns:
        A Mor sigma(source) -> sigma(target) of the quotient category.
    """
    base = quotient.base
    field = base.field
    rng = None if seed is None else np.random.default_rng(seed)
    lifted = quotient.lift(mor)
    if rng is not None:
        ideal = ideal_subspace(quotient.d, lifted.source, lifted.target)
        if ideal.dim:
            noise = field.matmul(field.random(ideal.dim, rng).reshape(1, -1),
                                 ideal.basis).reshape(-1)
            lifted = Mor(base, lifted.source, lifted.target, lifted.coords + noise)
    first = quotient.sigma_triangle(mor.source)
    second = quotient.sigma_triangle(mor.target)
    _, c = sigma_base_morphism(first, second, lifted, rng)
    return quotient.project(c)


def build_sigma(quotient):
    """Get sigma as an AdditiveFunctorData on the quotient category."""
    cat = quotient.category
    field = cat.field
    table = quotient.sigma_table
    on_objects = {x: quotient.project_obj(table[x].C) for x in quotient.survivors}
    on_homs = {}
    for x, y in itertools.product(quotient.survivors, repeat=2):
        ox, oy = Obj((x,)), Obj((y,))
        rows = cat.hom_dim(on_objects[x], on_objects[y])
        cols = []
        for basis_mor in cat.hom_basis(ox, oy):
            _, c = sigma_base_morphism(table[x], table[y], quotient.lift(basis_mor))
            cols.append(quotient.project(c).coords)
        if cols:
            on_homs[(x, y)] = field.stack(cols, rows).T
    return AdditiveFunctorData(on_objects, on_homs, 'sigma')


def quotient_triangle(quotient, triangle):
    """Get the sextuple M -> N -> P -> sigma M of the quotient from a base triangle.

    The first morphism of the triangle must be D-monic, so the approximation
    alpha_M factors as n f. Completing (1, n) against the fixed triangle of M
    gives the connecting morphism P -> sigma M.

    Args:
        quotient: The QuotientPresentation.
        triangle: A distinguished Triangle of the base with objects in add Z.

    Returns:
        A Triangle of the quotient category.
    """
    base = quotient.base
    field = base.field
    for obj in triangle.objects:
        if not quotient.z.contains(obj):
            raise ValueError('Triangle {} has objects outside {}.'.format(
                triangle, quotient.z))
    if not is_d_monic(triangle.f, quotient.d):
        raise ValueError('First morphism of {} is not D-monic.'.format(triangle))
    fixed = quotient.sigma_triangle(triangle.A)
    solution = solve(field, base.pre_matrix(triangle.f, fixed.B), fixed.f.coords)
    if solution is None:
        raise ValueError('The approximation of {} does not factor through the first '
                         'morphism of {}.'.format(triangle.A, triangle))
    n = Mor(base, triangle.B, fixed.B, solution[0])
    completion = completion_space(triangle, fixed, Mor.identity(base, triangle.A), n)
    if completion is None:
        raise ValueError('No morphism from {} completes to its sigma triangle.'.format(
            triangle))
    pi = Mor(base, triangle.C, fixed.C, completion[0])
    return Triangle(quotient.project(triangle.f), quotient.project(triangle.g),
                    quotient.project(pi))


def quotient_cone(quotient, triangulation, mor):
    """Get a quotient triangle whose first morphism is a given quotient morphism.

    The lift mu of the morphism is replaced by the D-monic morphism
    (mu, alpha_M): M -> N + D_M, whose quotient image is the original morphism.
    """
    base = quotient.base
    lifted = quotient.lift(mor)
    fixed = quotient.sigma_triangle(lifted.source)
    widened = column(base, lifted.source, [lifted, fixed.f])
    decision = triangulation.extend_morphism(widened)
    if not decision.is_yes:
        raise ValueError('No distinguished triangle on {}: {}'.format(
            widened, decision.reason))
    image = quotient_triangle(quotient, decision.witness)
    return Triangle(mor, image.g, image.h)


def induced_triangulation(quotient, triangulation, budget=MORPHISM_BUDGET, seed=None):
    """Get the right triangulation of the quotient induced by the base triangles.

    The generators are the quotient images of the distinguished triangles
    within the rank bound whose objects lie in Z and whose first morphism is
    D-monic. The cone builder is quotient_cone.

    Args:
        quotient: The QuotientPresentation with fixed sigma triangles.
        triangulation: The Triangulation of the base category.
        budget: The largest hom-space enumerated completely. (Default: 16).
        seed: Optional integer seed. If None, the seed of the triangulation.

    Returns:
        A Triangulation of the quotient category.
    """
    seed = triangulation.seed if seed is None else seed
    tris, exhaustive = triangulation.triangles(budget, seed)
    generators, seen = [], set()
    for tri in tris:
        if not all(quotient.z.contains(obj) for obj in tri.objects):
            continue
        if not is_d_monic(tri.f, quotient.d):
            continue
        image = quotient_triangle(quotient, tri)
        if image.key() not in seen:
            seen.add(image.key())
            generators.append(image)
    if not exhaustive:
        _logger.debug('induced triangulation seeded from a sampled triangle list')

    def _cone(mor):
        return quotient_cone(quotient, triangulation, mor)

    _logger.info('induced triangulation of %s has %d generators', quotient,
                 len(generators))
    return Triangulation(quotient.category, generators, triangulation.rank_bound,
                         _cone, seed)


def cone_stays_in_z(quotient, triangulation, mor):
    """Check that a distinguished triangle on a D-monic morphism has its cone in Z.

    Args:
        quotient: The QuotientPresentation.
        triangulation: The Triangulation of the base category.
        mor: A D-monic base Mor between objects of add Z.

    Returns:
        True if the cone lies in Z. False if it does not or if no triangle on
        the morphism could be found.
    """
    if not is_d_monic(mor, quotient.d):
        raise ValueError('{} is not D-monic.'.format(mor))
    decision = triangulation.extend_morphism(mor)
    if not decision.is_yes:
        _logger.warning('no triangle found on %s: %s', mor, decision.reason)
        return False
    return quotient.z.contains(decision.witness.C)


def factor_through_d_triangle(triangle, mor, d_sub):
    """Factor a morphism into the third object through the second morphism.

    For a triangle A -> B -> C -> TA with B in add D and c: X -> C with h c = 0,
    find d: X -> B with c = g d.

    Returns:
        A Decision. Yes carries d.
    """
    cat = triangle.category
    if not d_sub.contains(triangle.B):
        raise ValueError('Middle object {} is not in {}.'.format(triangle.B, d_sub))
    if not cat.compose(triangle.h, mor).is_zero:
        raise ValueError('The connecting morphism does not kill {}.'.format(mor))
    solution = solve(cat.field, cat.post_matrix(triangle.g, mor.source), mor.coords)
    if solution is None:
        return Decision.no('no factorization through {}'.format(triangle.g), mor)
    return Decision.yes(Mor(cat, mor.source, triangle.B, solution[0]))


def vanishing_pulls_back(top, bottom, x, y, z, d_sub):
    """Check that a morphism of triangles vanishing in Z/D at C also vanishes at A.

    The top triangle M -> D -> S -> TM has its middle object in add D and the
    bottom triangle X -> Y -> Z -> TX has a D-epic second morphism. When D is
    factor-through-epic, z in [D] forces x in [D].

    Args:
        top: The Triangle M -> D -> S -> TM.
        bottom: The Triangle X -> Y -> Z -> TX.
        x: A Mor M -> X.
        y: A Mor D -> Y.
        z: A Mor S -> Z.
        d_sub: The SubcatSpec D.

    Returns:
        A Decision. No carries x and z when z factors through add D but x
        does not.
    """
    cat = top.category
    if not d_sub.contains(top.B):
        raise ValueError('Middle object {} is not in {}.'.format(top.B, d_sub))
    if not is_d_epic(bottom.g, d_sub):
        raise ValueError('{} is not D-epic.'.format(bottom.g))
    t_x = apply_functor(cat.shift, x)
    if cat.compose(y, top.f) != cat.compose(bottom.f, x) or \
            cat.compose(z, top.g) != cat.compose(bottom.g, y) or \
            cat.compose(bottom.h, z) != cat.compose(t_x, top.h):
        raise ValueError('(x, y, z) is not a morphism of triangles.')
    if not ideal_subspace(d_sub, z.source, z.target).contains(z.coords):
        return Decision.yes(reason='z does not factor through D')
    if ideal_subspace(d_sub, x.source, x.target).contains(x.coords):
        return Decision.yes({'x': x, 'z': z})
    return Decision.no('z factors through D but x does not', {'x': x, 'z': z})


def check_vanishing_pullback(quotient, triangulation, budget=MORPHISM_BUDGET,
                             samples=VANISHING_SAMPLES, seed=None):
    """Check vanishing_pulls_back on seeded random morphisms of triangles.

    Top rows are the fixed sigma triangles and bottom rows are the distinguished
    triangles with a D-epic second morphism. Each sample draws x at random,
    solves y f1 = f2 x for a random y and completes (x, y) to a random z.

    Args:
        quotient: The QuotientPresentation. D must be factor-through-epic.
        triangulation: The Triangulation of the base category.
        budget: Morphism budget for the enumeration of bottom triangles.
        samples: Number of sampled diagrams. (Default: 200).
        seed: Optional integer seed. (Default: the seed of the triangulation).

    Returns:
        A CheckResult named vanishing pullback.
    """
    seed = triangulation.seed if seed is None else seed
    rng = np.random.default_rng(seed)
    cat, d_sub = quotient.base, quotient.d
    field = cat.field
    result = CheckResult('vanishing pullback')
    result.exhaustive = False
    table = fix_sigma_triangles(quotient, triangulation)
    tops = [table[name] for name in sorted(table)]
    tris, _ = triangulation.triangles(budget, seed)
    bottoms = [t for t in tris if is_d_epic(t.g, d_sub)]
    if not tops or not bottoms:
        result.note('vacuous: no conforming diagrams')
        return result
    hits = 0
    for _ in range(samples):
        top = tops[rng.integers(len(tops))]
        bottom = bottoms[rng.integers(len(bottoms))]
        x = Mor(cat, top.A, bottom.A,
                field.random(cat.hom_dim(top.A, bottom.A), rng))
        target = cat.compose(bottom.f, x)
        solution = solve(field, cat.pre_matrix(top.f, bottom.B), target.coords)
        if solution is None:
            continue
        y = Mor(cat, top.B, bottom.B, _random_point(field, solution, rng))
        completion = completion_space(top, bottom, x, y)
        if completion is None:
            continue
        z = Mor(cat, top.C, bottom.C, _random_point(field, completion, rng))
        decision = vanishing_pulls_back(top, bottom, x, y, z, d_sub)
        if ideal_subspace(d_sub, z.source, z.target).contains(z.coords):
            hits += 1
        result.add_decision(decision, '040005', 'VanishingPullback', 'Diagram',
                            '{} -> {}'.format(top.A, bottom.A), 'Diagram:')
    result.note('{} of {} diagrams had z in [D]'.format(hits, result.checked))
    _logger.debug('vanishing pullback: %d diagrams, %d with z in [D]',
                  result.checked, hits)
    return result


def check_induced_square(quotient, first, second, a, b):
    """Check that a morphism of D-monic triangles induces a morphism of quotient triangles.

    Args:
        quotient: The QuotientPresentation.
        first: A base Triangle M1 -> N1 -> P1 -> TM1 with D-monic first morphism.
        second: A base Triangle M2 -> N2 -> P2 -> TM2 with D-monic first morphism.
        a: A base Mor M1 -> M2.
        b: A base Mor N1 -> N2 with b f1 = f2 a.

    Returns:
        A Decision. Yes carries the completion c. No carries the square that
        fails to commute.
    """
    completion = completion_space(first, second, a, b)
    if completion is None:
        return Decision.no('the base morphism does not complete', {'a': a, 'b': b})
    c = Mor(first.category, first.C, second.C, completion[0])
    cat = quotient.category
    q1, q2 = quotient_triangle(quotient, first), quotient_triangle(quotient, second)
    qa, qb, qc = quotient.project(a), quotient.project(b), quotient.project(c)
    if cat.compose(qc, q1.g) != cat.compose(q2.g, qb):
        return Decision.no('c g1 != g2 b in the quotient', {'c': c})
    sigma_a = apply_functor(cat.shift, qa)
    if cat.compose(q2.h, qc) != cat.compose(sigma_a, q1.h):
        return Decision.no('pi2 c != sigma(a) pi1 in the quotient', {'c': c})
    return Decision.yes({'c': c})
