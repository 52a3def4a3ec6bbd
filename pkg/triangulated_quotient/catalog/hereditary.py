# coding=utf-8
"""The injectively stable category of representations of the quiver 1 -> 2.

A representation is a vector space with the vertex idempotents e1, e2 and the
arrow a acting on it. The indecomposables are the simples S1, S2 and P1, the
representation k -> k. The injectives are S1 and P1, which leaves S2 as the
only nonzero object of the stable category. S2 is projective but not
injective, so the cosyzygy T sends S2 to S1, which is zero in the stable
category.
"""
from __future__ import division
import logging

from ..typing import prime_modulus
from ..exactla import FieldSpec, Subspace, column_space, nullspace
from ..addcat.obj import Obj
from ..rtstruct.triangle import trivial_triangle
from ..rtstruct.triangulation import Triangulation
from .module import ModuleRep
from .stable import StableModuleCategory

_logger = logging.getLogger(__name__)
A2_PRIMES = (2, 3, 5)
ACTIONS = ('a', 'e1', 'e2')


def _rep(field, dim, e1, e2, a, name):
    return ModuleRep(field, dim, {'e1': e1, 'e2': e2, 'a': a}, name)


def simple_s1(field):
    return _rep(field, 1, [[1]], [[0]], [[0]], 'S1')


def simple_s2(field):
    return _rep(field, 1, [[0]], [[1]], [[0]], 'S2')


def projective_p1(field):
    """Get P1 = (k -> k), the projective cover of S1 and injective envelope of S2."""
    return _rep(field, 2, [[1, 0], [0, 0]], [[0, 0], [0, 1]], [[0, 0], [1, 0]], 'P1')


def envelope_s2(field):
    """Get the injective envelope S2 -> P1."""
    return projective_p1(field), field.array([[0], [1]])


def decompose(module):
    """Split a representation of 1 -> 2 into indecomposable summands.

    The kernel K of the arrow on the vertex-1 space gives copies of S1, a
    complement U of K gives copies of P1 spanned by (u, a u), and a complement
    of a(U) in the vertex-2 space gives copies of S2.

    Returns:
        A list of (name, inclusion, projection) tuples. Injective summands
        have the name None.
    """
    field = module.field
    dim = module.dim
    arrow = module.act('a')
    v1 = column_space(field, module.act('e1'))
    v2 = column_space(field, module.act('e2'))
    coeffs = nullspace(field, field.matmul(arrow, v1.basis.T))
    kern = Subspace(field, dim, field.matmul(coeffs.basis, v1.basis))
    chosen, _ = kern.extend_basis(list(v1.basis))
    tops = [v1.basis[k] for k in chosen]
    images = [field.matmul(arrow, u.reshape(-1, 1)).reshape(-1) for u in tops]
    chosen_2, _ = Subspace(field, dim, images).extend_basis(list(v2.basis))
    blocks = [('P1', [u, w]) for u, w in zip(tops, images)]
    blocks += [('S1', [k]) for k in kern.basis]
    blocks += [('S2', [v2.basis[k]]) for k in chosen_2]
    columns = field.stack([vec for _, vecs in blocks for vec in vecs], dim).T
    inverse = field.inverse(columns)
    assert inverse is not None, 'Summands do not span the representation.'
    parts, start = [], 0
    for label, vecs in blocks:
        size = len(vecs)
        name = label if label == 'S2' else None
        parts.append((name, columns[:, start:start + size], inverse[start:start + size]))
        start += size
    return parts


def a2_category(p):
    """Get the StableModuleCategory of the quiver 1 -> 2 over F_p."""
    p = prime_modulus(p, 'p')
    if p not in A2_PRIMES:
        raise ValueError('The quiver fixture is built over F_p for p in {}. '
                         'Got {}.'.format(A2_PRIMES, p))
    field = FieldSpec('prime', p)
    return StableModuleCategory(
        field, [('S2', simple_s2(field))], lambda name: envelope_s2(field),
        decompose, ACTIONS)


def a2_costable(p, rank_bound=2, seed=0):
    """Get the injectively stable category of the quiver 1 -> 2 with its triangles.

    The shift kills S2, so the shift is not faithful and the triangulation is
    only right triangulated at best. The generators are the trivial triangle
    on S2 and the standard triangles on End(S2).

    Args:
        p: The prime field order (2, 3 or 5).
        rank_bound: Integer for the rank bound of the triangulation. (Default: 2).
        seed: Integer seed of the triangulation searches. (Default: 0).

    Returns:
        A tuple with the CategoryPresentation and its Triangulation.
    """
    stable = a2_category(p)
    category = stable.presentation
    category.provenance = {'kind': 'a2_costable', 'p': p}
    generators = [trivial_triangle(category, Obj(('S2',)))] + stable.basic_triangles()
    triangulation = Triangulation(category, generators, rank_bound,
                                  stable.cone_builder(category), seed)
    _logger.info('a2_costable(%d) built with %d generating triangles',
                 p, len(generators))
    return category, triangulation
