# coding=utf-8
"""Stable categories of the truncated polynomial algebras k[x]/(x^n).

The algebra is self-injective, so its injective modules are its projective
modules and the stable category is triangulated. The indecomposable modules are
M_i = k[x]/(x^i) for 1 <= i <= n and M_n is the free module.
"""
from __future__ import division
import logging

from ..typing import int_in_range, prime_modulus
from ..exactla import FieldSpec, Subspace, nullspace
from ..rtstruct.triangulation import Triangulation
from .module import ModuleRep, kernel
from .stable import StableModuleCategory

_logger = logging.getLogger(__name__)
NAKAYAMA_PRIMES = (2, 3, 5)


def _check(n, p):
    n = int_in_range(n, 2, 6, 'n')
    p = prime_modulus(p, 'p')
    if p not in NAKAYAMA_PRIMES:
        raise ValueError('Nakayama fixtures are built over F_p for p in {}. '
                         'Got {}.'.format(NAKAYAMA_PRIMES, p))
    return n, p


def module_name(i):
    return 'M{}'.format(i)


def nakayama_module(field, i):
    """Get M_i = k[x]/(x^i) with basis 1, x, ..., x^(i-1)."""
    x = field.zeros((i, i))
    for t in range(i - 1):
        x[t + 1, t] = 1
    return ModuleRep(field, i, {'x': x}, module_name(i))


def envelope(field, n, i):
    """Get the injective envelope M_i -> M_n, which sends x^t to x^(t + n - i)."""
    iota = field.zeros((n, i))
    for t in range(i):
        iota[t + n - i, t] = 1
    return nakayama_module(field, n), iota


def _power(field, mat, k):
    out = field.identity(mat.shape[0])
    for _ in range(k):
        out = field.matmul(mat, out)
    return out


def decompose(module, n):
    """Split a k[x]/(x^n)-module into cyclic summands by Jordan chains of x.

    Chains are taken from the longest down. A vector v in the kernel of x^k
    starts a new chain of length k when it is independent of the chains found
    so far modulo the kernel of x^(k-1).

    Returns:
        A list of (name, inclusion, projection) tuples. The name is None for
        the free summands M_n.
    """
    field = module.field
    x = module.act('x')
    dim = module.dim
    kernels = [Subspace.zero(field, dim)] + \
        [nullspace(field, _power(field, x, k)) for k in range(1, n + 1)]
    found, chains = Subspace.zero(field, dim), []
    for k in range(n, 0, -1):
        for v in kernels[k].basis:
            if (found + kernels[k - 1]).contains(v):
                continue
            chain = [v]
            for _ in range(k - 1):
                chain.append(field.matmul(x, chain[-1].reshape(-1, 1)).reshape(-1))
            found = found + Subspace(field, dim, chain)
            chains.append((k, chain))
    columns = field.stack([vec for _, chain in chains for vec in chain], dim).T
    inverse = field.inverse(columns)
    assert inverse is not None, 'Jordan chains do not span the module.'
    parts, start = [], 0
    for k, chain in chains:
        name = module_name(k) if k < n else None
        parts.append((name, columns[:, start:start + k], inverse[start:start + k]))
        start += k
    return parts


def nakayama_category(n, p):
    """Get the StableModuleCategory of k[x]/(x^n) over F_p.

    Args:
        n: Integer for the nilpotency degree of x (2 to 6).
        p: The prime field order (2, 3 or 5).
    """
    n, p = _check(n, p)
    field = FieldSpec('prime', p)
    reps = [(module_name(i), nakayama_module(field, i)) for i in range(1, n)]
    index = {module_name(i): i for i in range(1, n)}
    return StableModuleCategory(
        field, reps,
        lambda name: envelope(field, n, index[name]),
        lambda module: decompose(module, n),
        ['x'])


def nakayama_stable(n, p, rank_bound=2, seed=0):
    """Get the stable category of k[x]/(x^n) over F_p with its standard triangles.

    Args:
        n: Integer for the nilpotency degree of x (2 to 6).
        p: The prime field order (2, 3 or 5).
        rank_bound: Integer for the rank bound of the triangulation. (Default: 2).
        seed: Integer seed of the triangulation searches. (Default: 0).

    Returns:
        A tuple with the CategoryPresentation and its Triangulation. The
        triangulation is generated by the standard triangles on basis
        morphisms between indecomposables and uses the standard triangle
        as its cone builder.

    Usage:

    .. code-block:: python

        category, triangulation = nakayama_stable(4, 2)
        category.hom_dim_names('M2', 'M2')  # 2
        category.shift.image('M1')  # Obj: M3
    """
    stable = nakayama_category(n, p)
    category = stable.presentation
    category.provenance = {'kind': 'nakayama', 'n': n, 'p': p}
    triangulation = Triangulation(category, stable.basic_triangles(), rank_bound,
                                  stable.cone_builder(category), seed)
    _logger.info('nakayama_stable(%d, %d) built with %d generating triangles',
                 n, p, len(triangulation.generators))
    return category, triangulation


def syzygy(n, p, i):
    """Get k with Omega(M_i) = M_k, computed as the kernel of the projective cover.

    The projective cover M_n -> M_i sends 1 to 1.

    Returns:
        An integer (n itself never occurs for 1 <= i < n).
    """
    n, p = _check(n, p)
    i = int_in_range(i, 1, n - 1, 'i')
    field = FieldSpec('prime', p)
    free = nakayama_module(field, n)
    cover = field.zeros((i, n))
    for t in range(i):
        cover[t, t] = 1
    kern, _ = kernel(cover, free)
    parts = decompose(kern, n)
    assert len(parts) == 1, 'Syzygy of M{} is not indecomposable.'.format(i)
    return parts[0][1].shape[1]


def tau_orbit(n, p):
    """Get tau = Omega^2 on the indecomposables and whether it fixes all of them.

    Returns:
        A tuple with a dictionary from names to the names of their images and
        a boolean that is True when every indecomposable is fixed.
    """
    n, p = _check(n, p)
    images = {}
    for i in range(1, n):
        images[module_name(i)] = module_name(syzygy(n, p, syzygy(n, p, i)))
    return images, all(k == v for k, v in images.items())
