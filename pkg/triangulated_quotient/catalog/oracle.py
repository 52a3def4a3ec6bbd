# coding=utf-8
"""Brute-force referee for the catalog fixtures.

Nothing in this module uses the linear algebra of the rest of the library.
Homomorphism spaces are found by enumerating vectors and spans are closed by
enumeration, so the numbers it reports are an independent check of the
presentations built by the catalog generators.
"""
from __future__ import division
import itertools
import logging
import math

import numpy as np

from ..typing import int_in_range, prime_modulus

_logger = logging.getLogger(__name__)
CATALOG_PRIMES = (2, 3, 5)


def _check_nakayama(n, p, i=None, j=None):
    n = int_in_range(n, 2, 6, 'n')
    p = prime_modulus(p, 'p')
    assert p in CATALOG_PRIMES, 'Catalog prime must be one of {}. Got {}.'.format(
        CATALOG_PRIMES, p)
    for value, label in ((i, 'i'), (j, 'j')):
        if value is not None:
            int_in_range(value, 1, n, label)
    return n, p


def _multiply(v, w, p, length):
    """Get v(x) * w in k[x]/(x^length) for coefficient vectors v and w."""
    out = np.zeros(length, dtype=np.int64)
    for s, coeff in enumerate(v):
        if coeff == 0:
            continue
        for t in range(length - s):
            out[s + t] = (out[s + t] + coeff * w[t]) % p
    return out


def _vectors(p, length):
    for point in itertools.product(range(p), repeat=length):
        yield np.array(point, dtype=np.int64)


def _span(generators, p, length):
    """Get the set of all vectors in the span of generators as tuples."""
    points = {tuple([0] * length)}
    for gen in generators:
        gen = np.asarray(gen, dtype=np.int64) % p
        if tuple(gen) in points:
            continue
        new = set()
        for point in points:
            base = np.array(point, dtype=np.int64)
            for c in range(p):
                new.add(tuple(((base + c * gen) % p).tolist()))
        points = new
    return points


def module_homs(n, p, i, j):
    """Enumerate all homomorphisms M_i -> M_j of k[x]/(x^n)-modules.

    A homomorphism is determined by the image v of the generator 1 of M_i,
    which must satisfy x^i v = 0. M_k = k[x]/(x^k) uses the basis
    1, x, ..., x^(k-1).

    Returns:
        A list of generator images as tuples of length j.
    """
    n, p = _check_nakayama(n, p, i, j)
    return [tuple(v.tolist()) for v in _vectors(p, j)
            if not np.any(_shift_down(v, i, j))]


def _shift_down(v, i, j):
    """Get x^i v for v in M_j."""
    out = np.zeros(j, dtype=np.int64)
    if i < j:
        out[i:] = v[:j - i]
    return out


def projective_factoring(n, p, i, j):
    """Get the set of homomorphisms M_i -> M_j that factor through the free module.

    A map M_i -> M_n is 1 -> u with x^i u = 0 and a map M_n -> M_j is 1 -> w,
    so the composites send 1 to u(x) w.
    """
    n, p = _check_nakayama(n, p, i, j)
    firsts = module_homs(n, p, i, n)
    composites = set()
    for u in firsts:
        for w in _vectors(p, j):
            composites.add(tuple(_multiply(u, w, p, j).tolist()))
    # closed under addition
    return _span(sorted(composites), p, j)


def oracle_stable_hom(n, p, i, j):
    """Get the dimension of the stable Hom(M_i, M_j) over k[x]/(x^n) by enumeration.

    Args:
        n: Integer for the nilpotency degree of x (2 to 6).
        p: The prime field order (2, 3 or 5).
        i: Integer for the source module M_i (1 to n).
        j: Integer for the target module M_j (1 to n).

    Returns:
        A tuple with the stable dimension and a list of generator images
        (each a tuple of length j) of homomorphisms whose classes form a basis.
    """
    n, p = _check_nakayama(n, p, i, j)
    homs = module_homs(n, p, i, j)
    ideal = projective_factoring(n, p, i, j)
    hom_dim = int(round(math.log(len(homs), p)))
    ideal_dim = int(round(math.log(len(ideal), p)))
    reps, current = [], ideal
    for vec in homs:
        if vec in current:
            continue
        reps.append(vec)
        current = _span(list(current) + [vec], p, j)
        if len(reps) == hom_dim - ideal_dim:
            break
    _logger.debug('oracle: stable Hom(M%d, M%d) over n=%d p=%d has dim %d',
                  i, j, n, p, hom_dim - ideal_dim)
    return hom_dim - ideal_dim, reps


def oracle_table(n, p):
    """Get the table of stable hom dimensions between M_1 ... M_(n-1)."""
    size = n - 1
    return [[oracle_stable_hom(n, p, i, j)[0] for j in range(1, size + 1)]
            for i in range(1, size + 1)]


def _cyclic_span(v, p, length):
    """Get the submodule of M_length generated by v as a set of tuples."""
    powers = [_shift_down(v, t, length) for t in range(length)]
    return _span(powers, p, length)


def oracle_syzygy(n, p, i):
    """Get k with Omega(M_i) = M_k over k[x]/(x^n), found by enumeration.

    The projective cover is the first enumerated homomorphism M_n -> M_i that
    is onto. Its kernel is enumerated over F_p, checked to be cyclic and
    measured.

    Args:
        n: Integer for the nilpotency degree of x (2 to 6).
        p: The prime field order (2, 3 or 5).
        i: Integer for the module M_i (1 to n - 1).

    Returns:
        An integer k between 1 and n - 1.
    """
    n, p = _check_nakayama(n, p)
    i = int_in_range(i, 1, n - 1, 'i')
    points = list(_vectors(p, n))
    everything = {tuple(v.tolist()) for v in _vectors(p, i)}
    cover = None
    for u in module_homs(n, p, n, i):
        u = np.array(u, dtype=np.int64)
        image = {tuple(_multiply(v, u, p, i).tolist()) for v in points}
        if image == everything:
            cover = u
            break
    assert cover is not None, 'No homomorphism M{} -> M{} is onto.'.format(n, i)
    kernel = {tuple(v.tolist()) for v in points
              if not np.any(_multiply(v, cover, p, i))}
    generated = any(_cyclic_span(np.array(v, dtype=np.int64), p, n) == kernel
                    for v in sorted(kernel))
    assert generated, 'Kernel of the cover of M{} is not cyclic.'.format(i)
    k = int(round(math.log(len(kernel), p)))
    _logger.debug('oracle: Omega(M%d) over n=%d p=%d is M%d', i, n, p, k)
    return k


def _quiver_homs(source, target, p):
    """Enumerate homomorphisms between representations (d1, d2, a) of 1 -> 2."""
    (s1, s2, a_s), (t1, t2, a_t) = source, target
    homs = []
    for entries in itertools.product(range(p), repeat=s1 * t1 + s2 * t2):
        phi1 = np.array(entries[:s1 * t1], dtype=np.int64).reshape(t1, s1)
        phi2 = np.array(entries[s1 * t1:], dtype=np.int64).reshape(t2, s2)
        if not np.any((phi2 @ a_s - a_t @ phi1) % p):
            homs.append((phi1, phi2))
    return homs


def oracle_costable_end(p):
    """Get the stable End(S_2) of the quiver 1 -> 2 modulo maps through injectives.

    Representations are (d1, d2, a). The injectives are S_1 = (1, 0, 0) and
    P_1 = (1, 1, [1]) and every map S_2 -> I -> S_2 is enumerated.

    Returns:
        A tuple with dim End(S_2) and the number of nonzero composites through
        an injective.
    """
    p = prime_modulus(p, 'p')
    s2 = (0, 1, np.zeros((1, 0), dtype=np.int64))
    injectives = [(1, 0, np.zeros((0, 1), dtype=np.int64)),
                  (1, 1, np.ones((1, 1), dtype=np.int64))]
    ends = _quiver_homs(s2, s2, p)
    nonzero = 0
    for inj in injectives:
        for _, into in _quiver_homs(s2, inj, p):
            for _, out in _quiver_homs(inj, s2, p):
                if np.any((out @ into) % p):
                    nonzero += 1
    return int(round(math.log(len(ends), p))), nonzero
