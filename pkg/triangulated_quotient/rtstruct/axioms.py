# coding=utf-8
"""Bounded verification of the axioms of a right triangulated category."""
from __future__ import division
import itertools
import logging

import numpy as np

from ..exactla import Subspace, nullspace, rank, search_points
from ..report import CheckResult, Report
from ..addcat.obj import Obj
from ..addcat.mor import Mor
from ..addcat.functor import functor_faithful_on
from ..addcat.presentation import MORPHISM_BUDGET
from .triangle import trivial_triangle, direct_sum_triangle, morphism_system, \
    split_solution, completion_space, derotations, derotate
from .triangulation import ROTATION_DEPTH

_logger = logging.getLogger(__name__)

ALL_LEVELS = ('tr0', 'tr1', 'tr2', 'tr3', 'tr4', 'tr5', 'exactness', 'derotation',
              'iso_completion')
PAIR_BUDGET = 120
ISO_COMPLETION_SAMPLES = 100


def _sample(items, size, seed):
    """Get at most size items chosen deterministically and whether all were kept."""
    items = list(items)
    if len(items) <= size:
        return items, True
    rng = np.random.default_rng(seed)
    chosen = sorted(rng.choice(len(items), size=size, replace=False).tolist())
    return [items[i] for i in chosen], False


def _pairs(count, size, seed):
    """Get index pairs of a count x count grid, sampled when there are too many."""
    if count * count <= size:
        return list(itertools.product(range(count), repeat=2)), True
    rng = np.random.default_rng(seed)
    flat = rng.choice(count * count, size=size, replace=False).tolist()
    return [divmod(int(v), count) for v in sorted(flat)], False


def _log_result(result):
    _logger.info('%s: %s (%d cases, %s)', result.name, result.status,
                 result.checked, 'exhaustive' if result.exhaustive else 'sampled')
    if result.undecided:
        _logger.warning('%s left %d cases undecided', result.name,
                        len(result.undecided))
    return result


def check_tr0(triangulation, budget=MORPHISM_BUDGET, pair_budget=PAIR_BUDGET,
              seed=None):
    """Check that conjugates of distinguished triangles are distinguished."""
    seed = triangulation.seed if seed is None else seed
    cat = triangulation.category
    result = CheckResult('tr0')
    tris, exhaustive = triangulation.triangles(budget, seed)
    tris, complete = _sample(tris, pair_budget, seed)
    result.exhaustive = exhaustive and complete
    for k, tri in enumerate(tris):
        a = cat.random_automorphism(tri.A, seed + 3 * k)
        b = cat.random_automorphism(tri.B, seed + 3 * k + 1)
        c = cat.random_automorphism(tri.C, seed + 3 * k + 2)
        conj = tri.conjugate(a, b, c)
        result.add_decision(triangulation.is_distinguished(conj), '020000', 'TR0',
                            'Triangle', repr(conj),
                            'Conjugate of a distinguished triangle is not '
                            'distinguished.', conj)
    return _log_result(result)


def check_tr1(triangulation):
    """Check the trivial triangles (0, A, A, 0, 1, 0) and split triangles."""
    cat = triangulation.category
    result = CheckResult('tr1')
    objs = cat.objects(triangulation.rank_bound)
    for obj in objs:
        tri = trivial_triangle(cat, obj)
        result.add_decision(triangulation.is_distinguished(tri), '020001', 'TR1',
                            'Triangle', repr(tri), 'Trivial triangle is not '
                            'distinguished.', tri)
    for a_obj, b_obj in itertools.product(objs, repeat=2):
        if a_obj.is_zero or b_obj.is_zero or \
                a_obj.rank + b_obj.rank > triangulation.rank_bound:
            continue
        tri = direct_sum_triangle(cat, a_obj, b_obj)
        result.add_decision(triangulation.is_distinguished(tri), '020001', 'TR1',
                            'Triangle', repr(tri), 'Split triangle is not '
                            'distinguished.', tri)
    return _log_result(result)


def check_tr2(triangulation, budget=MORPHISM_BUDGET, seed=None):
    """Check that every morphism within the rank bound extends to a triangle."""
    seed = triangulation.seed if seed is None else seed
    cat = triangulation.category
    result = CheckResult('tr2')
    objs = cat.objects(triangulation.rank_bound)
    for a_obj, b_obj in itertools.product(objs, repeat=2):
        mors, complete = cat.morphisms(a_obj, b_obj, budget, seed)
        if not complete:
            result.exhaustive = False
        for mor in mors:
            decision = triangulation.extend_morphism(mor)
            result.add_decision(decision, '020002', 'TR2', 'Morphism', repr(mor),
                                'Morphism does not extend to a distinguished '
                                'triangle.', mor)
    return _log_result(result)


def check_tr3(triangulation, budget=MORPHISM_BUDGET, seed=None):
    """Check that rotations of distinguished triangles are distinguished."""
    seed = triangulation.seed if seed is None else seed
    result = CheckResult('tr3')
    tris, exhaustive = triangulation.triangles(budget, seed)
    result.exhaustive = exhaustive
    for tri in tris:
        rot = tri.rotate()
        result.add_decision(triangulation.is_distinguished(rot), '020003', 'TR3',
                            'Triangle', repr(tri), 'Rotation is not distinguished.',
                            tri)
    return _log_result(result)


def check_tr4(triangulation, budget=MORPHISM_BUDGET, pair_budget=PAIR_BUDGET,
              seed=None):
    """Check that every commuting left square completes to a triangle morphism.

    For each pair of triangles the solution space of the full morphism system
    is projected to the (a, b) coordinates and compared with the space of
    commuting squares, so every commuting square is covered at once.
    """
    seed = triangulation.seed if seed is None else seed
    cat = triangulation.category
    field = cat.field
    result = CheckResult('tr4')
    tris, exhaustive = triangulation.triangles(budget, seed)
    pairs, complete = _pairs(len(tris), pair_budget, seed)
    result.exhaustive = exhaustive and complete
    for i, j in pairs:
        t1, t2 = tris[i], tris[j]
        result.count()
        mat, sizes = morphism_system(t1, t2)
        na, nb, nc = sizes
        width = na + nb + nc
        full = nullspace(field, mat) if mat.shape[0] else Subspace.full(field, width)
        projected = full.image(field.identity(width)[:na + nb])
        rows = cat.hom_dim(t1.A, t2.B)
        square = field.hstack([-cat.post_matrix(t2.f, t1.A),
                               cat.pre_matrix(t1.f, t2.B)], rows)
        commuting = nullspace(field, square) if rows \
            else Subspace.full(field, na + nb)
        if projected.dim == commuting.dim:
            continue
        for vec in commuting.basis:
            if not projected.contains(vec):
                a, b, _ = split_solution(t1, t2, field.hstack(
                    [vec.reshape(1, -1), field.zeros((1, nc))], 1).reshape(-1), sizes)
                result.add_violation(
                    '020004', 'TR4', 'TrianglePair', '{} => {}'.format(t1, t2),
                    'A commuting square does not complete to a morphism of '
                    'triangles.', {'t1': t1, 't2': t2, 'a': a, 'b': b})
                break
    return _log_result(result)


def _composable_pairs(cat, bound, budget, pair_budget, seed):
    objs = cat.objects(bound)
    counts = {}
    for x, y in itertools.product(objs, repeat=2):
        dim = cat.hom_dim(x, y)
        counts[(x, y)] = cat.field.order ** dim \
            if cat.field.is_finite and cat.field.order ** dim <= budget else budget
    total = sum(counts[(x, y)] * counts[(y, u)]
                for x, y, u in itertools.product(objs, repeat=3))
    if total <= pair_budget:
        pairs = []
        for x, y, u in itertools.product(objs, repeat=3):
            first, _ = cat.morphisms(x, y, budget, seed)
            second, _ = cat.morphisms(y, u, budget, seed)
            pairs.extend(itertools.product(first, second))
        exhaustive = all(cat.morphisms(x, y, budget, seed)[1] for x, y in counts)
        return pairs, exhaustive
    rng = np.random.default_rng(seed)
    pairs = []
    for _ in range(pair_budget):
        x, y, u = (objs[int(k)] for k in rng.integers(0, len(objs), size=3))
        pairs.append((cat.random_mor(x, y, rng), cat.random_mor(y, u, rng)))
    return pairs, False


def check_tr5(triangulation, budget=MORPHISM_BUDGET, pair_budget=PAIR_BUDGET,
              seed=None):
    """Check the octahedral axiom on composable pairs within the rank bound."""
    seed = triangulation.seed if seed is None else seed
    cat = triangulation.category
    result = CheckResult('tr5')
    pairs, exhaustive = _composable_pairs(
        cat, triangulation.rank_bound, budget, pair_budget, seed)
    result.exhaustive = exhaustive
    if not pairs:
        result.note('vacuous: no composable pairs')
    for a, d in pairs:
        extended = [triangulation.extend_morphism(m)
                    for m in (a, d, cat.compose(d, a))]
        missing = [e for e in extended if not e.is_yes]
        if missing:
            result.count()
            result.add_undecided('020005', 'TR5', 'Pair', '{} ; {}'.format(a, d),
                                 'A composable pair lacks distinguished triangles.',
                                 {'a': a, 'd': d})
            continue
        t_xy, t_yu, t_xu = (e.witness for e in extended)
        decision = triangulation.octahedron(t_xy, t_yu, t_xu, seed)
        result.add_decision(decision, '020005', 'TR5', 'Pair',
                            '{} ; {}'.format(a, d),
                            'Octahedral completion is missing.',
                            {'a': a, 'd': d})
    return _log_result(result)


def _exact_at_middle(cat, first, second, test_obj):
    """Check exactness of Hom(A, E) <- Hom(B, E) <- Hom(C, E) for A -f-> B -g-> C."""
    field = cat.field
    pre_f = cat.pre_matrix(first, test_obj)
    pre_g = cat.pre_matrix(second, test_obj)
    if not field.is_zero(field.matmul(pre_f, pre_g)):
        return False
    middle = cat.hom_dim(first.target, test_obj)
    return rank(field, pre_g) == middle - rank(field, pre_f)


def check_exactness(triangulation, budget=MORPHISM_BUDGET, seed=None):
    """Check the long exact Hom sequence of distinguished triangles.

    Exactness of Hom(-, E) is tested for every indecomposable E at the middle
    node of the triangle and of each of its first ROTATION_DEPTH rotations, the
    same depth the closure of a triangulation is rotated to. The composites
    g o f and h o g are also required to vanish.
    """
    seed = triangulation.seed if seed is None else seed
    cat = triangulation.category
    result = CheckResult('exactness')
    tris, exhaustive = triangulation.triangles(budget, seed)
    result.exhaustive = exhaustive
    tests = [Obj((e,)) for e in cat.indecomposables]
    for tri in tris:
        result.count()
        if not tri.composites_vanish():
            result.add_violation('020006', 'Exactness', 'Triangle', repr(tri),
                                 'Consecutive morphisms do not compose to zero.', tri)
            continue
        current = tri
        for depth in range(ROTATION_DEPTH + 1):
            for test_obj in tests:
                if not _exact_at_middle(cat, current.f, current.g, test_obj):
                    result.add_violation(
                        '020006', 'Exactness', 'Triangle', repr(tri),
                        'Hom(-, {}) is not exact at rotation depth {}.'.format(
                            test_obj, depth), {'triangle': tri, 'test': test_obj,
                                               'depth': depth})
            if depth < ROTATION_DEPTH:
                current = current.rotate()
    return _log_result(result)


def check_derotation(triangulation, budget=MORPHISM_BUDGET, seed=None):
    """Check that de-rotations of distinguished triangles are distinguished.

    For every distinguished (B, C, D, g, h, k) and every A within the rank
    bound with TA isomorphic to D, every f: A -> B with -Tf = k o P (for the
    permutation isomorphism P: TA -> D) must give a distinguished triangle
    (A, B, C, f, g, P^-1 h). If the check passes while the shift functor is
    not faithful, the inconsistency is reported as a violation.
    """
    seed = triangulation.seed if seed is None else seed
    cat = triangulation.category
    field = cat.field
    shift = cat.shift
    result = CheckResult('derotation')
    tris, exhaustive = triangulation.triangles(budget, seed)
    result.exhaustive = exhaustive
    objs = cat.objects(triangulation.rank_bound)
    for tri in tris:
        for a_obj in objs:
            if shift.apply_obj(a_obj) != tri.C:
                continue
            data = derotations(tri, a_obj)
            if data is None:
                continue
            particular, space, _ = data
            points, complete = search_points(field, particular, space, seed,
                                             limit=budget, samples=budget)
            if not complete:
                result.exhaustive = False
            seen = set()
            for point in points:
                f = Mor(cat, a_obj, tri.A, point)
                if f.key() in seen:
                    continue
                seen.add(f.key())
                candidate = derotate(tri, a_obj, f)
                result.add_decision(
                    triangulation.is_distinguished(candidate), '020007',
                    'Derotation', 'Triangle', repr(candidate),
                    'De-rotated triangle is not distinguished.', candidate)
    pairs = list(itertools.product(objs, repeat=2))
    failures = []
    faithful = functor_faithful_on(shift, pairs, cat, failures=failures)
    if not faithful:
        result.note('the shift functor is not faithful on {} of {} object '
                    'pairs'.format(len(failures), len(pairs)))
        if result.status == 'Pass':
            x, y = failures[0]
            result.add_violation(
                '020009', 'Faithfulness', 'Pair', '{}|{}'.format(x, y),
                'De-rotation passes although the shift functor is not faithful.',
                {'source': x, 'target': y})
    return _log_result(result)


def check_iso_completion(triangulation, budget=MORPHISM_BUDGET,
                         samples=ISO_COMPLETION_SAMPLES, seed=None):
    """Check that completing a pair of isomorphisms always gives an isomorphism.

    Each sample takes a distinguished t1, automorphisms a of A and b of B and
    the distinguished triangle t2 on b f a^-1. A completion c of (a, b) must
    exist and every sampled completion must be invertible.
    """
    seed = triangulation.seed if seed is None else seed
    cat = triangulation.category
    field = cat.field
    result = CheckResult('iso_completion')
    tris, _ = triangulation.triangles(budget, seed)
    result.exhaustive = False
    if not tris:
        result.note('vacuous: no distinguished triangles')
        return _log_result(result)
    rng = np.random.default_rng(seed)
    for k in range(samples):
        t1 = tris[int(rng.integers(0, len(tris)))]
        a = cat.random_automorphism(t1.A, seed + 2 * k)
        b = cat.random_automorphism(t1.B, seed + 2 * k + 1)
        _, a_inv = cat.is_isomorphism(a)
        f2 = cat.compose(cat.compose(b, t1.f), a_inv)
        extended = triangulation.extend_morphism(f2)
        result.count()
        if not extended.is_yes:
            result.add_undecided('020008', 'IsoCompletion', 'Triangle', repr(t1),
                                 'No distinguished triangle on b f a^-1.',
                                 {'t1': t1, 'a': a, 'b': b})
            continue
        t2 = extended.witness
        solution = completion_space(t1, t2, a, b)
        if solution is None:
            result.add_violation('020008', 'IsoCompletion', 'Triangle', repr(t1),
                                 'Isomorphisms a and b have no completion.',
                                 {'t1': t1, 't2': t2, 'a': a, 'b': b})
            continue
        particular, space = solution
        choices = [particular]
        if space.dim:
            choices.append(particular + space.combine(field.random(space.dim, rng)))
        for point in choices:
            c = Mor(cat, t1.C, t2.C, point)
            if not cat.is_isomorphism(c)[0]:
                result.add_violation(
                    '020008', 'IsoCompletion', 'Triangle', repr(t1),
                    'Completion of two isomorphisms is not an isomorphism.',
                    {'t1': t1, 't2': t2, 'a': a, 'b': b, 'c': c})
                break
    return _log_result(result)


def check_axioms(triangulation, levels=ALL_LEVELS, budget=MORPHISM_BUDGET,
                 pair_budget=PAIR_BUDGET, iso_completion_samples=ISO_COMPLETION_SAMPLES,
                 seed=None, title='Axiom check'):
    """Run a selection of bounded axiom checks on a triangulation.

    Args:
        triangulation: The Triangulation to check.
        levels: A list of check names from tr0, tr1, tr2, tr3, tr4, tr5,
            exactness, derotation and iso_completion. (Default: all of them).
        budget: The largest hom-space enumerated completely. (Default: 16).
        pair_budget: The largest number of triangle pairs or composable pairs
            checked by tr0, tr4 and tr5. (Default: 120).
        iso_completion_samples: Number of sampled morphisms of triangles. (Default: 100).
        seed: Optional integer seed. If None, the seed of the triangulation is used.
        title: Text for the title of the report.

    Returns:
        A Report with one CheckResult per level.
    """
    seed = triangulation.seed if seed is None else seed
    for level in levels:
        if level not in ALL_LEVELS:
            raise ValueError('"{}" is not a recognized axiom level. Choose from '
                             '{}.'.format(level, ALL_LEVELS))
    report = Report(title, {
        'rank_bound': triangulation.rank_bound, 'levels': ','.join(levels),
        'seed': seed, 'morphism_budget': budget, 'pair_budget': pair_budget})
    runners = {
        'tr0': lambda: check_tr0(triangulation, budget, pair_budget, seed),
        'tr1': lambda: check_tr1(triangulation),
        'tr2': lambda: check_tr2(triangulation, budget, seed),
        'tr3': lambda: check_tr3(triangulation, budget, seed),
        'tr4': lambda: check_tr4(triangulation, budget, pair_budget, seed),
        'tr5': lambda: check_tr5(triangulation, budget, pair_budget, seed),
        'exactness': lambda: check_exactness(triangulation, budget, seed),
        'derotation': lambda: check_derotation(triangulation, budget, seed),
        'iso_completion': lambda: check_iso_completion(
            triangulation, budget, iso_completion_samples, seed)
    }
    for level in ALL_LEVELS:
        if level in levels:
            report.add_check(runners[level]())
    return report
