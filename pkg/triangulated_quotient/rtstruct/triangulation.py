# coding=utf-8
"""Classes of distinguished triangles given by generators or by a cone construction."""
from __future__ import division
import itertools
import logging

import numpy as np

from .._base import _DataBase
from ..typing import int_in_range
from ..decision import Decision
from ..exactla import ENUMERATION_LIMIT, SAMPLE_SIZE, Subspace, solve, nullspace, \
    search_points
from ..addcat.mor import Mor
from ..addcat.functor import apply_functor
from ..addcat.presentation import MORPHISM_BUDGET
from .triangle import Triangle, sextuple_isomorphic

_logger = logging.getLogger(__name__)
ROTATION_DEPTH = 3


class Triangulation(_DataBase):
    """A class of distinguished triangles in a CategoryPresentation.

    A triangle is distinguished when it is isomorphic to an element of the
    closure of the generators. The closure holds the generators, their
    rotations and, when no cone builder is given, direct sums of closure
    elements within the rank bound. A cone builder is a function that takes a
    Mor f and returns a distinguished Triangle whose first morphism is f. When
    it is present, t is distinguished exactly when it is isomorphic to the
    built triangle on t.f through an isomorphism of the form (1, 1, c).

    Args:
        category: The CategoryPresentation of the triangles.
        generators: A list of Triangle objects.
        rank_bound: Integer for the largest number of summands of objects that
            are quantified over by exhaustive checks. (Default: 2).
        cone_builder: An optional function from a Mor to a Triangle. (Default: None).
        seed: Integer seed for sampled searches. (Default: 0).

    Properties:
        * category
        * generators
        * rank_bound
        * cone_builder
        * seed
        * closure
    """
    __slots__ = ('_category', '_generators', '_rank_bound', '_cone_builder', '_seed',
                 '_closure', '_by_first', '_built', '_triangles')

    def __init__(self, category, generators, rank_bound=2, cone_builder=None, seed=0):
        _DataBase.__init__(self)
        self._category = category
        self._generators = tuple(generators)
        for tri in self._generators:
            assert isinstance(tri, Triangle), \
                'Expected Triangle for generator. Got {}.'.format(type(tri))
            assert tri.category is category, \
                'Generator {} belongs to another category.'.format(tri)
        self._rank_bound = int_in_range(rank_bound, 1, None, 'rank_bound')
        self._cone_builder = cone_builder
        self._seed = int(seed)
        self._closure = None
        self._by_first = None
        self._built = {}
        self._triangles = {}

    @classmethod
    def from_dict(cls, category, data, rank_bound=2, cone_builder=None, seed=0):
        """Create a Triangulation from a list of triangle dictionaries."""
        return cls(category, [Triangle.from_dict(category, t) for t in data],
                   rank_bound, cone_builder, seed)

    @property
    def category(self):
        return self._category

    @property
    def generators(self):
        return self._generators

    @property
    def rank_bound(self):
        return self._rank_bound

    @property
    def cone_builder(self):
        return self._cone_builder

    @property
    def seed(self):
        return self._seed

    @property
    def closure(self):
        """Get a tuple of the generators, their rotations and bounded direct sums."""
        if self._closure is None:
            self._build_closure()
        return self._closure

    def _build_closure(self):
        seen, closure = set(), []

        def _add(tri):
            if tri.key() not in seen:
                seen.add(tri.key())
                closure.append(tri)

        for tri in self._generators:
            current = tri
            _add(current)
            for _ in range(ROTATION_DEPTH):
                current = current.rotate()
                _add(current)
        if self._cone_builder is None and self._rank_bound > 1:
            basic = [t for t in closure if t.A.rank + t.B.rank > 0 and
                     t.A.rank <= self._rank_bound and t.B.rank <= self._rank_bound]
            for size in range(2, self._rank_bound + 1):
                for combo in itertools.combinations_with_replacement(basic, size):
                    if sum(t.A.rank for t in combo) > self._rank_bound or \
                            sum(t.B.rank for t in combo) > self._rank_bound:
                        continue
                    total = combo[0]
                    for tri in combo[1:]:
                        total = total.direct_sum(tri)
                    _add(total)
        self._closure = tuple(closure)
        self._by_first = {}
        for tri in closure:
            self._by_first.setdefault(tri.f.key(), tri)
        _logger.debug('triangulation closure holds %d triangles', len(closure))

    def triangle_on(self, f):
        """Get a distinguished triangle whose first morphism is exactly f.

        Returns:
            A Triangle or None if neither the closure nor the cone builder gives one.
        """
        if self._by_first is None:
            self._build_closure()
        found = self._by_first.get(f.key())
        if found is not None:
            return found
        if self._cone_builder is None:
            return None
        key = f.key()
        if key not in self._built:
            self._built[key] = self._cone_builder(f)
        return self._built[key]

    def is_distinguished(self, triangle, seed=None, limit=ENUMERATION_LIMIT,
                         samples=SAMPLE_SIZE):
        """Decide whether a triangle is distinguished.

        Args:
            triangle: The Triangle to test.
            seed: Optional integer seed for the search. If None, the seed of
                the triangulation is used. (Default: None).
            limit: The largest solution space that is enumerated completely.
            samples: The number of random points for larger spaces.

        Returns:
            A Decision. Yes carries the isomorphism to a closure element or
            built triangle.
        """
        seed = self._seed if seed is None else seed
        base = self.triangle_on(triangle.f)
        if base is not None:
            decision = _same_first_isomorphic(base, triangle, seed, limit, samples)
            if decision.is_yes or self._cone_builder is not None:
                return decision
        undecided = False
        for cand in self.closure:
            if cand.A != triangle.A or cand.B != triangle.B or cand.C != triangle.C:
                continue
            decision = sextuple_isomorphic(cand, triangle, seed, limit, samples)
            if decision.is_yes:
                return decision
            undecided = undecided or decision.is_undecided
        if undecided:
            return Decision.undecided('isomorphism search exceeded the budget')
        return Decision.no('not isomorphic to any triangle of the closure')

    def extend_morphism(self, f, seed=None, limit=ENUMERATION_LIMIT,
                        samples=SAMPLE_SIZE):
        """Find a distinguished triangle whose first morphism is f.

        Returns:
            A Decision. Yes carries the Triangle.
        """
        seed = self._seed if seed is None else seed
        found = self.triangle_on(f)
        if found is not None:
            return Decision.yes(found)
        cat = self._category
        field = cat.field
        undecided = False
        for cand in self.closure:
            if cand.A != f.source or cand.B != f.target:
                continue
            na = cat.hom_dim(f.source, cand.A)
            nb = cat.hom_dim(f.target, cand.B)
            rows = cat.hom_dim(f.source, cand.B)
            mat = field.hstack([-cat.post_matrix(cand.f, f.source),
                                cat.pre_matrix(f, cand.B)], rows)
            space = nullspace(field, mat) if rows else Subspace.full(field, na + nb)
            points, exhaustive = search_points(
                field, field.zeros(na + nb), space, seed, limit, samples)
            for point in points:
                a = Mor(cat, f.source, cand.A, point[:na])
                b = Mor(cat, f.target, cand.B, point[na:])
                ok_a, a_inv = cat.is_isomorphism(a)
                if not ok_a or not cat.is_isomorphism(b)[0]:
                    continue
                t_ainv = apply_functor(cat.shift, a_inv)
                return Decision.yes(Triangle(f, cat.compose(cand.g, b),
                                             cat.compose(t_ainv, cand.h)))
            undecided = undecided or not exhaustive
        if undecided:
            return Decision.undecided('isomorphism search exceeded the budget',
                                      {'f': f})
        return Decision.no('no distinguished triangle extends the morphism', {'f': f})

    def triangles(self, budget=MORPHISM_BUDGET, seed=None):
        """Get distinguished triangles representing every class within the rank bound.

        Without a cone builder these are the closure elements whose A and B
        are within the rank bound. With a cone builder, they are the built
        triangles on the enumerated (or sampled) morphisms between objects
        within the rank bound.

        Returns:
            A tuple with a list of Triangle and a boolean for whether the list is
            exhaustive within the rank bound.
        """
        seed = self._seed if seed is None else seed
        key = (budget, seed)
        if key in self._triangles:
            return self._triangles[key]
        bound = self._rank_bound
        if self._cone_builder is None:
            result = ([t for t in self.closure
                       if t.A.rank <= bound and t.B.rank <= bound], True)
        else:
            tris, exhaustive, seen = [], True, set()
            objs = self._category.objects(bound)
            for a_obj in objs:
                for b_obj in objs:
                    mors, complete = self._category.morphisms(
                        a_obj, b_obj, budget, seed)
                    exhaustive = exhaustive and complete
                    for mor in mors:
                        tri = self.triangle_on(mor)
                        if tri.key() not in seen:
                            seen.add(tri.key())
                            tris.append(tri)
            result = (tris, exhaustive)
        self._triangles[key] = result
        return result

    def octahedron(self, t_xy, t_yu, t_xu, seed=None, limit=ENUMERATION_LIMIT,
                   samples=SAMPLE_SIZE):
        """Complete the octahedral diagram of three triangles.

        Args:
            t_xy: A Triangle (X, Y, Z, a, b, c).
            t_yu: A Triangle (Y, U, V, d, e, f).
            t_xu: A Triangle (X, U, W, d o a, g, h).

        Returns:
            A Decision. Yes carries l: Z -> W and i: W -> V with l b = g d,
            h l = c, i g = e, f i = T(a) h, such that (Z, W, V, l, i, T(b) f)
            is distinguished.
        """
        seed = self._seed if seed is None else seed
        cat = self._category
        field = cat.field
        if cat.compose(t_yu.f, t_xy.f) != t_xu.f:
            raise ValueError('The first morphism of the third triangle must be the '
                             'composite of the first morphisms of the other two.')
        z_obj, w_obj, v_obj = t_xy.C, t_xu.C, t_yu.C
        t_a = apply_functor(cat.shift, t_xy.f)
        l_sys = solve(field, field.vstack(
            [cat.pre_matrix(t_xy.g, w_obj), cat.post_matrix(t_xu.h, z_obj)],
            cat.hom_dim(z_obj, w_obj)), _concat(field, [
                cat.compose(t_xu.g, t_yu.f).coords, t_xy.h.coords]))
        i_sys = solve(field, field.vstack(
            [cat.pre_matrix(t_xu.g, v_obj), cat.post_matrix(t_yu.h, w_obj)],
            cat.hom_dim(w_obj, v_obj)), _concat(field, [
                t_yu.g.coords, cat.compose(t_a, t_xu.h).coords]))
        if l_sys is None or i_sys is None:
            return Decision.no('the commuting conditions have no solution')
        nl = l_sys[1].ambient_dim
        ni = i_sys[1].ambient_dim
        particular = _concat(field, [l_sys[0], i_sys[0]])
        basis = field.vstack(
            [field.hstack([l_sys[1].basis, field.zeros((l_sys[1].dim, ni))],
                          l_sys[1].dim),
             field.hstack([field.zeros((i_sys[1].dim, nl)), i_sys[1].basis],
                          i_sys[1].dim)], nl + ni)
        space = Subspace(field, nl + ni, basis)
        t_b_f = cat.compose(apply_functor(cat.shift, t_xy.g), t_yu.h)
        points, exhaustive = search_points(field, particular, space, seed, limit,
                                           samples)
        undecided = not exhaustive
        for point in points:
            l_mor = Mor(cat, z_obj, w_obj, point[:nl])
            i_mor = Mor(cat, w_obj, v_obj, point[nl:])
            column = Triangle(l_mor, i_mor, t_b_f)
            decision = self.is_distinguished(column, seed, limit, samples)
            if decision.is_yes:
                return Decision.yes({'l': l_mor, 'i': i_mor})
            undecided = undecided or decision.is_undecided
        if undecided:
            return Decision.undecided('octahedral search exceeded the budget')
        return Decision.no('no completion gives a distinguished third column')

    def to_dict(self):
        """Get the generators as a list of triangle dictionaries."""
        return [t.to_dict() for t in self._generators]

    def __copy__(self):
        new_obj = Triangulation(self._category, self._generators, self._rank_bound,
                                self._cone_builder, self._seed)
        return self._duplicate_base(new_obj)

    def __len__(self):
        return len(self._generators)

    def __iter__(self):
        return iter(self._generators)

    def __repr__(self):
        return 'Triangulation: {} generators (rank bound {})'.format(
            len(self._generators), self._rank_bound)


def _concat(field, vectors):
    vectors = [v.reshape(-1) for v in vectors if v.shape[0]]
    if not vectors:
        return field.zeros(0)
    return np.concatenate(vectors)


def _same_first_isomorphic(base, triangle, seed, limit, samples):
    """Search an isomorphism (1, 1, c) from base to a triangle with the same f."""
    cat = base.category
    field = cat.field
    if base.C != triangle.C:
        return Decision.no('third objects differ: {} vs {}'.format(
            base.C, triangle.C))
    c1, c2 = base.C, triangle.C
    nc = cat.hom_dim(c1, c2)
    lhs = field.vstack([cat.pre_matrix(base.g, c2), cat.post_matrix(triangle.h, c1)],
                       nc)
    rhs = _concat(field, [triangle.g.coords, base.h.coords])
    if not base.shifted_a.is_identical(triangle.shifted_a):
        return Decision.no('connecting morphisms end in differently ordered objects')
    solution = solve(field, lhs, rhs)
    if solution is None:
        return Decision.no('no morphism (1, 1, c) between the triangles')
    points, exhaustive = search_points(field, solution[0], solution[1], seed, limit,
                                       samples)
    for point in points:
        c_mor = Mor(cat, c1, c2, point)
        if cat.is_isomorphism(c_mor)[0]:
            ident_a = Mor.identity(cat, base.A)
            ident_b = Mor.identity(cat, base.B)
            return Decision.yes({'a': ident_a, 'b': ident_b, 'c': c_mor})
    if exhaustive:
        return Decision.no('no invertible morphism (1, 1, c) between the triangles')
    return Decision.undecided('solution space of dimension {} was sampled'.format(
        solution[1].dim))
