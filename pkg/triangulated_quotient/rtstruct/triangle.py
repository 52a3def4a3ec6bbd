# coding=utf-8
"""Sextuples A -> B -> C -> TA and the linear algebra of their morphisms."""
from __future__ import division

from ..decision import Decision
from ..exactla import ENUMERATION_LIMIT, SAMPLE_SIZE, solve, nullspace, \
    search_points
from ..addcat.obj import Obj
from ..addcat.mor import Mor, diagonal, permutation_isomorphism
from ..addcat.functor import apply_functor


class Triangle(object):
    """A sextuple (A, B, C, f, g, h) with h: C -> TA.

    Args:
        f: A Mor A -> B.
        g: A Mor B -> C.
        h: A Mor C -> TA, where TA is the image of A under the shift functor
            of the category with the summands in block order.

    Properties:
        * A
        * B
        * C
        * f
        * g
        * h
        * category
        * shifted_a
    """
    __slots__ = ('_f', '_g', '_h')

    def __init__(self, f, g, h):
        category = f.category
        assert category.shift is not None, \
            'Triangles need a category with a shift functor.'
        if not f.target.is_identical(g.source):
            raise ValueError('Triangle target of f ({}) does not match the source '
                             'of g ({}).'.format(f.target, g.source))
        if not g.target.is_identical(h.source):
            raise ValueError('Triangle target of g ({}) does not match the source '
                             'of h ({}).'.format(g.target, h.source))
        shifted = category.shift.apply_obj(f.source)
        if not h.target.is_identical(shifted):
            raise ValueError('Triangle connecting morphism must end in T({}) = {}. '
                             'Got {}.'.format(f.source, shifted, h.target))
        self._f, self._g, self._h = f, g, h

    @classmethod
    def from_dict(cls, category, data):
        """Create a Triangle from a dictionary.

        Args:
            category: The CategoryPresentation of the triangle.
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "A": ["M1"], "B": ["M2"], "C": ["M1"],  # summand names
            "f": [[[1]]],  # blocks[j][i] of f: A -> B
            "g": [[[1]]],  # blocks of g: B -> C
            "h": [[[1]]]  # blocks of h: C -> TA
            }
        """
        a_obj, b_obj, c_obj = Obj(data['A']), Obj(data['B']), Obj(data['C'])
        ta_obj = category.shift.apply_obj(a_obj)
        f = Mor.from_blocks(category, a_obj, b_obj, data['f'])
        g = Mor.from_blocks(category, b_obj, c_obj, data['g'])
        h = Mor.from_blocks(category, c_obj, ta_obj, data['h'])
        return cls(f, g, h)

    @property
    def A(self):
        return self._f.source

    @property
    def B(self):
        return self._f.target

    @property
    def C(self):
        return self._g.target

    @property
    def f(self):
        return self._f

    @property
    def g(self):
        return self._g

    @property
    def h(self):
        return self._h

    @property
    def category(self):
        return self._f.category

    @property
    def shifted_a(self):
        """Get the Obj TA in block order."""
        return self._h.target

    @property
    def objects(self):
        """Get a tuple of the objects (A, B, C)."""
        return (self.A, self.B, self.C)

    def rotate(self):
        """Get the rotated triangle (B, C, TA, g, h, -Tf)."""
        t_f = apply_functor(self.category.shift, self._f)
        return Triangle(self._g, self._h, -t_f)

    def conjugate(self, a, b, c):
        """Transport this triangle along isomorphisms of its three objects.

        Args:
            a: An isomorphism A -> A'.
            b: An isomorphism B -> B'.
            c: An isomorphism C -> C'.

        Returns:
            The triangle (A', B', C', b f a^-1, c g b^-1, T(a) h c^-1).
        """
        cat = self.category
        inverses = []
        for mor in (a, b, c):
            ok, inv = cat.is_isomorphism(mor)
            if not ok:
                raise ValueError('Cannot conjugate a triangle along a '
                                 'non-invertible morphism {}.'.format(mor))
            inverses.append(inv)
        a_inv, b_inv, c_inv = inverses
        t_a = apply_functor(cat.shift, a)
        return Triangle(cat.compose(cat.compose(b, self._f), a_inv),
                        cat.compose(cat.compose(c, self._g), b_inv),
                        cat.compose(cat.compose(t_a, self._h), c_inv))

    def direct_sum(self, other):
        """Get the direct sum of this triangle with another one."""
        cat = self.category
        return Triangle(diagonal(cat, [self._f, other._f]),
                        diagonal(cat, [self._g, other._g]),
                        diagonal(cat, [self._h, other._h]))

    def composites_vanish(self):
        """Check that g o f = 0 and h o g = 0."""
        cat = self.category
        return cat.compose(self._g, self._f).is_zero and \
            cat.compose(self._h, self._g).is_zero

    def key(self):
        return (self._f.key(), self._g.key(), self._h.key())

    def to_dict(self):
        """Get the triangle as a dictionary."""
        field = self.category.field
        return {
            'A': self.A.to_dict(),
            'B': self.B.to_dict(),
            'C': self.C.to_dict(),
            'f': [[field.to_json(b) for b in r] for r in self._f.blocks],
            'g': [[field.to_json(b) for b in r] for r in self._g.blocks],
            'h': [[field.to_json(b) for b in r] for r in self._h.blocks]
        }

    def __eq__(self, other):
        return isinstance(other, Triangle) and self._f == other._f and \
            self._g == other._g and self._h == other._h

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key())

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'Triangle: {} -> {} -> {} -> {}'.format(
            self.A, self.B, self.C, self.shifted_a)


def rotate(triangle):
    """Get (B, C, TA, g, h, -Tf) for a triangle (A, B, C, f, g, h)."""
    return triangle.rotate()


def trivial_triangle(category, obj):
    """Get the triangle (0, A, A, 0, 1, 0)."""
    zero = Obj.zero()
    return Triangle(Mor(category, zero, obj), Mor.identity(category, obj),
                    Mor(category, obj, zero))


def identity_triangle(category, obj):
    """Get the triangle (A, A, 0, 1, 0, 0) on the identity of A."""
    zero = Obj.zero()
    return Triangle(Mor.identity(category, obj), Mor(category, obj, zero),
                    Mor(category, zero, category.shift.apply_obj(obj)))


def direct_sum_triangle(category, a_obj, b_obj):
    """Get the split triangle A -> A + B -> B -> TA with zero connecting morphism."""
    _, i_a, _, _, p_b = category.direct_sum(a_obj, b_obj)
    return Triangle(i_a, p_b, Mor(category, b_obj, category.shift.apply_obj(a_obj)))


def morphism_system(t1, t2):
    """Get the linear system whose solutions are morphisms of triangles t1 -> t2.

    The unknowns are the concatenated coordinates of a: A1 -> A2, b: B1 -> B2 and
    c: C1 -> C2. The equations are b f1 = f2 a, c g1 = g2 b and h2 c = T(a) h1.

    Returns:
        A tuple with the 2-D coefficient array and a tuple of the dimensions
        of the a, b and c coordinate blocks.
    """
    cat = t1.category
    field = cat.field
    a1, b1, c1 = t1.objects
    a2, b2, c2 = t2.objects
    na, nb, nc = cat.hom_dim(a1, a2), cat.hom_dim(b1, b2), cat.hom_dim(c1, c2)
    t_mat = cat.shift.matrix(cat, cat, a1, a2)
    ta2 = t2.shifted_a
    e1, e2, e3 = cat.hom_dim(a1, b2), cat.hom_dim(b1, c2), cat.hom_dim(c1, ta2)
    zeros = field.zeros
    row1 = field.hstack([-cat.post_matrix(t2.f, a1), cat.pre_matrix(t1.f, b2),
                         zeros((e1, nc))], e1)
    row2 = field.hstack([zeros((e2, na)), -cat.post_matrix(t2.g, b1),
                         cat.pre_matrix(t1.g, c2)], e2)
    ta_part = field.matmul(cat.pre_matrix(t1.h, ta2), t_mat)
    row3 = field.hstack([-ta_part, zeros((e3, nb)), cat.post_matrix(t2.h, c1)], e3)
    return field.vstack([row1, row2, row3], na + nb + nc), (na, nb, nc)


def split_solution(t1, t2, point, sizes):
    """Split a solution vector of morphism_system into the Mor a, b and c."""
    cat = t1.category
    na, nb, _ = sizes
    return (Mor(cat, t1.A, t2.A, point[:na]),
            Mor(cat, t1.B, t2.B, point[na:na + nb]),
            Mor(cat, t1.C, t2.C, point[na + nb:]))


def sextuple_isomorphic(t1, t2, seed=0, limit=ENUMERATION_LIMIT,
                        samples=SAMPLE_SIZE):
    """Decide whether two triangles are isomorphic as sextuples.

    The commuting conditions are linear in (a, b, c), so the solution space is
    computed first and then searched for a triple of isomorphisms.

    Args:
        t1: A Triangle.
        t2: A Triangle of the same category.
        seed: Integer seed for the search. (Default: 0).
        limit: The largest solution space that is enumerated completely.
        samples: The number of random points for larger spaces.

    Returns:
        A Decision. Yes carries a dictionary with the isomorphisms a, b and c.
    """
    for name, x, y in zip('ABC', t1.objects, t2.objects):
        if x != y:
            return Decision.no('objects {} differ: {} vs {}'.format(name, x, y))
    cat = t1.category
    field = cat.field
    mat, sizes = morphism_system(t1, t2)
    space = nullspace(field, mat)
    points, exhaustive = search_points(field, field.zeros(space.ambient_dim), space,
                                       seed, limit, samples)
    for point in points:
        a, b, c = split_solution(t1, t2, point, sizes)
        if cat.is_isomorphism(a)[0] and cat.is_isomorphism(b)[0] and \
                cat.is_isomorphism(c)[0]:
            return Decision.yes({'a': a, 'b': b, 'c': c})
    if exhaustive:
        return Decision.no('no invertible morphism of triangles')
    return Decision.undecided('solution space of dimension {} was sampled'.format(
        space.dim))


def completion_space(t1, t2, a, b):
    """Get all c: C1 -> C2 with c g1 = g2 b and h2 c = T(a) h1.

    Returns:
        None if there is no such c. Otherwise, a tuple of a particular solution
        and the Subspace of solutions of the homogeneous system.
    """
    cat = t1.category
    field = cat.field
    if cat.compose(b, t1.f) != cat.compose(t2.f, a):
        raise ValueError('The left square does not commute: b o f1 != f2 o a.')
    c1, c2 = t1.C, t2.C
    nc = cat.hom_dim(c1, c2)
    lhs = field.vstack([cat.pre_matrix(t1.g, c2), cat.post_matrix(t2.h, c1)], nc)
    t_a = apply_functor(cat.shift, a)
    rhs_parts = [cat.compose(t2.g, b).coords, cat.compose(t_a, t1.h).coords]
    rhs = field.hstack([p.reshape(1, -1) for p in rhs_parts], 1).reshape(-1) \
        if any(p.shape[0] for p in rhs_parts) else field.zeros(0)
    return solve(field, lhs, rhs)


def complete_morphism(t1, t2, a, b):
    """Complete a commuting left square to a morphism of triangles.

    Args:
        t1: The source Triangle.
        t2: The target Triangle.
        a: A Mor A1 -> A2.
        b: A Mor B1 -> B2 with b o f1 = f2 o a.

    Returns:
        A Mor c: C1 -> C2 with c o g1 = g2 o b and h2 o c = T(a) o h1, or None
        if no such morphism exists.
    """
    solution = completion_space(t1, t2, a, b)
    if solution is None:
        return None
    return Mor(t1.category, t1.C, t2.C, solution[0])


def derotations(rotated, a_obj):
    """Get the data for de-rotating a triangle (B, C, D, g, h, k) along T(A) = D.

    Args:
        rotated: A Triangle (B, C, D, g, h, k).
        a_obj: An Obj A whose shift has the same summands as D.

    Returns:
        None if no f: A -> B satisfies -T(f) = k o P, where P: TA -> D is the
        permutation isomorphism. Otherwise, a tuple with the particular f, the
        Subspace of homogeneous solutions and the morphism P^-1 o h: C -> TA
        used as the connecting morphism of every de-rotated triangle.
    """
    cat = rotated.category
    field = cat.field
    b_obj, d_obj = rotated.A, rotated.C
    t_a = cat.shift.apply_obj(a_obj)
    perm = permutation_isomorphism(cat, t_a, d_obj)
    perm_inv = permutation_isomorphism(cat, d_obj, t_a)
    target = -cat.compose(rotated.h, perm)
    t_mat = cat.shift.matrix(cat, cat, a_obj, b_obj)
    solution = solve(field, t_mat, target.coords)
    if solution is None:
        return None
    return solution[0], solution[1], cat.compose(perm_inv, rotated.g)


def derotate(rotated, a_obj, f):
    """Get the triangle (A, B, C, f, g, P^-1 h) for a de-rotation of (B, C, D, g, h, k)."""
    cat = rotated.category
    perm_inv = permutation_isomorphism(cat, rotated.C, cat.shift.apply_obj(a_obj))
    return Triangle(f, rotated.f, cat.compose(perm_inv, rotated.g))
