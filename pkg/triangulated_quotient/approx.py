# coding=utf-8
"""Factor-through ideals, approximations and mutations of subcategories.

A subcategory is always the additive closure of a set of indecomposables, so it
is closed under isomorphisms, direct sums and direct summands.
"""
from __future__ import division
import itertools
import logging

from ._base import _DataBase
from .typing import name_tuple, int_in_range
from .decision import Decision
from .exactla import Subspace, rank
from .report import CheckResult
from .addcat.obj import Obj
from .addcat.mor import column, row
from .addcat.presentation import MORPHISM_BUDGET

_logger = logging.getLogger(__name__)
FACTOR_EPIC_CAP = 8


class SubcatSpec(_DataBase):
    """A full additive subcategory given by a set of indecomposable objects.

    Args:
        category: The CategoryPresentation that contains the subcategory.
        members: An iterable of indecomposable names. They are stored in the
            order of the category's indecomposables.

    Properties:
        * category
        * members
        * is_empty
        * display_name
        * user_data
    """
    __slots__ = ('_category', '_members', '_ideals', '_approx')

    def __init__(self, category, members=()):
        _DataBase.__init__(self)
        self._category = category
        members = set(name_tuple(members, 'subcategory members'))
        unknown = members - set(category.indecomposables)
        if unknown:
            raise ValueError('Subcategory members {} are not indecomposables of the '
                             'category.'.format(sorted(unknown)))
        self._members = tuple(x for x in category.indecomposables if x in members)
        self._ideals = {}
        self._approx = {}

    @classmethod
    def all(cls, category):
        """Get the subcategory of all objects."""
        return cls(category, category.indecomposables)

    @classmethod
    def empty(cls, category):
        """Get the zero subcategory."""
        return cls(category, ())

    @classmethod
    def from_dict(cls, category, data):
        """Create a SubcatSpec from a list of names or a dictionary with members."""
        if isinstance(data, dict):
            new_obj = cls(category, data['members'])
            new_obj._base_from_dict(data)
            return new_obj
        return cls(category, data)

    @property
    def category(self):
        return self._category

    @property
    def members(self):
        """Get a tuple of member names in category order."""
        return self._members

    @property
    def is_empty(self):
        return len(self._members) == 0

    def contains(self, obj):
        """Check whether an Obj (or indecomposable name) lies in the subcategory."""
        if isinstance(obj, str):
            return obj in self._members
        return obj.in_add(self._members)

    def is_subcategory_of(self, other):
        return set(self._members) <= set(other._members)

    def union(self, other):
        return SubcatSpec(self._category, self._members + other._members)

    def difference(self, other):
        """Get the member names that are not members of another subcategory."""
        return tuple(x for x in self._members if x not in set(other._members))

    def shifted(self, functor=None):
        """Get the additive closure of the image of the members under a functor.

        Args:
            functor: An AdditiveFunctorData. If None, the shift of the category.
        """
        functor = self._category.shift if functor is None else functor
        names = set(s for x in self._members for s in functor.image(x))
        return SubcatSpec(self._category, names)

    def to_dict(self):
        """Get the subcategory as a list of member names."""
        return list(self._members)

    def __copy__(self):
        new_obj = SubcatSpec(self._category, self._members)
        return self._duplicate_base(new_obj)

    def __len__(self):
        return len(self._members)

    def __iter__(self):
        return iter(self._members)

    def __eq__(self, other):
        return isinstance(other, SubcatSpec) and self._members == other._members

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._members)

    def __repr__(self):
        return 'add({})'.format(', '.join(self._members)) if self._members \
            else 'add(0)'


class MutationWitness(object):
    """Approximation triangles that witness the members of mutated subcategories.

    Args:
        subcat: The SubcatSpec D of the mutation.

    Properties:
        * d
        * cones
        * cocones
        * exempt
    """
    __slots__ = ('_d', '_cones', '_cocones')

    def __init__(self, subcat):
        self._d = subcat
        self._cones = {}
        self._cocones = {}

    @property
    def d(self):
        return self._d

    @property
    def cones(self):
        """Get a dictionary from names Y to triangles X -> D -> Y -> TX.

        These witness membership of Y in the left mutation of a subcategory.
        """
        return self._cones

    @property
    def cocones(self):
        """Get a dictionary from names X to triangles X -> D -> Y -> TX.

        These witness membership of X in the right mutation of a subcategory.
        """
        return self._cocones

    @property
    def exempt(self):
        """Get the names of members of D, which need no witness triangle."""
        return self._d.members

    def add_cone(self, name, triangle):
        self._cones.setdefault(name, triangle)

    def add_cocone(self, name, triangle):
        self._cocones.setdefault(name, triangle)

    def to_dict(self):
        """Get the witness as a dictionary."""
        return {
            'type': 'MutationWitness',
            'd': self._d.to_dict(),
            'exempt': list(self.exempt),
            'cones': {k: _witness_dict(t, self._d) for k, t in
                      sorted(self._cones.items())},
            'cocones': {k: _witness_dict(t, self._d) for k, t in
                        sorted(self._cocones.items())}
        }

    def to_text(self):
        """Get a list of text lines with one witness triangle per object."""
        lines = []
        for label, table in (('cone', self._cones), ('cocone', self._cocones)):
            for name, tri in sorted(table.items()):
                lines.append('{} {}: {} -> {} -> {}'.format(
                    label, name, tri.A, tri.B, tri.C))
        if self.exempt:
            lines.append('exempt (in D): {}'.format(', '.join(self.exempt)))
        return lines

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'MutationWitness: {} cones, {} cocones'.format(
            len(self._cones), len(self._cocones))


def _witness_dict(triangle, d_sub):
    base = triangle.to_dict()
    base['left_approximation'] = is_left_approximation(triangle.f, d_sub)
    base['right_approximation'] = is_right_approximation(triangle.g, d_sub)
    return base


def ideal_subspace(d_sub, source, target):
    """Get the subspace [D](source, target) of morphisms factoring through add D.

    It is spanned by the composites b o a of basis morphisms a: X -> D_i and
    b: D_i -> Y over the members D_i.

    Args:
        d_sub: A SubcatSpec.
        source: The source Obj X.
        target: The target Obj Y.

    Returns:
        A Subspace of the flattened coordinates of Hom(X, Y).
    """
    key = (source.summands, target.summands)
    if key in d_sub._ideals:
        return d_sub._ideals[key]
    cat = d_sub.category
    field = cat.field
    dim = cat.hom_dim(source, target)
    columns = []
    for name in d_sub.members:
        mid = Obj((name,))
        if not cat.hom_dim(mid, target):
            continue
        for a in cat.hom_basis(source, mid):
            columns.append(cat.pre_matrix(a, target))
    if columns:
        ideal = Subspace(field, dim, field.hstack(columns, dim).T)
    else:
        ideal = Subspace.zero(field, dim)
    d_sub._ideals[key] = ideal
    return ideal


def is_d_monic(f, d_sub):
    """Check that every morphism from f.source to add D factors through f."""
    cat = f.category
    for name in d_sub.members:
        mid = Obj((name,))
        need = cat.hom_dim(f.source, mid)
        if need and rank(cat.field, cat.pre_matrix(f, mid)) != need:
            return False
    return True


def is_d_epic(f, d_sub):
    """Check that every morphism from add D to f.target factors through f."""
    cat = f.category
    for name in d_sub.members:
        mid = Obj((name,))
        need = cat.hom_dim(mid, f.target)
        if need and rank(cat.field, cat.post_matrix(f, mid)) != need:
            return False
    return True


def is_left_approximation(f, d_sub):
    """Check that f ends in add D and is D-monic."""
    return d_sub.contains(f.target) and is_d_monic(f, d_sub)


def is_right_approximation(f, d_sub):
    """Check that f starts in add D and is D-epic."""
    return d_sub.contains(f.source) and is_d_epic(f, d_sub)


def left_approximation(obj, d_sub):
    """Get the universal map from an object to a sum of members of D.

    The target holds dim Hom(A, D_i) copies of each member D_i and the
    components are the basis morphisms of Hom(A, D_i).
    """
    cat = d_sub.category
    parts = []
    for name in d_sub.members:
        parts.extend(cat.hom_basis(obj, Obj((name,))))
    return column(cat, obj, parts)


def right_approximation(obj, d_sub):
    """Get the universal map from a sum of members of D to an object."""
    cat = d_sub.category
    parts = []
    for name in d_sub.members:
        parts.extend(cat.hom_basis(Obj((name,)), obj))
    return row(cat, obj, parts)


def minimize(f, d_sub, side='left'):
    """Strip summands from an approximation while it stays an approximation.

    Summands are tried in block order, so the result is deterministic.

    Args:
        f: A left approximation (for side left) or right approximation (for
            side right) with respect to d_sub.
        d_sub: The SubcatSpec D.
        side: Text for the side of the approximation. Choose from left, right.

    Returns:
        A Mor obtained from f by deleting target summands (left) or source
        summands (right).
    """
    if side not in ('left', 'right'):
        raise ValueError('"{}" is not a recognized approximation side. Choose from '
                         'left, right.'.format(side))
    left = side == 'left'
    check = is_d_monic if left else is_d_epic
    current = f
    index = 0
    while index < (current.target.rank if left else current.source.rank):
        if left:
            keep = [j for j in range(current.target.rank) if j != index]
            trial = current.component(keep, list(range(current.source.rank)))
        else:
            keep = [i for i in range(current.source.rank) if i != index]
            trial = current.component(list(range(current.target.rank)), keep)
        if check(trial, d_sub):
            current = trial
        else:
            index += 1
    return current


def approximation_triangle(obj, d_sub, triangulation):
    """Get a distinguished triangle on the minimal left D-approximation of an object.

    Args:
        obj: An Obj or indecomposable name.
        d_sub: The SubcatSpec D.
        triangulation: The Triangulation used to extend the approximation.

    Returns:
        A Decision. Yes carries the Triangle X -> D_X -> Y -> TX.
    """
    obj = Obj((obj,)) if isinstance(obj, str) else obj
    key = (id(triangulation), obj.summands)
    if key not in d_sub._approx:
        alpha = minimize(left_approximation(obj, d_sub), d_sub, 'left')
        d_sub._approx[key] = triangulation.extend_morphism(alpha)
    return d_sub._approx[key]


def is_extension_closed(z_sub, triangulation, budget=MORPHISM_BUDGET, seed=None):
    """Check that middle terms of triangles with outer terms in Z lie in Z.

    Args:
        z_sub: The SubcatSpec Z.
        triangulation: The Triangulation whose triangles within the rank bound
            are inspected.
        budget: The largest hom-space enumerated completely. (Default: 16).
        seed: Optional integer seed. If None, the seed of the triangulation is used.

    Returns:
        A CheckResult named extension-closed.
    """
    seed = triangulation.seed if seed is None else seed
    result = CheckResult('extension-closed')
    tris, exhaustive = triangulation.triangles(budget, seed)
    result.exhaustive = exhaustive
    for tri in tris:
        if not z_sub.contains(tri.A) or not z_sub.contains(tri.C):
            continue
        result.count()
        if not z_sub.contains(tri.B):
            outside = sorted(set(s for s in tri.B if not z_sub.contains(s)))
            result.add_violation(
                '030001', 'ExtensionClosed', 'Triangle',
                '{}->{}->{}'.format(tri.A, tri.B, tri.C),
                'Triangle {}->{}->{} has middle summands {} outside {}.'.format(
                    tri.A, tri.B, tri.C, ', '.join(outside), z_sub), tri)
    _logger.info('extension-closed %s: %s (%d triangles)', z_sub, result.status,
                 result.checked)
    return result


def _mutation_rows(x_sub, d_sub, triangulation, witness=None, cocone=False):
    """Compute the indecomposables reached by approximation triangles.

    Returns:
        A tuple with the set of reached names and a list of names whose
        approximation triangle could not be decided.
    """
    cat = d_sub.category
    reached, undecided = set(d_sub.members), []
    candidates = cat.indecomposables if cocone else x_sub.members
    for name in candidates:
        if name in d_sub.members:
            continue
        decision = approximation_triangle(name, d_sub, triangulation)
        if not decision.is_yes:
            undecided.append(name)
            continue
        tri = decision.witness
        if not is_right_approximation(tri.g, d_sub):
            continue
        if cocone:
            if x_sub.contains(tri.C):
                reached.add(name)
                if witness is not None:
                    witness.add_cocone(name, tri)
        else:
            for summand in tri.C:
                reached.add(summand)
                if witness is not None:
                    witness.add_cone(summand, tri)
    return reached, undecided


def mu_inverse(x_sub, d_sub, triangulation, witness=None):
    """Get the objects Y in D or with a triangle X -> D -> Y -> TX from X in add X.

    The triangle must start with a left D-approximation and continue with a
    right D-approximation. Approximation triangles are additive, so it is enough
    to visit the indecomposables of X.

    Args:
        x_sub: The SubcatSpec X.
        d_sub: The SubcatSpec D.
        triangulation: The Triangulation of the category.
        witness: An optional MutationWitness that collects the triangles.

    Returns:
        A SubcatSpec.
    """
    reached, undecided = _mutation_rows(x_sub, d_sub, triangulation, witness)
    for name in undecided:
        _logger.warning('no approximation triangle found for %s', name)
    return SubcatSpec(d_sub.category, reached)


def mu(y_sub, d_sub, triangulation, witness=None):
    """Get the objects X in D or with a triangle X -> D -> Y -> TX with Y in add Y.

    Args:
        y_sub: The SubcatSpec Y.
        d_sub: The SubcatSpec D.
        triangulation: The Triangulation of the category.
        witness: An optional MutationWitness that collects the triangles.

    Returns:
        A SubcatSpec.
    """
    reached, undecided = _mutation_rows(y_sub, d_sub, triangulation, witness,
                                        cocone=True)
    for name in undecided:
        _logger.warning('no approximation triangle found for %s', name)
    return SubcatSpec(d_sub.category, reached)


def verify_mutation_pair(z_sub, d_sub, triangulation):
    """Decide whether (Z, Z) is a D-mutation pair.

    Args:
        z_sub: The SubcatSpec Z.
        d_sub: The SubcatSpec D, which must be contained in Z.
        triangulation: The Triangulation of the category.

    Returns:
        A Decision. Yes carries a MutationWitness with a cone and a cocone
        triangle for every member of Z outside D. No names the first object
        where one of the two mutations differs from Z.
    """
    if not d_sub.is_subcategory_of(z_sub):
        raise ValueError('{} is not contained in {}.'.format(d_sub, z_sub))
    witness = MutationWitness(d_sub)
    left = mu_inverse(z_sub, d_sub, triangulation, witness)
    right = mu(z_sub, d_sub, triangulation, witness)
    cat = d_sub.category
    for name in cat.indecomposables:
        for label, result in (('mu_inverse', left), ('mu', right)):
            if result.contains(name) == z_sub.contains(name):
                continue
            if z_sub.contains(name):
                reason = '{} of {} misses {}'.format(label, z_sub, name)
            else:
                reason = '{} of {} contains {} outside Z'.format(label, z_sub, name)
            _logger.info('mutation pair rejected: %s', reason)
            tri = witness.cones.get(name) if label == 'mu_inverse' \
                else witness.cocones.get(name)
            return Decision.no(reason, {'object': name, 'triangle': tri})
    _logger.info('mutation pair verified for %s over %s', z_sub, d_sub)
    return Decision.yes(witness)


def z_equals_mu(z_sub, d_sub, triangulation):
    """Decide the weaker condition Z = mu(Z; D) used for right triangulated quotients."""
    witness = MutationWitness(d_sub)
    right = mu(z_sub, d_sub, triangulation, witness)
    if right == z_sub:
        return Decision.yes(witness)
    missing = [x for x in z_sub.members if not right.contains(x)]
    extra = [x for x in right.members if not z_sub.contains(x)]
    name = (missing or extra)[0]
    return Decision.no('mu of {} differs from Z at {}'.format(z_sub, name),
                       {'object': name, 'triangle': witness.cocones.get(name)})


def shift_orbit_length(d_sub, cap=FACTOR_EPIC_CAP):
    """Get the length of the orbit of D under the shift and whether the cap binds.

    The orbit ends when T^n D is zero or repeats an earlier T^k D.
    """
    seen, current = [d_sub.members], d_sub
    for n in range(1, cap + 1):
        current = current.shifted()
        if current.is_empty or current.members in seen:
            return n, False
        seen.append(current.members)
    return cap, True


def is_factor_through_epic(d_sub, rank_bound=2, n_max=None):
    """Check that T reflects the shifted factor-through ideals of D.

    For every n from 1 to n_max and every pair (X, Y) within the rank bound,
    [T^n D](TX, TY) must lie in the image under T of [T^(n-1) D](X, Y).

    Args:
        d_sub: The SubcatSpec D.
        rank_bound: Integer for the largest number of summands of X and Y.
            (Default: 2).
        n_max: Optional integer for the largest power of T. If None, the length
            of the orbit of D under the shift, capped at 8. (Default: None).

    Returns:
        A CheckResult named factor-through-epic.
    """
    cat = d_sub.category
    result = CheckResult('factor-through-epic')
    if n_max is None:
        n_max, capped = shift_orbit_length(d_sub)
        if capped:
            result.note('orbit depth capped at n={}'.format(n_max))
    n_max = int_in_range(n_max, 1, None, 'n_max')
    shift = cat.shift
    objs = cat.objects(rank_bound)
    previous = d_sub
    for n in range(1, n_max + 1):
        current = previous.shifted()
        if current.is_empty:
            _logger.warning('factor-through-epic is vacuous at n=%d', n)
            result.note('vacuous at n={}'.format(n))
        for x_obj, y_obj in itertools.product(objs, repeat=2):
            result.count()
            if current.is_empty:
                continue
            tx, ty = shift.apply_obj(x_obj), shift.apply_obj(y_obj)
            shifted_ideal = ideal_subspace(current, tx, ty)
            if not shifted_ideal.dim:
                continue
            mat = shift.matrix(cat, cat, x_obj, y_obj)
            reflected = ideal_subspace(previous, x_obj, y_obj).image(mat)
            for vec in shifted_ideal.basis:
                if not reflected.contains(vec):
                    result.add_violation(
                        '030002', 'FactorThroughEpic', 'Pair',
                        '{}|{}'.format(x_obj, y_obj),
                        'A morphism TX -> TY factoring through T^{} D is not T of a '
                        'morphism factoring through T^{} D.'.format(n, n - 1),
                        {'n': n, 'source': x_obj, 'target': y_obj,
                         'f': cat.coords_to_mor(tx, ty, vec)})
                    break
        previous = current
    _logger.info('factor-through-epic %s up to n=%d: %s', d_sub, n_max, result.status)
    return result
