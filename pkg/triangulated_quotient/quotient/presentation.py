# coding=utf-8
"""Quotients Z/D of a subcategory by the ideal of maps factoring through D."""
from __future__ import division
import itertools
import logging

from .._base import _DataBase
from ..decision import Decision
from ..addcat.obj import Obj
from ..addcat.mor import Mor
from ..addcat.presentation import CategoryPresentation, MORPHISM_BUDGET
from ..rtstruct.triangle import Triangle, trivial_triangle
from ..approx import SubcatSpec, ideal_subspace, is_extension_closed, \
    is_factor_through_epic, verify_mutation_pair, z_equals_mu

_logger = logging.getLogger(__name__)
HYPOTHESIS_MODES = ('right', 'pair')


class HypothesisError(ValueError):
    """Raised when a quotient is requested for data that fails one of its hypotheses.

    Args:
        name: Text for the name of the failed hypothesis.
        witness: An optional object or dictionary that exhibits the failure.
    """

    def __init__(self, name, witness=None, message=None):
        self.name = name
        self.witness = witness
        ValueError.__init__(self, message or 'hypothesis failed: {}'.format(name))


class QuotientPresentation(_DataBase):
    """The quotient of Z by the ideal [D] of maps factoring through add D.

    The indecomposables of the quotient are the members of Z outside D whose
    identity does not factor through D. Hom-spaces are Hom/[D], written in the
    coordinates of the non-pivot positions of the ideal, so a quotient basis
    morphism lifts to the base basis morphism in the same position.

    Args:
        base: The CategoryPresentation that contains Z.
        z_sub: The SubcatSpec Z.
        d_sub: The SubcatSpec D, which must be contained in Z.
        sigma_table: An optional dictionary from the members of Z to their
            fixed triangles M -> D_M -> sigma M -> TM. Setting it builds the
            shift sigma of the quotient. (Default: None).

    Properties:
        * base
        * z
        * d
        * category
        * survivors
        * sigma_table
        * sigma
        * display_name
        * user_data
    """
    __slots__ = ('_base', '_z', '_d', '_survivors', '_category', '_sigma_table')

    def __init__(self, base, z_sub, d_sub, sigma_table=None):
        _DataBase.__init__(self)
        assert z_sub.category is base and d_sub.category is base, \
            'Subcategories must belong to the base category.'
        if not d_sub.is_subcategory_of(z_sub):
            raise HypothesisError('D contained in Z', {'d': d_sub, 'z': z_sub},
                                  '{} is not contained in {}.'.format(d_sub, z_sub))
        self._base = base
        self._z = z_sub
        self._d = d_sub
        survivors = []
        for x in z_sub.members:
            if d_sub.contains(x):
                continue
            obj = Obj((x,))
            if not ideal_subspace(d_sub, obj, obj).contains(base.id_coords[x]):
                survivors.append(x)
        self._survivors = tuple(survivors)
        self._category = self._build_category()
        self._sigma_table = None
        if sigma_table is not None:
            self.sigma_table = sigma_table
        _logger.info('quotient of %s by %s keeps %s', z_sub, d_sub,
                     ', '.join(self._survivors) or 'nothing')

    @classmethod
    def from_dict(cls, base, data):
        """Create a QuotientPresentation from its sidecar dictionary.

        Args:
            base: The base CategoryPresentation.
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "type": "QuotientPresentation",
            "z": ["M1", "M2", "M3"],
            "d": ["M2"],
            "survivors": ["M1", "M3"],
            "projection": {"M1|M1": [[1]]},  # base coords -> quotient coords
            "sigma_table": {"M1": {"A": ["M1"], "B": ["M2"], ...}}
            }
        """
        z_sub = SubcatSpec(base, data['z'])
        d_sub = SubcatSpec(base, data['d'])
        table = None
        if data.get('sigma_table'):
            table = {k: Triangle.from_dict(base, v)
                     for k, v in data['sigma_table'].items()}
        new_obj = cls(base, z_sub, d_sub, table)
        if 'survivors' in data and tuple(data['survivors']) != new_obj.survivors:
            raise ValueError('Stored quotient indecomposables {} do not match the '
                             'computed ones {}.'.format(data['survivors'],
                                                        new_obj.survivors))
        new_obj._base_from_dict(data)
        return new_obj

    @property
    def base(self):
        return self._base

    @property
    def z(self):
        return self._z

    @property
    def d(self):
        return self._d

    @property
    def category(self):
        """Get the CategoryPresentation of the quotient."""
        return self._category

    @property
    def survivors(self):
        """Get a tuple of the members of Z that stay nonzero in the quotient."""
        return self._survivors

    @property
    def sigma_table(self):
        """Get or set a dictionary from members of Z to their fixed triangles."""
        return self._sigma_table

    @sigma_table.setter
    def sigma_table(self, value):
        missing = [x for x in self._z.members if x not in value]
        assert not missing, 'Sigma table is missing {}.'.format(missing)
        for name, tri in value.items():
            assert isinstance(tri, Triangle), 'Expected Triangle for the sigma ' \
                'triangle of {}. Got {}.'.format(name, type(tri))
            assert tri.A.is_identical(Obj((name,))), 'Sigma triangle of {} starts ' \
                'at {}.'.format(name, tri.A)
        self._sigma_table = dict(value)
        from .sigma import build_sigma
        self._category.shift = build_sigma(self)

    @property
    def sigma(self):
        """Get the AdditiveFunctorData of sigma on the quotient (None before the table)."""
        return self._category.shift

    def _ideal(self, x, y):
        return ideal_subspace(self._d, Obj((x,)), Obj((y,)))

    def projection_matrix(self, x, y):
        """Get the matrix from base coordinates of Hom(x, y) to quotient coordinates."""
        return self._ideal(x, y).quotient_matrix()

    def _build_category(self):
        base, field = self._base, self._base.field
        names = self._survivors
        hom_dims, comp, ids, basis_names = {}, {}, {}, {}
        for x, y in itertools.product(names, repeat=2):
            ideal = self._ideal(x, y)
            dim = len(ideal.complement)
            if dim:
                hom_dims[(x, y)] = dim
                all_names = base.basis_names[(x, y)]
                basis_names[(x, y)] = [all_names[k] for k in ideal.complement]
        for x, y, z in itertools.product(names, repeat=3):
            d_f, d_g = hom_dims.get((x, y), 0), hom_dims.get((y, z), 0)
            d_r = hom_dims.get((x, z), 0)
            if not (d_f and d_g and d_r):
                continue
            tensor = field.zeros((d_g, d_f, d_r))
            ox, oy, oz = Obj((x,)), Obj((y,)), Obj((z,))
            f_ideal, g_ideal, r_ideal = self._ideal(x, y), self._ideal(y, z), \
                self._ideal(x, z)
            eye_f, eye_g = field.identity(d_f), field.identity(d_g)
            for gi in range(d_g):
                g = Mor(base, oy, oz, g_ideal.lift(eye_g[gi]))
                for fi in range(d_f):
                    f = Mor(base, ox, oy, f_ideal.lift(eye_f[fi]))
                    tensor[gi, fi] = r_ideal.quotient_coordinates(
                        base.compose(g, f).coords)
            comp[(x, y, z)] = tensor
        for x in names:
            ids[x] = self._ideal(x, x).quotient_coordinates(base.id_coords[x])
        return CategoryPresentation(field, names, hom_dims, comp, ids,
                                    basis_names=basis_names)

    # projection and lifting

    def _positions(self, obj):
        """Get the indices of the summands of a base Obj that survive."""
        outside = [s for s in obj if not self._z.contains(s)]
        if outside:
            raise ValueError('Object {} has summands {} outside {}.'.format(
                obj, ', '.join(outside), self._z))
        keep = set(self._survivors)
        return [k for k, s in enumerate(obj) if s in keep]

    def project_obj(self, obj):
        """Get the quotient Obj of a base Obj in add Z."""
        return Obj(obj[k] for k in self._positions(obj))

    def project(self, mor):
        """Get the quotient morphism of a base morphism between objects of add Z."""
        src_pos, tgt_pos = self._positions(mor.source), self._positions(mor.target)
        source = Obj(mor.source[k] for k in src_pos)
        target = Obj(mor.target[k] for k in tgt_pos)
        cat = self._category
        coords = cat.field.zeros(cat.hom_dim(source, target))
        for j, i, start, dim in cat.hom_layout(source, target):
            if not dim:
                continue
            block = mor.block(tgt_pos[j], src_pos[i])
            coords[start:start + dim] = self._ideal(source[i], target[j]) \
                .quotient_coordinates(block)
        return Mor(cat, source, target, coords)

    def lift(self, mor, source=None, target=None):
        """Get a base morphism that projects to a quotient morphism.

        Args:
            mor: A Mor of the quotient category.
            source: An optional base Obj whose projection is mor.source. The
                lift is zero on its other summands. If None, mor.source.
            target: An optional base Obj whose projection is mor.target.
        """
        source = mor.source if source is None else source
        target = mor.target if target is None else target
        src_pos, tgt_pos = self._positions(source), self._positions(target)
        if not Obj(source[k] for k in src_pos).is_identical(mor.source) or \
                not Obj(target[k] for k in tgt_pos).is_identical(mor.target):
            raise ValueError('Cannot lift {} -> {} to {} -> {}.'.format(
                mor.source, mor.target, source, target))
        base = self._base
        coords = base.field.zeros(base.hom_dim(source, target))
        big = {(j, i): (s, d) for j, i, s, d in base.hom_layout(source, target)}
        for j, i, start, dim in self._category.hom_layout(mor.source, mor.target):
            if not dim:
                continue
            b_start, b_dim = big[(tgt_pos[j], src_pos[i])]
            ideal = self._ideal(mor.source[i], mor.target[j])
            coords[b_start:b_start + b_dim] = ideal.lift(mor.coords[start:start + dim])
        return Mor(base, source, target, coords)

    def sigma_triangle(self, obj):
        """Get the direct sum of the fixed triangles of the summands of a base Obj."""
        assert self._sigma_table is not None, 'The sigma triangles are not fixed yet.'
        total = None
        for name in obj:
            if name not in self._sigma_table:
                raise ValueError('{} has no fixed sigma triangle.'.format(name))
            tri = self._sigma_table[name]
            total = tri if total is None else total.direct_sum(tri)
        return trivial_triangle(self._base, Obj.zero()) if total is None else total

    def hom_dim_table(self):
        """Get a dictionary from survivor pairs to the base and quotient hom dimensions."""
        table = {}
        for x, y in itertools.product(self._survivors, repeat=2):
            table[(x, y)] = (self._base.hom_dim_names(x, y),
                             self._category.hom_dim_names(x, y))
        return table

    def to_dict(self):
        """Get the quotient as a category file dictionary with a quotient sidecar."""
        base = self._category.to_dict()
        field = self._base.field
        sidecar = {
            'type': 'QuotientPresentation',
            'z': self._z.to_dict(),
            'd': self._d.to_dict(),
            'survivors': list(self._survivors),
            'projection': {}
        }
        for x, y in itertools.product(self._survivors, repeat=2):
            if self._base.hom_dim_names(x, y):
                sidecar['projection']['{}|{}'.format(x, y)] = \
                    field.to_json(self.projection_matrix(x, y))
        if self._sigma_table is not None:
            sidecar['sigma_table'] = {k: t.to_dict() for k, t in
                                      sorted(self._sigma_table.items())}
        base['quotient'] = self._base_to_dict(sidecar)
        return base

    def __copy__(self):
        new_obj = QuotientPresentation(self._base, self._z, self._d, self._sigma_table)
        return self._duplicate_base(new_obj)

    def __repr__(self):
        return 'QuotientPresentation: {} / {} ({} indecomposables)'.format(
            self._z, self._d, len(self._survivors))


def _result_decision(result):
    if result.status == 'Fail':
        return Decision.no(result.violations[0]['message'], result.violations[0])
    if result.status == 'Undecided':
        return Decision.undecided(result.undecided[0]['message'], result.undecided[0])
    return Decision.yes(result)


def check_hypotheses(z_sub, d_sub, triangulation, mode='right',
                     budget=MORPHISM_BUDGET, seed=None, n_max=None):
    """Decide each hypothesis of the quotient construction.

    Args:
        z_sub: The SubcatSpec Z.
        d_sub: The SubcatSpec D.
        triangulation: The Triangulation of the base category.
        mode: Text for the hypothesis set. Choose from right (Z = mu(Z; D),
            for a right triangulated quotient) and pair ((Z, Z) is a D-mutation
            pair, for a triangulated quotient). (Default: right).
        budget: The largest hom-space enumerated completely. (Default: 16).
        seed: Optional integer seed. If None, the seed of the triangulation.
        n_max: Optional integer for the largest power of T in the
            factor-through-epic check. (Default: None).

    Returns:
        A list of (name, Decision) tuples in the order they were checked.
    """
    if mode not in HYPOTHESIS_MODES:
        raise ValueError('"{}" is not a recognized hypothesis mode. Choose from '
                         '{}.'.format(mode, ', '.join(HYPOTHESIS_MODES)))
    decisions = []
    if not d_sub.is_subcategory_of(z_sub):
        decisions.append(('D contained in Z', Decision.no(
            '{} is not contained in {}'.format(d_sub, z_sub),
            {'outside': list(d_sub.difference(z_sub))})))
        return decisions
    decisions.append(('D contained in Z', Decision.yes()))
    decisions.append(('extension-closed', _result_decision(
        is_extension_closed(z_sub, triangulation, budget, seed))))
    if mode == 'pair':
        decisions.append(('mutation pair', verify_mutation_pair(
            z_sub, d_sub, triangulation)))
    else:
        decisions.append(('Z = mu(Z; D)', z_equals_mu(z_sub, d_sub, triangulation)))
    decisions.append(('factor-through-epic', _result_decision(
        is_factor_through_epic(d_sub, triangulation.rank_bound, n_max))))
    return decisions


def build_quotient(base, z_sub, d_sub, triangulation, mode='right', check=True,
                   budget=MORPHISM_BUDGET, seed=None, n_max=None):
    """Build the quotient Z/D with its fixed sigma triangles.

    Args:
        base: The CategoryPresentation that contains Z.
        z_sub: The SubcatSpec Z.
        d_sub: The SubcatSpec D.
        triangulation: The Triangulation of the base category.
        mode: Text for the hypothesis set (right or pair). (Default: right).
        check: Boolean for whether the hypotheses are checked first. (Default: True).
        budget: The largest hom-space enumerated completely. (Default: 16).
        seed: Optional integer seed for the choice of sigma triangles. If None,
            the canonical (first found) triangles are used.
        n_max: Optional integer passed to the factor-through-epic check.

    Returns:
        A QuotientPresentation whose category has sigma as its shift.

    Raises:
        HypothesisError: naming the first hypothesis that is not satisfied.
    """
    if check:
        for name, decision in check_hypotheses(z_sub, d_sub, triangulation, mode,
                                               budget, n_max=n_max):
            if not decision.is_yes:
                _logger.info('quotient rejected: %s (%s)', name, decision.reason)
                raise HypothesisError(name, decision.witness,
                                      'hypothesis failed: {} ({})'.format(
                                          name, decision.reason))
    from .sigma import fix_sigma_triangles
    quotient = QuotientPresentation(base, z_sub, d_sub)
    quotient.sigma_table = fix_sigma_triangles(quotient, triangulation, seed)
    return quotient
