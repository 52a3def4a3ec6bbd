# coding=utf-8
"""Finite k-linear Krull-Schmidt categories given by structure constants."""
from __future__ import division
import itertools
import logging

import numpy as np

from .._base import _DataBase
from ..typing import name_tuple, int_positive, int_in_range
from ..exactla import FieldSpec, ENUMERATION_LIMIT, solve, rank, search_points
from ..report import CheckResult
from .obj import Obj
from .mor import Mor
from .functor import AdditiveFunctorData, apply_functor

_logger = logging.getLogger(__name__)
MORPHISM_BUDGET = 16


class CategoryPresentation(_DataBase):
    """A finite additive category presented by hom bases and composition constants.

    Args:
        field: A FieldSpec for the base field.
        indecomposables: A list of names for the indecomposable objects.
        hom_dims: A dictionary from (X, Y) name tuples to the dimension of
            Hom(X, Y). Missing pairs have dimension 0.
        comp: A dictionary from (X, Y, Z) name tuples to 3-D field arrays c
            of shape (dim Hom(Y, Z), dim Hom(X, Y), dim Hom(X, Z)), where
            c[g][f] is the coordinate vector of the composite of basis
            morphisms g o f. Missing triples compose to zero.
        id_coords: A dictionary from names to the coordinate vector of the
            identity in Hom(X, X).
        shift: An optional AdditiveFunctorData for the shift functor T. (Default: None).
        basis_names: An optional dictionary from (X, Y) tuples to lists of
            names for the basis morphisms. (Default: None).

    Properties:
        * field
        * indecomposables
        * hom_dims
        * comp
        * id_coords
        * shift
        * basis_names
        * provenance
        * display_name
        * user_data
    """
    __slots__ = ('_field', '_indecomposables', '_hom_dims', '_comp', '_id_coords',
                 '_shift', '_basis_names', '_provenance', '_layouts', '_maps')

    def __init__(self, field, indecomposables, hom_dims, comp, id_coords,
                 shift=None, basis_names=None):
        _DataBase.__init__(self)
        assert isinstance(field, FieldSpec), \
            'Expected FieldSpec for category field. Got {}.'.format(type(field))
        self._field = field
        self._indecomposables = name_tuple(indecomposables, 'indecomposables')
        names = set(self._indecomposables)
        self._hom_dims = {}
        for (x, y), dim in hom_dims.items():
            assert x in names and y in names, \
                'Hom pair {}|{} uses an unknown indecomposable.'.format(x, y)
            dim = int_positive(dim, 'hom dimension')
            if dim:
                self._hom_dims[(x, y)] = dim
        self._comp = {}
        for (x, y, z), tensor in comp.items():
            tensor = field.coerce(tensor)
            shape = (self.hom_dim_names(y, z), self.hom_dim_names(x, y),
                     self.hom_dim_names(x, z))
            if tensor.size == 0 and 0 in shape:
                continue
            assert tensor.shape == shape, 'Composition constants for {}|{}|{} must ' \
                'have shape {}. Got {}.'.format(x, y, z, shape, tensor.shape)
            self._comp[(x, y, z)] = tensor
        self._id_coords = {}
        for x in self._indecomposables:
            dim = self.hom_dim_names(x, x)
            vec = field.coerce(id_coords[x]).reshape(-1) if x in id_coords \
                else field.zeros(dim)
            assert vec.shape[0] == dim, 'Identity of {} must have {} coordinates. ' \
                'Got {}.'.format(x, dim, vec.shape[0])
            self._id_coords[x] = vec
        self._basis_names = {}
        for pair, dim in self._hom_dims.items():
            given = (basis_names or {}).get(pair)
            self._basis_names[pair] = tuple(given) if given else \
                tuple('{}_{}_{}'.format(pair[0], pair[1], b) for b in range(dim))
        self.shift = shift
        self._provenance = None
        self._layouts = {}
        self._maps = {}

    @classmethod
    def from_dict(cls, data):
        """Create a CategoryPresentation from a dictionary.

        Args:
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "field": {"kind": "prime", "p": 2},
            "indecomposables": ["M1", "M2"],
            "hom": {"M1|M2": {"dim": 1, "basis_names": ["incl"]}},
            "compose": {"M1|M2|M1": [[[0]]]},  # c[g][f] coordinates
            "identity": {"M1": [1]},
            "shift": {"objects": {"M1": ["M1"]}, "homs": {"M1|M1": [[1]]}}
            }
        """
        field = FieldSpec.from_dict(data['field'])
        hom_dims, basis_names = {}, {}
        for key, entry in data.get('hom', {}).items():
            pair = _split_key(key, 2)
            hom_dims[pair] = entry['dim']
            if entry.get('basis_names'):
                assert len(entry['basis_names']) == entry['dim'], 'Hom {} has {} ' \
                    'basis names for dimension {}.'.format(
                        key, len(entry['basis_names']), entry['dim'])
                basis_names[pair] = entry['basis_names']
        comp = {}
        for key, tensor in data.get('compose', {}).items():
            triple = _split_key(key, 3)
            x, y, z = triple
            shape = (hom_dims.get((y, z), 0), hom_dims.get((x, y), 0),
                     hom_dims.get((x, z), 0))
            arr = field.array(tensor) if 0 not in shape else field.zeros(shape)
            comp[triple] = arr
        identity = {k: field.array(v) for k, v in data.get('identity', {}).items()}
        shift = None
        if data.get('shift') is not None:
            shift = AdditiveFunctorData.from_dict(field, data['shift'])
        new_obj = cls(field, data['indecomposables'], hom_dims, comp, identity,
                      shift, basis_names)
        new_obj._base_from_dict(data)
        return new_obj

    @property
    def field(self):
        return self._field

    @property
    def indecomposables(self):
        """Get a tuple of the names of the indecomposable objects."""
        return self._indecomposables

    @property
    def hom_dims(self):
        """Get a dictionary from (X, Y) tuples to nonzero hom dimensions."""
        return self._hom_dims

    @property
    def comp(self):
        return self._comp

    @property
    def id_coords(self):
        return self._id_coords

    @property
    def basis_names(self):
        return self._basis_names

    @property
    def shift(self):
        """Get or set an AdditiveFunctorData for the shift functor (or None)."""
        return self._shift

    @shift.setter
    def shift(self, value):
        if value is not None:
            assert isinstance(value, AdditiveFunctorData), 'Expected ' \
                'AdditiveFunctorData for shift. Got {}.'.format(type(value))
        self._shift = value

    @property
    def provenance(self):
        """Get or set an optional dictionary describing how the category was built.

        The category file stores it under the "catalog" key so that loaders can
        reattach the cone construction of catalog fixtures.
        """
        return self._provenance

    @provenance.setter
    def provenance(self, value):
        if value is not None:
            assert isinstance(value, dict), \
                'Expected dictionary for provenance. Got {}.'.format(type(value))
        self._provenance = value

    # hom-space layout

    def hom_dim_names(self, x, y):
        """Get the dimension of Hom(x, y) for two indecomposable names."""
        return self._hom_dims.get((x, y), 0)

    def hom_layout(self, source, target):
        """Get the flattened block layout of Hom(source, target).

        Returns:
            A tuple of (j, i, start, dim) entries for target summand j and source
            summand i, ordered by j and then by i.
        """
        key = (source.summands, target.summands)
        try:
            return self._layouts[key]
        except KeyError:
            layout, start = [], 0
            for j, y in enumerate(target):
                for i, x in enumerate(source):
                    dim = self.hom_dim_names(x, y)
                    layout.append((j, i, start, dim))
                    start += dim
            self._layouts[key] = tuple(layout)
            self._maps[key] = ({(j, i): (s, d) for j, i, s, d in layout}, start)
            return self._layouts[key]

    def _layout_map(self, source, target):
        self.hom_layout(source, target)
        return self._maps[(source.summands, target.summands)]

    def hom_dim(self, source, target):
        """Get the dimension of Hom(source, target) for two Obj."""
        return self._layout_map(source, target)[1]

    def comp_tensor(self, x, y, z):
        """Get the composition constants c[g][f] for Hom(y, z) x Hom(x, y)."""
        tensor = self._comp.get((x, y, z))
        if tensor is None:
            tensor = self._field.zeros((self.hom_dim_names(y, z),
                                        self.hom_dim_names(x, y),
                                        self.hom_dim_names(x, z)))
        return tensor

    # morphism calculus

    def identity(self, obj):
        return Mor.identity(self, obj)

    def zero(self, source, target):
        return Mor(self, source, target)

    def hom_basis(self, source, target):
        """Get the basis of Hom(source, target) in the flattened coordinate order."""
        dim = self.hom_dim(source, target)
        eye = self._field.identity(dim)
        return [Mor(self, source, target, eye[b]) for b in range(dim)]

    def mor_to_coords(self, mor):
        return mor.coords

    def coords_to_mor(self, source, target, coords):
        return Mor(self, source, target, coords)

    def compose(self, g, f):
        """Get the composite g o f of two morphisms.

        Args:
            g: A Mor Y -> Z.
            f: A Mor X -> Y.
        """
        if not f.target.is_identical(g.source):
            raise ValueError('Cannot compose {} -> {} after {} -> {}: object '
                             'mismatch.'.format(g.source, g.target, f.source, f.target))
        field = self._field
        x_obj, y_obj, z_obj = f.source, f.target, g.target
        f_map, _ = self._layout_map(x_obj, y_obj)
        g_map, _ = self._layout_map(y_obj, z_obj)
        out = field.zeros(self.hom_dim(x_obj, z_obj))
        for k, i, start, dr in self.hom_layout(x_obj, z_obj):
            if dr == 0:
                continue
            acc = None
            for j in range(y_obj.rank):
                gs, dg = g_map[(k, j)]
                fs, df = f_map[(j, i)]
                if dg == 0 or df == 0:
                    continue
                gb, fb = g.coords[gs:gs + dg], f.coords[fs:fs + df]
                tensor = self.comp_tensor(x_obj[i], y_obj[j], z_obj[k])
                part = (gb.reshape(1, dg) @ tensor.reshape(dg, df * dr)).reshape(df, dr)
                part = (fb.reshape(1, df) @ part).reshape(dr)
                acc = part if acc is None else acc + part
            if acc is not None:
                out[start:start + dr] = acc
        return Mor(self, x_obj, z_obj, out)

    def post_matrix(self, g, source):
        """Get the matrix of f -> g o f from Hom(source, g.source) to Hom(source, g.target)."""
        field = self._field
        y_obj, z_obj = g.source, g.target
        f_map, cols = self._layout_map(source, y_obj)
        g_map, _ = self._layout_map(y_obj, z_obj)
        mat = field.zeros((self.hom_dim(source, z_obj), cols))
        for k, i, start, dr in self.hom_layout(source, z_obj):
            if dr == 0:
                continue
            for j in range(y_obj.rank):
                gs, dg = g_map[(k, j)]
                fs, df = f_map[(j, i)]
                if dg == 0 or df == 0:
                    continue
                tensor = self.comp_tensor(source[i], y_obj[j], z_obj[k])
                gb = g.coords[gs:gs + dg].reshape(1, dg)
                block = (gb @ tensor.reshape(dg, df * dr)).reshape(df, dr).T
                mat[start:start + dr, fs:fs + df] += block
        return mat

    def pre_matrix(self, f, target):
        """Get the matrix of g -> g o f from Hom(f.target, target) to Hom(f.source, target)."""
        field = self._field
        x_obj, y_obj = f.source, f.target
        f_map, _ = self._layout_map(x_obj, y_obj)
        g_map, cols = self._layout_map(y_obj, target)
        mat = field.zeros((self.hom_dim(x_obj, target), cols))
        for k, i, start, dr in self.hom_layout(x_obj, target):
            if dr == 0:
                continue
            for j in range(y_obj.rank):
                gs, dg = g_map[(k, j)]
                fs, df = f_map[(j, i)]
                if dg == 0 or df == 0:
                    continue
                tensor = self.comp_tensor(x_obj[i], y_obj[j], target[k])
                flipped = np.transpose(tensor, (1, 0, 2)).reshape(df, dg * dr)
                fb = f.coords[fs:fs + df].reshape(1, df)
                block = (fb @ flipped).reshape(dg, dr).T
                mat[start:start + dr, gs:gs + dg] += block
        return mat

    def direct_sum(self, x_obj, y_obj):
        """Get the biproduct of two objects with its injections and projections.

        Returns:
            A tuple with five elements.

            -   obj: The Obj X + Y.

            -   i_x: The injection X -> X + Y.

            -   i_y: The injection Y -> X + Y.

            -   p_x: The projection X + Y -> X.

            -   p_y: The projection X + Y -> Y.
        """
        total = x_obj + y_obj
        ident = Mor.identity(self, total)
        nx, ny = x_obj.rank, y_obj.rank
        x_idx, y_idx = list(range(nx)), list(range(nx, nx + ny))
        all_idx = x_idx + y_idx
        i_x = ident.component(all_idx, x_idx)
        i_y = ident.component(all_idx, y_idx)
        p_x = ident.component(x_idx, all_idx)
        p_y = ident.component(y_idx, all_idx)
        return total, i_x, i_y, p_x, p_y

    # enumeration

    def objects(self, rank_bound=2):
        """Get all objects with at most rank_bound summands in canonical order."""
        rank_bound = int_positive(rank_bound, 'rank_bound')
        objs = []
        for size in range(rank_bound + 1):
            for combo in itertools.combinations_with_replacement(
                    self._indecomposables, size):
                objs.append(Obj(combo))
        return objs

    def random_mor(self, source, target, rng):
        """Get a random morphism from a numpy Generator."""
        dim = self.hom_dim(source, target)
        return Mor(self, source, target, self._field.random(dim, rng))

    def morphisms(self, source, target, budget=MORPHISM_BUDGET, seed=0):
        """Get morphisms of Hom(source, target) for exhaustive or sampled checks.

        Args:
            source: The source Obj.
            target: The target Obj.
            budget: The largest size of a hom-space that is enumerated completely.
                Larger spaces give the zero morphism, the basis and a seeded
                random sample up to the budget. (Default: 16).
            seed: Integer seed of the random sample. (Default: 0).

        Returns:
            A tuple with a list of Mor and a boolean for whether the list is the
            whole hom-space.
        """
        budget = int_in_range(budget, 1, None, 'morphism budget')
        dim = self.hom_dim(source, target)
        field = self._field
        if field.is_finite and field.order ** dim <= budget:
            points = itertools.product(range(field.order), repeat=dim)
            return [Mor(self, source, target, field.array(list(pt)))
                    for pt in points], True
        mors = [self.zero(source, target)] + self.hom_basis(source, target)
        rng = np.random.default_rng(seed)
        seen = set(m.key() for m in mors)
        for _ in range(4 * budget):
            if len(mors) >= max(budget, dim + 1):
                break
            mor = self.random_mor(source, target, rng)
            if mor.key() not in seen:
                seen.add(mor.key())
                mors.append(mor)
        return mors, False

    def is_isomorphism(self, f):
        """Check whether a morphism is invertible.

        Returns:
            A tuple with a boolean and the two-sided inverse (None if there is none).
        """
        if f.source != f.target:
            return False, None
        solution = solve(self._field, self.post_matrix(f, f.target),
                         Mor.identity(self, f.target).coords)
        if solution is None:
            return False, None
        inverse = Mor(self, f.target, f.source, solution[0])
        if self.compose(inverse, f) != Mor.identity(self, f.source):
            return False, None
        return True, inverse

    def find_isomorphisms(self, source, target, constraints=None, seed=0,
                          limit=ENUMERATION_LIMIT):
        """Iterate over the invertible solutions of a linear constraint system.

        Args:
            source: The source Obj.
            target: The target Obj.
            constraints: An optional tuple (A, b) of a 2-D array and 1-D array so
                that admissible morphisms f satisfy A f.coords = b. If None,
                every morphism is admissible. (Default: None).
            seed: Integer seed for sampled searches. (Default: 0).
            limit: The largest solution space that is enumerated completely.

        Yields:
            Distinct invertible Mor source -> target.
        """
        if source != target:
            return
        dim = self.hom_dim(source, target)
        if constraints is None:
            constraints = (self._field.zeros((0, dim)), self._field.zeros(0))
        solution = solve(self._field, constraints[0], constraints[1])
        if solution is None:
            return
        points, _ = search_points(self._field, solution[0], solution[1], seed, limit)
        seen = set()
        for point in points:
            mor = Mor(self, source, target, point)
            if mor.key() in seen:
                continue
            seen.add(mor.key())
            if self.is_isomorphism(mor)[0]:
                yield mor

    def random_automorphism(self, obj, seed=0):
        """Get a seeded automorphism of an object (the identity if none is found)."""
        for mor in self.find_isomorphisms(obj, obj, seed=seed):
            return mor
        return Mor.identity(self, obj)

    def restrict(self, names):
        """Get the full subcategory on a subset of the indecomposables.

        The shift functor is kept only when it preserves the subset.
        """
        keep = [x for x in self._indecomposables if x in set(names)]
        kept = set(keep)
        hom_dims = {k: v for k, v in self._hom_dims.items()
                    if k[0] in kept and k[1] in kept}
        comp = {k: v for k, v in self._comp.items() if set(k) <= kept}
        ids = {x: self._id_coords[x] for x in keep}
        names_map = {k: v for k, v in self._basis_names.items() if k in hom_dims}
        shift = None
        if self._shift is not None and all(
                self._shift.image(x).in_add(kept) for x in keep):
            shift = AdditiveFunctorData(
                {x: self._shift.image(x) for x in keep},
                {k: v for k, v in self._shift.on_homs.items()
                 if k[0] in kept and k[1] in kept}, self._shift.name)
        return CategoryPresentation(self._field, keep, hom_dims, comp, ids, shift,
                                    names_map)

    # validation

    def check_identities(self, raise_exception=True, detailed=False):
        """Check that identity coordinates act as two-sided identities on hom bases.

        Args:
            raise_exception: Boolean to note whether a ValueError should be raised
                if a violation is found. (Default: True).
            detailed: Boolean for whether the returned object is a detailed list of
                dicts with error info or a string with a message. (Default: False).

        Returns:
            A string with the message or a list with a dictionary if detailed is True.
        """
        result = CheckResult('identities')
        self._check_identities(result)
        return _check_output(result, raise_exception, detailed)

    def check_associativity(self, raise_exception=True, detailed=False):
        """Check associativity of composition on every triple of basis morphisms."""
        result = CheckResult('associativity')
        self._check_associativity(result)
        return _check_output(result, raise_exception, detailed)

    def check_locality(self, raise_exception=True, detailed=False,
                       limit=ENUMERATION_LIMIT):
        """Check that every endomorphism algebra of an indecomposable is local."""
        result = CheckResult('locality')
        self._check_locality(result, limit)
        return _check_output(result, raise_exception, detailed)

    def check_shift(self, raise_exception=True, detailed=False):
        """Check that the shift functor preserves identities and composition."""
        result = CheckResult('shift functor')
        self._check_shift(result)
        return _check_output(result, raise_exception, detailed)

    def check_all(self, raise_exception=True, detailed=False):
        """Run all presentation checks.

        Args:
            raise_exception: Boolean to note whether a ValueError should be raised
                if a violation is found. (Default: True).
            detailed: Boolean for whether the returned object is a detailed list of
                dicts with error info or a string with a message. (Default: False).

        Returns:
            A string with the message or a list with a dictionary if detailed is True.
        """
        return _check_output(validate_presentation(self), raise_exception, detailed)

    def _check_identities(self, result):
        field = self._field
        for x in self._indecomposables:
            for y in self._indecomposables:
                df = self.hom_dim_names(x, y)
                if df == 0:
                    continue
                result.count()
                # left identity: 1_y o f = f
                dy = self.hom_dim_names(y, y)
                tensor = self.comp_tensor(x, y, y)
                left = field.matmul(self._id_coords[y].reshape(1, dy),
                                    tensor.reshape(dy, df * df)).reshape(df, df)
                # right identity: g o 1_x = g
                dx = self.hom_dim_names(x, x)
                tensor = self.comp_tensor(x, x, y)
                flipped = np.transpose(tensor, (1, 0, 2)).reshape(dx, df * df)
                right = field.matmul(self._id_coords[x].reshape(1, dx),
                                     flipped).reshape(df, df)
                eye = field.identity(df)
                for side, mat in (('left', left), ('right', right)):
                    if not field.equal(mat, eye):
                        result.add_violation(
                            '010001', 'Identity', 'Hom', '{}|{}'.format(x, y),
                            'The {} identity fails on Hom({}, {}).'.format(side, x, y),
                            {'source': x, 'target': y, 'side': side})

    def _check_associativity(self, result):
        field = self._field
        names = self._indecomposables
        for x, y, z, w in itertools.product(names, repeat=4):
            df, dg = self.hom_dim_names(x, y), self.hom_dim_names(y, z)
            dh, dt = self.hom_dim_names(z, w), self.hom_dim_names(x, w)
            if 0 in (df, dg, dh, dt):
                continue
            result.count()
            ds, dr = self.hom_dim_names(y, w), self.hom_dim_names(x, z)
            hg = self.comp_tensor(y, z, w)          # (dh, dg, ds)
            s_f = self.comp_tensor(x, y, w)         # (ds, df, dt)
            left = field.matmul(hg.reshape(dh * dg, ds), s_f.reshape(ds, df * dt))
            gf = self.comp_tensor(x, y, z)          # (dg, df, dr)
            h_r = self.comp_tensor(x, z, w)         # (dh, dr, dt)
            right = field.matmul(
                gf.reshape(dg * df, dr),
                np.transpose(h_r, (1, 0, 2)).reshape(dr, dh * dt))
            right = np.transpose(right.reshape(dg, df, dh, dt), (2, 0, 1, 3))
            right = right.reshape(dh * dg, df * dt)
            if not field.equal(left, right):
                diff = np.argwhere(field.plain(left) != field.plain(right))[0]
                h_idx, g_idx = divmod(int(diff[0]), dg)
                f_idx = int(diff[1]) // dt
                result.add_violation(
                    '010002', 'Associativity', 'Triple',
                    '{}|{}|{}|{}'.format(x, y, z, w),
                    'Composition is not associative on the basis triple '
                    '({}, {}, {}).'.format(h_idx, g_idx, f_idx),
                    {'objects': [x, y, z, w], 'h': h_idx, 'g': g_idx, 'f': f_idx})

    def _check_locality(self, result, limit=ENUMERATION_LIMIT):
        field = self._field
        for x in self._indecomposables:
            obj = Obj((x,))
            dim = self.hom_dim(obj, obj)
            result.count()
            if dim == 0:
                result.add_violation(
                    '010003', 'Locality', 'Object', x,
                    'End({}) is zero so {} is not indecomposable.'.format(x, x),
                    {'object': x})
                continue
            if dim == 1:
                continue
            if not field.is_finite or field.order ** dim > limit:
                result.add_undecided(
                    '010004', 'Locality', 'Object', x,
                    'Locality of End({}) is undecided: too many elements.'.format(x),
                    {'object': x, 'dim': dim})
                _logger.warning('locality undecided for %s (dim %d)', x, dim)
                continue
            mults = [self.post_matrix(e, obj) for e in self.hom_basis(obj, obj)]
            for coeffs in itertools.product(range(field.order), repeat=dim):
                mat = field.zeros((dim, dim))
                for c, m in zip(coeffs, mults):
                    if c:
                        mat = mat + m * field.scalar(c)
                if rank(field, mat) == dim:
                    continue
                power = mat
                for _ in range(dim - 1):
                    power = power @ mat
                if not field.is_zero(power):
                    result.add_violation(
                        '010003', 'Locality', 'Object', x,
                        'End({}) has an element that is neither invertible nor '
                        'nilpotent.'.format(x),
                        {'object': x, 'element': list(coeffs)})
                    break

    def _check_shift(self, result):
        shift = self._shift
        if shift is None:
            result.note('no shift functor')
            return
        names = set(self._indecomposables)
        for x in self._indecomposables:
            result.count()
            if x not in shift.on_objects or not shift.image(x).in_add(names):
                result.add_violation(
                    '010007', 'FunctorObject', 'Object', x,
                    'Shift is not defined on {} inside the category.'.format(x),
                    {'object': x})
                return
        for x in self._indecomposables:
            obj = Obj((x,))
            ident = Mor.identity(self, obj)
            image = apply_functor(shift, ident)
            if image != Mor.identity(self, image.source):
                result.add_violation(
                    '010005', 'FunctorIdentity', 'Object', x,
                    'T(1_{}) is not the identity of T{}.'.format(x, x), ident)
        for x, y, z in itertools.product(self._indecomposables, repeat=3):
            ox, oy, oz = Obj((x,)), Obj((y,)), Obj((z,))
            if not self.hom_dim(ox, oy) or not self.hom_dim(oy, oz):
                continue
            for g in self.hom_basis(oy, oz):
                for f in self.hom_basis(ox, oy):
                    result.count()
                    lhs = apply_functor(shift, self.compose(g, f))
                    rhs = self.compose(apply_functor(shift, g), apply_functor(shift, f))
                    if lhs != rhs:
                        result.add_violation(
                            '010006', 'FunctorComposition', 'Pair',
                            '{}|{}|{}'.format(x, y, z),
                            'T(g o f) differs from T(g) o T(f).', {'g': g, 'f': f})

    def to_dict(self):
        """Get the presentation as a dictionary in the category file layout."""
        field = self._field
        base = {
            'format': 1,
            'field': field.to_dict(),
            'indecomposables': list(self._indecomposables),
            'hom': {},
            'compose': {},
            'identity': {}
        }
        for x in self._indecomposables:
            for y in self._indecomposables:
                dim = self.hom_dim_names(x, y)
                if dim:
                    base['hom']['{}|{}'.format(x, y)] = {
                        'dim': dim, 'basis_names': list(self._basis_names[(x, y)])}
        for x, y, z in itertools.product(self._indecomposables, repeat=3):
            tensor = self._comp.get((x, y, z))
            if tensor is not None and tensor.size and not field.is_zero(tensor):
                base['compose']['{}|{}|{}'.format(x, y, z)] = field.to_json(tensor)
        for x in self._indecomposables:
            base['identity'][x] = field.to_json(self._id_coords[x])
        if self._shift is not None:
            base['shift'] = self._shift.to_dict(field)
        if self._provenance is not None:
            base['catalog'] = dict(self._provenance)
        return self._base_to_dict(base)

    def __copy__(self):
        new_obj = CategoryPresentation(
            self._field, self._indecomposables, self._hom_dims, self._comp,
            self._id_coords, self._shift, self._basis_names)
        new_obj._provenance = None if self._provenance is None \
            else dict(self._provenance)
        return self._duplicate_base(new_obj)

    def __repr__(self):
        return 'CategoryPresentation: {} [{} indecomposables over {}]'.format(
            self.display_name or 'unnamed', len(self._indecomposables), self._field)


def _split_key(key, count):
    parts = tuple(key.split('|'))
    assert len(parts) == count, 'Expected a key with {} names separated by "|". ' \
        'Got "{}".'.format(count, key)
    return parts


def _check_output(result, raise_exception, detailed):
    detailed = False if raise_exception else detailed
    errors = result.violations
    if detailed:
        return errors
    msg = '\n'.join(e['message'] for e in errors)
    if msg and raise_exception:
        raise ValueError(msg)
    return msg


def validate_presentation(category, limit=ENUMERATION_LIMIT):
    """Check every structural invariant of a CategoryPresentation.

    Args:
        category: The CategoryPresentation to validate.
        limit: The largest endomorphism algebra that is enumerated for the
            locality test.

    Returns:
        A CheckResult named presentation. It passes if and only if identities,
        associativity, locality and the shift functor laws all hold.
    """
    result = CheckResult('presentation')
    category._check_identities(result)
    category._check_associativity(result)
    category._check_locality(result, limit)
    category._check_shift(result)
    _logger.info('presentation checked: %s (%d cases)', result.status, result.checked)
    return result
