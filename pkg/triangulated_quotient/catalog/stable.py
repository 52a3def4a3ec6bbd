# coding=utf-8
"""Stable module categories modulo maps through injectives, with standard triangles."""
from __future__ import division
import itertools
import logging

from ..exactla import Subspace, solve
from ..addcat.obj import Obj
from ..addcat.mor import Mor
from ..addcat.functor import AdditiveFunctorData
from ..addcat.presentation import CategoryPresentation
from ..rtstruct.triangle import Triangle
from .module import hom_matrices, hom_space, flatten, unflatten, block_diagonal, \
    direct_sum, cokernel, extend_along

_logger = logging.getLogger(__name__)


class StableModuleCategory(object):
    """The stable category of a module category with enough injectives.

    Morphisms are module homomorphisms modulo those that factor through an
    injective module. A map out of X factors through an injective exactly when
    it factors through the injective envelope of X, which is how the ideal is
    computed. The shift is the cosyzygy and the distinguished triangles are
    the standard triangles built from pushouts along injective envelopes.

    Args:
        field: The FieldSpec of the modules.
        representatives: A list of (name, ModuleRep) tuples for the
            non-injective indecomposable modules, one per isomorphism class.
        envelope: A function from a name to a tuple (I, iota) with the
            injective envelope ModuleRep and the inclusion matrix.
        decompose: A function from a ModuleRep to a list of tuples
            (name, inclusion, projection), one per indecomposable summand, where
            name is None for injective summands. Inclusions and projections are
            homomorphisms that split the module into the summands.
        action_keys: A list of the action names shared by all modules.

    Properties:
        * field
        * names
        * presentation
    """
    __slots__ = ('_field', '_reps', '_names', '_envelope', '_decompose',
                 '_keys', '_homs', '_cosyzygy', '_presentation', '_envelopes')

    def __init__(self, field, representatives, envelope, decompose, action_keys):
        self._field = field
        self._names = tuple(name for name, _ in representatives)
        self._reps = dict(representatives)
        self._envelope = envelope
        self._decompose = decompose
        self._keys = list(action_keys)
        self._envelopes = {x: envelope(x) for x in self._names}
        self._homs = {}
        for x, y in itertools.product(self._names, repeat=2):
            self._homs[(x, y)] = self._stable_hom(x, y)
        self._presentation = self._build_presentation()
        self._cosyzygy = {x: self._cosyzygy_data(x) for x in self._names}
        self._presentation.shift = self._build_shift()
        _logger.info('stable category built on %s', ', '.join(self._names))

    @property
    def field(self):
        return self._field

    @property
    def names(self):
        return self._names

    @property
    def presentation(self):
        """Get the CategoryPresentation of the stable category."""
        return self._presentation

    def module(self, name):
        return self._reps[name]

    def object_module(self, obj):
        """Get the direct sum ModuleRep of the summands of an Obj."""
        return direct_sum(self._field, [self._reps[x] for x in obj], self._keys)

    def _stable_hom(self, x, y):
        """Get the ideal of injective-factoring maps and stable representatives."""
        field = self._field
        mx, my = self._reps[x], self._reps[y]
        space = hom_space(mx, my)
        inj, iota = self._envelopes[x]
        through = [flatten(field.matmul(b, iota)) for b in hom_matrices(inj, my)]
        ideal = Subspace(field, space.ambient_dim, through)
        chosen, _ = ideal.extend_basis(list(space.basis))
        reps = [space.basis[k] for k in chosen]
        solver = field.vstack([ideal.basis] + [r.reshape(1, -1) for r in reps],
                              space.ambient_dim)
        return {'ideal': ideal, 'reps': reps, 'solver': solver,
                'shape': (my.dim, mx.dim)}

    def stable_coords(self, x, y, phi):
        """Get the stable coordinates of a homomorphism between representatives."""
        data = self._homs[(x, y)]
        if not data['reps']:
            return self._field.zeros(0)
        solution = solve(self._field, data['solver'].T, flatten(phi))
        if solution is None:
            raise ValueError('Matrix is not a homomorphism {} -> {}.'.format(x, y))
        return solution[0][data['ideal'].dim:]

    def representative(self, x, y, coords):
        """Get a homomorphism matrix representing stable coordinates."""
        data = self._homs[(x, y)]
        out = self._field.zeros(data['shape'])
        for coeff, rep in zip(coords, data['reps']):
            out = out + unflatten(rep, *data['shape']) * coeff
        return out

    def _build_presentation(self):
        field = self._field
        hom_dims, comp, ids = {}, {}, {}
        for (x, y), data in self._homs.items():
            hom_dims[(x, y)] = len(data['reps'])
        for x, y, z in itertools.product(self._names, repeat=3):
            d_f, d_g, d_r = hom_dims[(x, y)], hom_dims[(y, z)], hom_dims[(x, z)]
            if not (d_f and d_g and d_r):
                continue
            tensor = field.zeros((d_g, d_f, d_r))
            f_shape, g_shape = self._homs[(x, y)]['shape'], self._homs[(y, z)]['shape']
            for gi, g in enumerate(self._homs[(y, z)]['reps']):
                for fi, f in enumerate(self._homs[(x, y)]['reps']):
                    prod = field.matmul(unflatten(g, *g_shape), unflatten(f, *f_shape))
                    tensor[gi, fi] = self.stable_coords(x, z, prod)
            comp[(x, y, z)] = tensor
        for x in self._names:
            ids[x] = self.stable_coords(x, x, field.identity(self._reps[x].dim))
        return CategoryPresentation(field, self._names, hom_dims, comp, ids)

    def _named_part(self, module):
        """Split a module into its non-injective summands in category order.

        Returns:
            A tuple with the Obj of named summands, the projection matrix onto
            their direct sum and the inclusion matrix of that direct sum.
        """
        field = self._field
        parts = [d for d in self._decompose(module) if d[0] is not None]
        order = {x: k for k, x in enumerate(self._names)}
        parts.sort(key=lambda d: order[d[0]])
        obj = Obj(d[0] for d in parts)
        proj = field.vstack([d[2] for d in parts], module.dim)
        incl = field.hstack([d[1] for d in parts], module.dim)
        return obj, proj, incl

    def _cosyzygy_data(self, x):
        """Get T(x) with the quotient map I(x) -> T(x) and a linear lift back."""
        inj, iota = self._envelopes[x]
        cok, proj, lift = cokernel(iota, inj)
        obj, n_proj, n_incl = self._named_part(cok)
        field = self._field
        return obj, field.matmul(n_proj, proj), field.matmul(lift, n_incl)

    def _envelope_of(self, obj):
        """Get the injective envelope of an Obj as a module and inclusion."""
        field = self._field
        parts = [self._envelopes[x] for x in obj]
        inj = direct_sum(field, [p[0] for p in parts], self._keys)
        return inj, block_diagonal(field, [p[1] for p in parts])

    def to_module_map(self, mor):
        """Get a homomorphism matrix representing a stable morphism."""
        field = self._field
        src, tgt = mor.source, mor.target
        s_off, t_off = _offsets(self, src), _offsets(self, tgt)
        out = field.zeros((t_off[-1], s_off[-1]))
        for j, i, start, dim in mor.category.hom_layout(src, tgt):
            if not dim:
                continue
            block = self.representative(src[i], tgt[j], mor.coords[start:start + dim])
            out[t_off[j]:t_off[j + 1], s_off[i]:s_off[i + 1]] = block
        return out

    def from_module_map(self, source, target, matrix, category=None):
        """Get the stable morphism of a homomorphism between sums of representatives."""
        category = self._presentation if category is None else category
        field = self._field
        s_off, t_off = _offsets(self, source), _offsets(self, target)
        coords = field.zeros(category.hom_dim(source, target))
        for j, i, start, dim in category.hom_layout(source, target):
            if not dim:
                continue
            block = matrix[t_off[j]:t_off[j + 1], s_off[i]:s_off[i + 1]]
            coords[start:start + dim] = self.stable_coords(source[i], target[j], block)
        return Mor(category, source, target, coords)

    def _shift_matrix(self, x, y):
        """Get the matrix of T on Hom(x, y) in the layout of Hom(Tx, Ty)."""
        field = self._field
        t_x, pi_x, lift_x = self._cosyzygy[x]
        t_y, pi_y, _ = self._cosyzygy[y]
        inj_x, iota_x = self._envelopes[x]
        inj_y, iota_y = self._envelopes[y]
        cols = []
        shape = self._homs[(x, y)]['shape']
        for rep in self._homs[(x, y)]['reps']:
            phi = unflatten(rep, *shape)
            ext = extend_along(iota_x, field.matmul(iota_y, phi), inj_x, inj_y)
            if ext is None:
                raise ValueError('Homomorphism {} -> {} does not extend to the '
                                 'injective envelopes.'.format(x, y))
            t_phi = field.matmul(field.matmul(pi_y, ext), lift_x)
            cols.append(self.from_module_map(t_x, t_y, t_phi).coords)
        rows = self._presentation.hom_dim(t_x, t_y)
        return field.stack(cols, rows).T if cols else field.zeros((rows, 0))

    def _build_shift(self):
        on_objects = {x: self._cosyzygy[x][0] for x in self._names}
        on_homs = {}
        for x, y in itertools.product(self._names, repeat=2):
            if self._presentation.hom_dim_names(x, y):
                on_homs[(x, y)] = self._shift_matrix(x, y)
        return AdditiveFunctorData(on_objects, on_homs)

    def standard_triangle(self, f, category=None):
        """Get the standard triangle A -> B -> C -> TA on a stable morphism.

        C is the pushout of f along the injective envelope A -> I(A), computed
        as the cokernel of (f, -iota): A -> B + I(A). The connecting morphism
        sends the class of (b, i) to the class of i in T(A).

        Args:
            f: A Mor A -> B of the stable category (or of a category with the
                same presentation).
            category: Optional CategoryPresentation in which the triangle is
                returned. If None, the category of f.

        Returns:
            A Triangle whose first morphism is f.
        """
        category = f.category if category is None else category
        field = self._field
        a_obj, b_obj = f.source, f.target
        a_mod, b_mod = self.object_module(a_obj), self.object_module(b_obj)
        inj, iota = self._envelope_of(a_obj)
        phi = self.to_module_map(f)
        pushout = direct_sum(field, [b_mod, inj], self._keys)
        cok, proj, lift = cokernel(field.vstack([phi, -iota], a_mod.dim), pushout)
        c_obj, n_proj, n_incl = self._named_part(cok)
        nb = b_mod.dim
        g_mat = field.matmul(field.matmul(n_proj, proj), field.identity(pushout.dim)[:, :nb])
        ta_obj = category.shift.apply_obj(a_obj)
        pi_a = block_diagonal(field, [self._cosyzygy[x][1] for x in a_obj])
        i_part = field.matmul(lift, n_incl)[nb:, :]
        h_mat = field.matmul(pi_a, i_part)
        g = self.from_module_map(b_obj, c_obj, g_mat, category)
        h = self.from_module_map(c_obj, ta_obj, h_mat, category)
        return Triangle(Mor(category, a_obj, b_obj, f.coords), g, h)

    def cone_builder(self, category=None):
        """Get a function from morphisms to standard triangles in a category."""
        def _build(f):
            return self.standard_triangle(f, category)
        return _build

    def basic_triangles(self):
        """Get the standard triangles on the basis morphisms between indecomposables."""
        cat = self._presentation
        tris = []
        for x, y in itertools.product(self._names, repeat=2):
            for mor in cat.hom_basis(Obj((x,)), Obj((y,))):
                tris.append(self.standard_triangle(mor))
        return tris

    def __repr__(self):
        return 'StableModuleCategory: {}'.format(', '.join(self._names))


def _offsets(stable, obj):
    offsets = [0]
    for x in obj:
        offsets.append(offsets[-1] + stable.module(x).dim)
    return offsets
