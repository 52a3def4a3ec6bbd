# coding=utf-8
"""Finite-dimensional modules given by action matrices, with kernels and cokernels.

A module is a vector space with one matrix per generator of the algebra
(the x-action of a truncated polynomial ring, or the vertex idempotents and
arrows of a quiver). Homomorphisms are matrices of shape (target dim, source dim)
that commute with every action.
"""
from __future__ import division

from ..typing import valid_name, int_positive
from ..exactla import FieldSpec, Subspace, nullspace, column_space, solve


class ModuleRep(object):
    """A finite-dimensional module given by action matrices.

    Args:
        field: The FieldSpec of the module.
        dim: Integer for the dimension of the underlying vector space.
        actions: A dictionary from generator names to square field arrays of
            shape (dim, dim) acting on column vectors.
        name: Optional text for the name of the module. (Default: None).

    Properties:
        * field
        * dim
        * actions
        * name
    """
    __slots__ = ('_field', '_dim', '_actions', '_name')

    def __init__(self, field, dim, actions, name=None):
        self._field = field
        self._dim = int_positive(dim, 'module dimension')
        self._actions = {}
        for key in sorted(actions):
            mat = field.coerce(actions[key])
            if mat.size == 0:
                mat = field.zeros((self._dim, self._dim))
            assert mat.shape == (self._dim, self._dim), 'Action "{}" must have ' \
                'shape {}. Got {}.'.format(key, (self._dim, self._dim), mat.shape)
            self._actions[key] = mat
        self._name = None if name is None else valid_name(name, 'module name')

    @classmethod
    def from_dict(cls, data, field=None):
        """Create a ModuleRep from a dictionary.

        Args:
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "type": "ModuleRep",
            "dim": 2,
            "actions": {"x": [[0, 0], [1, 0]]},
            "name": "M2",  # optional
            "field": {"kind": "prime", "p": 2}  # optional if field is given
            }

            field: An optional FieldSpec that overrides the field of the
                dictionary. (Default: None).
        """
        assert data['type'] == 'ModuleRep', \
            'Expected ModuleRep dictionary. Got {}.'.format(data['type'])
        if field is None:
            field = FieldSpec.from_dict(data.get('field', {'kind': 'prime', 'p': 2}))
        actions = {k: field.array(v) for k, v in data['actions'].items()}
        return cls(field, data['dim'], actions, data.get('name'))

    @property
    def field(self):
        return self._field

    @property
    def dim(self):
        return self._dim

    @property
    def actions(self):
        """Get a dictionary from generator names to action matrices."""
        return self._actions

    @property
    def name(self):
        return self._name

    def act(self, key):
        return self._actions[key]

    def to_dict(self):
        """Get the module as a dictionary."""
        base = {
            'type': 'ModuleRep',
            'field': self._field.to_dict(),
            'dim': self._dim,
            'actions': {k: self._field.to_json(v) for k, v in self._actions.items()}
        }
        if self._name is not None:
            base['name'] = self._name
        return base

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'ModuleRep: {} (dim {})'.format(self._name or 'unnamed', self._dim)


def flatten(mat):
    """Get the row-major coordinate vector of a matrix."""
    return mat.reshape(-1)


def unflatten(vec, rows, cols):
    return vec.reshape(rows, cols)


def _hom_equations(source, target):
    field = source.field
    m, n = source.dim, target.dim
    blocks = []
    for key, act_s in source.actions.items():
        act_t = target.act(key)
        blocks.append(field.kron(field.identity(n), act_s.T) -
                      field.kron(act_t, field.identity(m)))
    return field.vstack(blocks, n * m)


def hom_space(source, target):
    """Get the Subspace of flattened homomorphisms source -> target."""
    field = source.field
    size = source.dim * target.dim
    if size == 0:
        return Subspace.zero(field, 0)
    return nullspace(field, _hom_equations(source, target))


def hom_matrices(source, target):
    """Get a basis of Hom(source, target) as a list of matrices."""
    space = hom_space(source, target)
    return [unflatten(row, target.dim, source.dim) for row in space.basis]


def is_homomorphism(phi, source, target):
    """Check that a matrix commutes with the actions of two modules."""
    field = source.field
    if phi.shape != (target.dim, source.dim):
        return False
    for key, act_s in source.actions.items():
        lhs = field.matmul(phi, act_s)
        rhs = field.matmul(target.act(key), phi)
        if not field.equal(lhs, rhs):
            return False
    return True


def block_diagonal(field, mats):
    """Get the block diagonal matrix of a list of matrices."""
    rows = sum(m.shape[0] for m in mats)
    cols = sum(m.shape[1] for m in mats)
    out = field.zeros((rows, cols))
    r = c = 0
    for m in mats:
        out[r:r + m.shape[0], c:c + m.shape[1]] = m
        r += m.shape[0]
        c += m.shape[1]
    return out


def direct_sum(field, modules, keys=None):
    """Get the direct sum of modules with block diagonal actions.

    Args:
        field: The FieldSpec of the modules.
        modules: A list of ModuleRep with the same action names.
        keys: Optional list of action names used when the list is empty.

    Returns:
        A ModuleRep.
    """
    if modules:
        keys = list(modules[0].actions)
    keys = keys or []
    dim = sum(m.dim for m in modules)
    actions = {k: block_diagonal(field, [m.act(k) for m in modules]) for k in keys}
    return ModuleRep(field, dim, actions)


def cokernel(phi, target):
    """Get the cokernel of a homomorphism into a module.

    Args:
        phi: A homomorphism matrix with target rows.
        target: The target ModuleRep.

    Returns:
        A tuple with three elements.

        -   module: The ModuleRep target / image(phi).

        -   projection: The matrix of the quotient map target -> module.

        -   lift: A linear (not necessarily module) section module -> target
            of the projection.
    """
    field = target.field
    image = column_space(field, phi) if phi.shape[1] else \
        Subspace.zero(field, target.dim)
    proj = image.quotient_matrix()
    lift = image.lift_matrix()
    dim = proj.shape[0]
    actions = {k: field.matmul(field.matmul(proj, a), lift)
               for k, a in target.actions.items()}
    return ModuleRep(field, dim, actions), proj, lift


def kernel(phi, source):
    """Get the kernel of a homomorphism out of a module.

    Returns:
        A tuple with the kernel ModuleRep and its inclusion matrix into source.
    """
    field = source.field
    space = nullspace(field, phi) if phi.shape[0] else \
        Subspace.full(field, source.dim)
    incl = space.basis.T
    actions = {}
    for key, act in source.actions.items():
        images = field.matmul(act, incl)
        cols = [space.coordinates(images[:, c]) for c in range(images.shape[1])]
        actions[key] = field.stack(cols, space.dim).T if cols else \
            field.zeros((0, 0))
    return ModuleRep(field, space.dim, actions), incl


def extend_along(iota, phi, source_env, target_env):
    """Find a homomorphism e with e o iota = phi between given modules.

    Args:
        iota: A homomorphism A -> I.
        phi: A homomorphism A -> J.
        source_env: The ModuleRep I.
        target_env: The ModuleRep J.

    Returns:
        A matrix of a homomorphism I -> J or None if there is none.
    """
    field = source_env.field
    basis = hom_matrices(source_env, target_env)
    if not basis:
        return field.zeros((target_env.dim, source_env.dim)) \
            if field.is_zero(phi) else None
    cols = [flatten(field.matmul(b, iota)) for b in basis]
    mat = field.stack(cols, phi.size).T
    solution = solve(field, mat, flatten(phi))
    if solution is None:
        return None
    out = field.zeros((target_env.dim, source_env.dim))
    for coeff, b in zip(solution[0], basis):
        out = out + b * coeff
    return out
