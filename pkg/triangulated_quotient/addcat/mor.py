# coding=utf-8
"""Morphisms between formal direct sums, stored as flattened block matrices."""
from .obj import Obj


class Mor(object):
    """A morphism between two objects of a CategoryPresentation.

    The coordinates are the concatenation of the block coordinate vectors,
    ordered by target summand index, then source summand index, then the
    basis index of the block's hom-space between indecomposables.

    Args:
        category: The CategoryPresentation that the morphism belongs to.
        source: The source Obj.
        target: The target Obj.
        coords: An optional 1-D array or list of field elements with the
            flattened coordinates. If None, the morphism is zero. (Default: None).

    Properties:
        * category
        * source
        * target
        * coords
        * blocks
        * is_zero
    """
    __slots__ = ('_category', '_source', '_target', '_coords')

    def __init__(self, category, source, target, coords=None):
        self._category = category
        self._source = source if isinstance(source, Obj) else Obj(source)
        self._target = target if isinstance(target, Obj) else Obj(target)
        dim = category.hom_dim(self._source, self._target)
        if coords is None:
            self._coords = category.field.zeros(dim)
        else:
            self._coords = category.field.coerce(coords).reshape(-1)
            assert self._coords.shape[0] == dim, 'Expected {} coordinates for a ' \
                'morphism {} -> {}. Got {}.'.format(
                    dim, self._source, self._target, self._coords.shape[0])

    @classmethod
    def zero(cls, category, source, target):
        return cls(category, source, target)

    @classmethod
    def identity(cls, category, obj):
        """Get the identity morphism of an object."""
        obj = obj if isinstance(obj, Obj) else Obj(obj)
        coords = category.field.zeros(category.hom_dim(obj, obj))
        for j, i, start, dim in category.hom_layout(obj, obj):
            if i == j and dim:
                coords[start:start + dim] = category.id_coords[obj[i]]
        return cls(category, obj, obj, coords)

    @classmethod
    def from_blocks(cls, category, source, target, blocks):
        """Create a morphism from a nested list of block coordinate vectors.

        Args:
            category: The CategoryPresentation of the morphism.
            source: The source Obj.
            target: The target Obj.
            blocks: A nested list where blocks[j][i] is the coordinate vector
                of the component from source summand i to target summand j.
        """
        source = source if isinstance(source, Obj) else Obj(source)
        target = target if isinstance(target, Obj) else Obj(target)
        assert len(blocks) == target.rank, 'Expected {} block rows. Got {}.'.format(
            target.rank, len(blocks))
        field = category.field
        coords = field.zeros(category.hom_dim(source, target))
        for j, i, start, dim in category.hom_layout(source, target):
            row = blocks[j]
            assert len(row) == source.rank, 'Expected {} blocks in row {}. ' \
                'Got {}.'.format(source.rank, j, len(row))
            vec = field.coerce(row[i]).reshape(-1) if dim else field.zeros(0)
            assert vec.shape[0] == dim, 'Block ({}, {}) of {} -> {} must have {} ' \
                'coordinates. Got {}.'.format(j, i, source, target, dim, vec.shape[0])
            if dim:
                coords[start:start + dim] = vec
        return cls(category, source, target, coords)

    @classmethod
    def from_dict(cls, category, data):
        """Create a morphism from a dictionary.

        Args:
            category: The CategoryPresentation of the morphism.
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "source": ["M1"],  # summand names of the source
            "target": ["M2"],  # summand names of the target
            "blocks": [[[1]]]  # blocks[j][i] coordinate vectors
            }
        """
        return cls.from_blocks(category, Obj(data['source']), Obj(data['target']),
                               data['blocks'])

    @property
    def category(self):
        return self._category

    @property
    def source(self):
        return self._source

    @property
    def target(self):
        return self._target

    @property
    def coords(self):
        """Get a 1-D array with the flattened coordinates."""
        return self._coords

    @property
    def blocks(self):
        """Get a nested list where blocks[j][i] is a 1-D coordinate array."""
        field = self._category.field
        blocks = [[None] * self._source.rank for _ in range(self._target.rank)]
        for j, i, start, dim in self._category.hom_layout(self._source, self._target):
            blocks[j][i] = self._coords[start:start + dim] if dim else field.zeros(0)
        return blocks

    @property
    def is_zero(self):
        return self._category.field.is_zero(self._coords)

    def block(self, j, i):
        """Get the coordinate vector of the component from summand i to summand j."""
        for bj, bi, start, dim in self._category.hom_layout(self._source, self._target):
            if bj == j and bi == i:
                return self._coords[start:start + dim]
        raise IndexError('Block ({}, {}) is out of range for {} -> {}.'.format(
            j, i, self._source, self._target))

    def compose(self, other):
        """Get the composite self o other."""
        return self._category.compose(self, other)

    def component(self, target_indices, source_indices):
        """Get the component between chosen summands of the target and source.

        Args:
            target_indices: A list of summand indices of the target.
            source_indices: A list of summand indices of the source.
        """
        blocks = self.blocks
        new_blocks = [[blocks[j][i] for i in source_indices] for j in target_indices]
        return Mor.from_blocks(
            self._category, Obj(self._source[i] for i in source_indices),
            Obj(self._target[j] for j in target_indices), new_blocks)

    def scale(self, factor):
        """Get the morphism multiplied by a field element."""
        scalar = self._category.field.scalar(factor)
        return Mor(self._category, self._source, self._target, self._coords * scalar)

    def same_shape(self, other):
        return self._source.is_identical(other._source) and \
            self._target.is_identical(other._target)

    def _check_shape(self, other):
        if not self.same_shape(other):
            raise ValueError('Morphisms {} -> {} and {} -> {} cannot be added.'.format(
                self._source, self._target, other._source, other._target))

    def to_dict(self):
        """Get the morphism as a dictionary."""
        field = self._category.field
        return {
            'source': self._source.to_dict(),
            'target': self._target.to_dict(),
            'blocks': [[field.to_json(b) for b in row] for row in self.blocks]
        }

    def key(self):
        """Get a hashable key that identifies the morphism exactly."""
        return (self._source.summands, self._target.summands,
                self._category.field.key(self._coords))

    def __add__(self, other):
        self._check_shape(other)
        return Mor(self._category, self._source, self._target,
                   self._coords + other._coords)

    def __sub__(self, other):
        self._check_shape(other)
        return Mor(self._category, self._source, self._target,
                   self._coords - other._coords)

    def __neg__(self):
        return Mor(self._category, self._source, self._target, -self._coords)

    def __eq__(self, other):
        return isinstance(other, Mor) and self.same_shape(other) and \
            self._category.field.equal(self._coords, other._coords)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key())

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'Mor: {} -> {} {}'.format(
            self._source, self._target,
            self._category.field.to_json(self._coords))


def column(category, source, morphisms):
    """Get the morphism into a direct sum whose components are the given morphisms.

    Args:
        category: The CategoryPresentation of the morphisms.
        source: The common source Obj of the morphisms.
        morphisms: A list of Mor with the same source.
    """
    target = Obj(s for m in morphisms for s in m.target)
    blocks = []
    for m in morphisms:
        assert m.source.is_identical(source), 'Expected source {}. Got {}.'.format(
            source, m.source)
        blocks.extend(m.blocks)
    return Mor.from_blocks(category, source, target, blocks)


def row(category, target, morphisms):
    """Get the morphism out of a direct sum whose components are the given morphisms."""
    source = Obj(s for m in morphisms for s in m.source)
    blocks = [[] for _ in range(target.rank)]
    for m in morphisms:
        assert m.target.is_identical(target), 'Expected target {}. Got {}.'.format(
            target, m.target)
        for j, brow in enumerate(m.blocks):
            blocks[j].extend(brow)
    return Mor.from_blocks(category, source, target, blocks)


def diagonal(category, morphisms):
    """Get the direct sum of morphisms as a block diagonal morphism."""
    field = category.field
    source = Obj(s for m in morphisms for s in m.source)
    target = Obj(s for m in morphisms for s in m.target)
    blocks = [[None] * source.rank for _ in range(target.rank)]
    t_off = s_off = 0
    for m in morphisms:
        for j in range(target.rank):
            for i in range(source.rank):
                inside = t_off <= j < t_off + m.target.rank and \
                    s_off <= i < s_off + m.source.rank
                if inside:
                    blocks[j][i] = m.blocks[j - t_off][i - s_off]
                elif blocks[j][i] is None:
                    blocks[j][i] = field.zeros(
                        category.hom_dim_names(source[i], target[j]))
        t_off += m.target.rank
        s_off += m.source.rank
    return Mor.from_blocks(category, source, target, blocks)


def permutation_isomorphism(category, source, target):
    """Get the canonical isomorphism between objects with the same summands.

    The i-th occurrence of a name in the source is sent to the i-th occurrence
    of the same name in the target.
    """
    assert source == target, 'Objects {} and {} have different summands.'.format(
        source, target)
    field = category.field
    positions = {}
    for j, name in enumerate(target):
        positions.setdefault(name, []).append(j)
    used = {name: 0 for name in positions}
    match = {}
    for i, name in enumerate(source):
        match[i] = positions[name][used[name]]
        used[name] += 1
    blocks = []
    for j in range(target.rank):
        brow = []
        for i in range(source.rank):
            if match[i] == j:
                brow.append(category.id_coords[source[i]])
            else:
                brow.append(field.zeros(category.hom_dim_names(source[i], target[j])))
        blocks.append(brow)
    return Mor.from_blocks(category, source, target, blocks)
