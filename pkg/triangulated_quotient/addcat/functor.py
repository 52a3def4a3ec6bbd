# coding=utf-8
"""Additive functors between finite presentations, given on indecomposables."""
from ..exactla import rank
from .obj import Obj
from .mor import Mor


class AdditiveFunctorData(object):
    """An additive functor given by its values on indecomposables and hom bases.

    Args:
        on_objects: A dictionary from indecomposable names to the Obj they are
            sent to. The image may be the zero object or decomposable.
        on_homs: A dictionary from (source name, target name) tuples to 2-D
            field arrays. Each matrix sends the coordinates of Hom(X, Y) to the
            flattened coordinates of Hom(F X, F Y). Missing pairs are zero.
        name: Text for the name of the functor. (Default: T).

    Properties:
        * on_objects
        * on_homs
        * name
    """
    __slots__ = ('_on_objects', '_on_homs', '_name', '_cache')

    def __init__(self, on_objects, on_homs, name='T'):
        self._on_objects = {k: v if isinstance(v, Obj) else Obj(v)
                            for k, v in on_objects.items()}
        self._on_homs = dict(on_homs)
        self._name = str(name)
        self._cache = {}

    @classmethod
    def identity(cls, category, name='1'):
        """Get the identity functor of a CategoryPresentation."""
        field = category.field
        on_homs = {}
        for x in category.indecomposables:
            for y in category.indecomposables:
                on_homs[(x, y)] = field.identity(category.hom_dim_names(x, y))
        return cls({x: Obj((x,)) for x in category.indecomposables}, on_homs, name)

    @classmethod
    def from_dict(cls, field, data, name='T'):
        """Create an AdditiveFunctorData from a dictionary.

        Args:
            field: The FieldSpec of the hom matrices.
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "objects": {"M1": ["M3"]},  # indecomposable -> list of summand names
            "homs": {"M1|M1": [[1]]}  # rows are coordinates in Hom(F X, F Y)
            }
        """
        unknown = set(data) - {'objects', 'homs'}
        assert not unknown, 'Unknown functor keys: {}.'.format(sorted(unknown))
        on_objects = {k: Obj(v) for k, v in data.get('objects', {}).items()}
        on_homs = {}
        for key, mat in data.get('homs', {}).items():
            pair = tuple(key.split('|'))
            assert len(pair) == 2, 'Expected a hom key like "X|Y". Got "{}".'.format(key)
            on_homs[pair] = field.array(mat) if len(mat) else None
        return cls(on_objects, {k: v for k, v in on_homs.items() if v is not None},
                   name)

    @property
    def on_objects(self):
        return self._on_objects

    @property
    def on_homs(self):
        return self._on_homs

    @property
    def name(self):
        return self._name

    def image(self, name):
        """Get the Obj that an indecomposable is sent to."""
        try:
            return self._on_objects[name]
        except KeyError:
            raise ValueError('Functor {} is not defined on "{}".'.format(
                self._name, name))

    def apply_obj(self, obj):
        """Get the image of an Obj as the direct sum of the images of its summands."""
        return Obj(s for name in obj for s in self.image(name))

    def hom_matrix(self, source_cat, target_cat, x, y):
        """Get the matrix Hom(x, y) -> Hom(F x, F y) for two indecomposables."""
        rows = target_cat.hom_dim(self.image(x), self.image(y))
        cols = source_cat.hom_dim_names(x, y)
        mat = self._on_homs.get((x, y))
        if mat is None:
            return target_cat.field.zeros((rows, cols))
        assert mat.shape == (rows, cols), 'Functor {} matrix for {}|{} must have ' \
            'shape {}. Got {}.'.format(self._name, x, y, (rows, cols), mat.shape)
        return mat

    def matrix(self, source_cat, target_cat, source, target):
        """Get the linear map Hom(source, target) -> Hom(F source, F target).

        Args:
            source_cat: The CategoryPresentation the functor starts from.
            target_cat: The CategoryPresentation the functor lands in.
            source: The source Obj.
            target: The target Obj.

        Returns:
            A 2-D field array acting on flattened coordinates.
        """
        key = (id(source_cat), id(target_cat), source.summands, target.summands)
        if key in self._cache:
            return self._cache[key]
        field = target_cat.field
        src_parts = [self.image(x) for x in source]
        tgt_parts = [self.image(y) for y in target]
        f_source = Obj(s for part in src_parts for s in part)
        f_target = Obj(s for part in tgt_parts for s in part)
        big = {(j, i): (start, dim) for j, i, start, dim in
               target_cat.hom_layout(f_source, f_target)}
        src_off = _offsets(src_parts)
        tgt_off = _offsets(tgt_parts)
        mat = field.zeros((target_cat.hom_dim(f_source, f_target),
                           source_cat.hom_dim(source, target)))
        for j, i, start, dim in source_cat.hom_layout(source, target):
            if dim == 0:
                continue
            small = self.hom_matrix(source_cat, target_cat, source[i], target[j])
            layout = target_cat.hom_layout(src_parts[i], tgt_parts[j])
            for t, s, s_start, s_dim in layout:
                if s_dim == 0:
                    continue
                b_start, _ = big[(tgt_off[j] + t, src_off[i] + s)]
                mat[b_start:b_start + s_dim, start:start + dim] = \
                    small[s_start:s_start + s_dim, :]
        self._cache[key] = mat
        return mat

    def to_dict(self, field):
        """Get the functor as a dictionary."""
        return {
            'objects': {k: v.to_dict() for k, v in sorted(self._on_objects.items())},
            'homs': {'{}|{}'.format(*k): field.to_json(v)
                     for k, v in sorted(self._on_homs.items())}
        }

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'AdditiveFunctorData: {} ({} objects)'.format(
            self._name, len(self._on_objects))


def _offsets(parts):
    offsets, total = [], 0
    for part in parts:
        offsets.append(total)
        total += part.rank
    return offsets


def apply_functor(functor, mor, target_cat=None):
    """Apply an additive functor to a morphism.

    Args:
        functor: An AdditiveFunctorData.
        mor: A Mor in the source category of the functor.
        target_cat: The CategoryPresentation the functor lands in. If None,
            the functor is treated as an endofunctor of the morphism's category.

    Returns:
        A Mor F(source) -> F(target).
    """
    source_cat = mor.category
    target_cat = source_cat if target_cat is None else target_cat
    mat = functor.matrix(source_cat, target_cat, mor.source, mor.target)
    coords = target_cat.field.matmul(mat, mor.coords.reshape(-1, 1)).reshape(-1)
    return Mor(target_cat, functor.apply_obj(mor.source),
               functor.apply_obj(mor.target), coords)


def _pair_ranks(functor, pairs, source_cat, target_cat):
    target_cat = source_cat if target_cat is None else target_cat
    for x, y in pairs:
        mat = functor.matrix(source_cat, target_cat, x, y)
        yield x, y, rank(target_cat.field, mat), mat.shape


def functor_full_on(functor, pairs, source_cat, target_cat=None, failures=None):
    """Check that a functor is surjective on the hom-spaces of given object pairs.

    Args:
        functor: An AdditiveFunctorData.
        pairs: An iterable of (Obj, Obj) tuples.
        source_cat: The CategoryPresentation the functor starts from.
        target_cat: The CategoryPresentation the functor lands in. If None,
            it is the source category.
        failures: An optional list to which failing pairs are appended.

    Returns:
        True if the functor is full on every pair.
    """
    full = True
    for x, y, r, shape in _pair_ranks(functor, pairs, source_cat, target_cat):
        if r != shape[0]:
            full = False
            if failures is None:
                return False
            failures.append((x, y))
    return full


def functor_faithful_on(functor, pairs, source_cat, target_cat=None, failures=None):
    """Check that a functor is injective on the hom-spaces of given object pairs."""
    faithful = True
    for x, y, r, shape in _pair_ranks(functor, pairs, source_cat, target_cat):
        if r != shape[1]:
            faithful = False
            if failures is None:
                return False
            failures.append((x, y))
    return faithful
