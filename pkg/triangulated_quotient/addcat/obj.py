# coding=utf-8
"""Objects of a Krull-Schmidt category as formal direct sums of indecomposables."""
import collections

from ..typing import valid_name


class Obj(object):
    """A formal direct sum of named indecomposable objects.

    The order of the summands fixes the block layout of morphisms into and
    out of the object but equality of objects ignores it.

    Args:
        summands: An iterable of indecomposable names. An empty iterable is the
            zero object. (Default: ()).

    Properties:
        * summands
        * rank
        * is_zero
        * multiset
    """
    __slots__ = ('_summands',)

    def __init__(self, summands=()):
        if isinstance(summands, str):
            summands = (summands,)
        self._summands = tuple(valid_name(s, 'summand') for s in summands)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def from_dict(cls, data):
        """Create an Obj from a list of indecomposable names."""
        if isinstance(data, dict):
            data = data['summands']
        return cls(data)

    @property
    def summands(self):
        """Get a tuple of the indecomposable names in block order."""
        return self._summands

    @property
    def rank(self):
        """Get the total multiplicity of indecomposable summands."""
        return len(self._summands)

    @property
    def is_zero(self):
        return len(self._summands) == 0

    @property
    def multiset(self):
        """Get a sorted tuple of (name, multiplicity) pairs."""
        return tuple(sorted(collections.Counter(self._summands).items()))

    def sorted(self, order=None):
        """Get a copy of this object with summands sorted.

        Args:
            order: An optional sequence of names giving the sort order. If None,
                names are sorted alphabetically.
        """
        if order is None:
            return Obj(sorted(self._summands))
        rank = {name: i for i, name in enumerate(order)}
        return Obj(sorted(self._summands, key=lambda s: (rank.get(s, len(rank)), s)))

    def is_identical(self, other):
        """Check whether another Obj has the same summands in the same order."""
        return isinstance(other, Obj) and self._summands == other._summands

    def in_add(self, names):
        """Check whether every summand belongs to a collection of names."""
        names = set(names)
        return all(s in names for s in self._summands)

    def without(self, names):
        """Get the Obj with every summand in names removed, with the kept indices."""
        names = set(names)
        kept = [i for i, s in enumerate(self._summands) if s not in names]
        return Obj(self._summands[i] for i in kept), kept

    def to_dict(self):
        """Get the object as a list of summand names."""
        return list(self._summands)

    def __add__(self, other):
        return Obj(self._summands + other._summands)

    def __len__(self):
        return len(self._summands)

    def __getitem__(self, key):
        return self._summands[key]

    def __iter__(self):
        return iter(self._summands)

    def __eq__(self, other):
        return isinstance(other, Obj) and self.multiset == other.multiset

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.multiset)

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        if not self._summands:
            return '0'
        return '+'.join(self._summands)
