# coding=utf-8
"""Category files: a presentation, its triangles and named subcategories in one JSON."""
from __future__ import division
import json
import logging
import os

from ._base import _DataBase
from .futil import write_atomic
from .addcat.presentation import CategoryPresentation
from .rtstruct.triangulation import Triangulation
from .approx import SubcatSpec

_logger = logging.getLogger(__name__)
FORMAT_VERSION = 1
TOP_KEYS = ('format', 'field', 'indecomposables', 'hom', 'compose', 'identity',
            'shift', 'triangles', 'subcats', 'catalog', 'quotient',
            'display_name', 'user_data')
HOM_KEYS = ('dim', 'basis_names')
SHIFT_KEYS = ('objects', 'homs')
TRIANGLE_KEYS = ('A', 'B', 'C', 'f', 'g', 'h')


class CategoryFileError(ValueError):
    """A category file that cannot be read.

    Args:
        message: Text describing the problem.
        line: Optional line number where JSON decoding failed.
        column: Optional column number where JSON decoding failed.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = '{} (line {}, column {})'.format(message, line, column)
        ValueError.__init__(self, message)


def _reject_unknown(data, allowed, where):
    if not isinstance(data, dict):
        raise CategoryFileError('Expected an object for {}. Got {}.'.format(
            where, type(data).__name__))
    unknown = sorted(set(data) - set(allowed))
    if unknown:
        raise CategoryFileError('Unknown keys in {}: {}.'.format(
            where, ', '.join(unknown)))


def check_keys(data):
    """Check that a category file dictionary only uses known keys.

    Raises:
        CategoryFileError: naming the first unknown key or the unsupported format.
    """
    _reject_unknown(data, TOP_KEYS, 'the category file')
    version = data.get('format', FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise CategoryFileError('Unsupported category file format {}. Expected {}.'
                                .format(version, FORMAT_VERSION))
    for key, entry in data.get('hom', {}).items():
        _reject_unknown(entry, HOM_KEYS, 'hom "{}"'.format(key))
    if data.get('shift') is not None:
        _reject_unknown(data['shift'], SHIFT_KEYS, 'shift')
    for i, tri in enumerate(data.get('triangles', [])):
        _reject_unknown(tri, TRIANGLE_KEYS, 'triangle {}'.format(i))


class CategoryFile(_DataBase):
    """A CategoryPresentation with its Triangulation and named subcategories.

    Args:
        category: A CategoryPresentation.
        triangulation: An optional Triangulation of the category. (Default: None).
        subcats: An optional dictionary from names to SubcatSpec. (Default: None).
        quotient: An optional quotient sidecar dictionary. (Default: None).

    Properties:
        * category
        * triangulation
        * subcats
        * quotient
        * display_name
        * user_data
    """
    __slots__ = ('_category', '_triangulation', '_subcats', '_quotient')

    def __init__(self, category, triangulation=None, subcats=None, quotient=None):
        _DataBase.__init__(self)
        assert isinstance(category, CategoryPresentation), 'Expected ' \
            'CategoryPresentation for category file. Got {}.'.format(type(category))
        if triangulation is not None:
            assert triangulation.category is category, \
                'Triangulation belongs to another category.'
        self._category = category
        self._triangulation = triangulation
        self._subcats = dict(subcats) if subcats else {}
        self._quotient = quotient

    @classmethod
    def from_dict(cls, data, rank_bound=2, seed=0):
        """Create a CategoryFile from a dictionary.

        Args:
            data: A python dictionary in the category file format with the keys
                of CategoryPresentation.from_dict plus the following optional ones

        .. code-block:: python

            {
            "format": 1,
            "triangles": [{"A": ["M1"], "B": ["M2"], "C": ["M1"],
                           "f": [[[1]]], "g": [[[1]]], "h": [[[1]]]}],
            "subcats": {"Z": ["M1", "M2", "M3"], "D": ["M2"]},
            "catalog": {"kind": "nakayama", "n": 4, "p": 2},
            "quotient": {"type": "QuotientPresentation", ...}
            }

            rank_bound: Integer for the rank bound of the Triangulation. (Default: 2).
            seed: Integer seed of the Triangulation. (Default: 0).
        """
        from .catalog import catalog_cone_builder
        check_keys(data)
        try:
            category = CategoryPresentation.from_dict(data)
            if data.get('catalog') is not None:
                category.provenance = data['catalog']
            triangulation = None
            if 'triangles' in data or category.provenance:
                if category.shift is None:
                    raise CategoryFileError('Triangles need a "shift" entry.')
                builder = catalog_cone_builder(category)
                triangulation = Triangulation.from_dict(
                    category, data.get('triangles', []), rank_bound, builder, seed)
            subcats = {name: SubcatSpec(category, members)
                       for name, members in data.get('subcats', {}).items()}
        except CategoryFileError:
            raise
        except (AssertionError, KeyError, TypeError, ValueError) as e:
            raise CategoryFileError('Invalid category file: {}'.format(
                e.args[0] if e.args else repr(e)))
        new_obj = cls(category, triangulation, subcats, data.get('quotient'))
        new_obj._base_from_dict(data)
        return new_obj

    @classmethod
    def from_text(cls, text, rank_bound=2, seed=0):
        """Create a CategoryFile from JSON text."""
        try:
            data = json.loads(text)
        except ValueError as e:
            raise CategoryFileError('Malformed JSON: {}'.format(getattr(e, 'msg', e)),
                                    getattr(e, 'lineno', None), getattr(e, 'colno', None))
        return cls.from_dict(data, rank_bound, seed)

    @classmethod
    def from_file(cls, file_path, rank_bound=2, seed=0):
        """Initialize a CategoryFile from a JSON file.

        Args:
            file_path: Path to a category JSON file.
            rank_bound: Integer for the rank bound of the Triangulation. (Default: 2).
            seed: Integer seed of the Triangulation. (Default: 0).
        """
        if not os.path.isfile(file_path):
            raise CategoryFileError('Failed to find {}'.format(file_path))
        with open(file_path, encoding='utf-8') as inf:
            text = inf.read()
        _logger.debug('reading category file %s', file_path)
        return cls.from_text(text, rank_bound, seed)

    @property
    def category(self):
        return self._category

    @property
    def triangulation(self):
        """Get the Triangulation or None if the file has no triangles."""
        return self._triangulation

    @property
    def subcats(self):
        """Get a dictionary from names to SubcatSpec."""
        return self._subcats

    @property
    def quotient(self):
        """Get the quotient sidecar dictionary or None."""
        return self._quotient

    def subcat(self, text):
        """Get a SubcatSpec from a stored name, "all", "none" or comma-separated names.

        Args:
            text: Text for the subcategory. "all" means every indecomposable,
                "none" or an empty string means the zero subcategory.
        """
        text = (text or '').strip()
        if text in self._subcats:
            return self._subcats[text]
        if text.lower() == 'all':
            return SubcatSpec.all(self._category)
        if text.lower() in ('', 'none'):
            return SubcatSpec.empty(self._category)
        names = [n.strip() for n in text.split(',') if n.strip()]
        unknown = [n for n in names if n not in self._category.indecomposables]
        if unknown:
            raise ValueError('Unknown indecomposables {}. Choose from {}.'.format(
                unknown, list(self._category.indecomposables)))
        return SubcatSpec(self._category, names)

    def to_dict(self):
        """Get the category file as a dictionary."""
        base = self._category.to_dict()
        if self._triangulation is not None:
            base['triangles'] = self._triangulation.to_dict()
        if self._subcats:
            base['subcats'] = {k: v.to_dict() for k, v in sorted(self._subcats.items())}
        if self._quotient is not None:
            base['quotient'] = self._quotient
        return self._base_to_dict(base)

    def to_text(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent) + '\n'

    def to_json(self, name, folder, indent=2):
        """Write the CategoryFile to JSON.

        Args:
            name: A text string for the name of the JSON file.
            folder: A text string for the directory where the JSON will be written.
            indent: A positive integer to set the indentation used in the resulting
                JSON file. (Default: 2).
        """
        file_name = name if name.lower().endswith('.json') else '{}.json'.format(name)
        return write_atomic(folder, file_name, self.to_text(indent))

    def __copy__(self):
        new_obj = CategoryFile(self._category, self._triangulation, self._subcats,
                               self._quotient)
        return self._duplicate_base(new_obj)

    def __repr__(self):
        return 'CategoryFile: {} ({} triangles, {} subcategories)'.format(
            self._category, len(self._triangulation or ()), len(self._subcats))
