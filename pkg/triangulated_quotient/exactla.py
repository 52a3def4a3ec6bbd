# coding=utf-8
"""Exact linear algebra over prime fields and the rationals.

Prime fields are backed by ``galois`` field arrays. The rationals are backed by
numpy object arrays of ``fractions.Fraction`` with ``sympy`` doing the row
reduction. Every routine in this library goes through a :class:`FieldSpec` so
that no floating point arithmetic is ever involved.
"""
from __future__ import division
import itertools
from fractions import Fraction

import numpy as np
import galois
import sympy

from .typing import prime_modulus, int_positive

ENUMERATION_LIMIT = 2 ** 16
SAMPLE_SIZE = 1024
WARMUP_SIZE = 64
_CHUNK = 4096


def _to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (np.integer,)):
        return Fraction(int(value))
    return Fraction(value)


def _fraction_to_json(value):
    if value.denominator == 1:
        return int(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


_as_fractions = np.vectorize(_to_fraction, otypes=[object])
_fractions_to_json = np.vectorize(_fraction_to_json, otypes=[object])


class FieldSpec(object):
    """The base field of a k-linear category.

    Args:
        kind: Text for the kind of field. Choose from prime, rational. (Default: prime).
        p: An integer for the prime modulus. Ignored for the rationals. (Default: 2).

    Properties:
        * kind
        * p
        * order
        * is_finite
    """
    __slots__ = ('_kind', '_p', '_gf')
    KINDS = ('prime', 'rational')

    def __init__(self, kind='prime', p=2):
        if kind not in self.KINDS:
            raise ValueError('"{}" is not a recognized field kind. Choose from '
                             '{}.'.format(kind, self.KINDS))
        self._kind = kind
        if kind == 'prime':
            self._p = prime_modulus(p, 'field modulus')
            self._gf = galois.GF(self._p)
        else:
            self._p = None
            self._gf = None

    @classmethod
    def from_dict(cls, data):
        """Create a FieldSpec from a dictionary.

        Args:
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "kind": "prime",  # or "rational"
            "p": 2  # prime modulus, only for prime fields
            }
        """
        unknown = set(data) - {'kind', 'p', 'type'}
        assert not unknown, 'Unknown field keys: {}.'.format(sorted(unknown))
        kind = data.get('kind', 'prime')
        return cls(kind, data.get('p', 2)) if kind == 'prime' else cls(kind)

    @property
    def kind(self):
        """Get text for the kind of field."""
        return self._kind

    @property
    def p(self):
        """Get the prime modulus (None for the rationals)."""
        return self._p

    @property
    def order(self):
        """Get the number of field elements (None for the rationals)."""
        return self._p

    @property
    def is_finite(self):
        return self._gf is not None

    def array(self, data):
        """Convert nested integers, fractions or field elements to a field array."""
        if self._gf is not None:
            if isinstance(data, self._gf):
                return data
            if isinstance(data, np.ndarray) and data.dtype != object:
                ints = data.view(np.ndarray).astype(np.int64)
            else:
                ints = np.asarray(data, dtype=object)
                if ints.size:
                    ints = _as_fractions(ints)
                    ints = np.vectorize(self._reduce_fraction, otypes=[np.int64])(ints)
            return self._gf(np.mod(np.asarray(ints, dtype=np.int64), self._p))
        arr = np.array(data, dtype=object)
        return _as_fractions(arr) if arr.size else arr

    def _reduce_fraction(self, value):
        num = value.numerator % self._p
        den = value.denominator % self._p
        assert den != 0, 'Fraction {} has no image in F_{}.'.format(value, self._p)
        return (num * pow(den, self._p - 2, self._p)) % self._p

    def coerce(self, data):
        """Get a field array for data, skipping conversion for arrays of this field."""
        if self._gf is not None and isinstance(data, self._gf):
            return data
        if self._gf is None and isinstance(data, np.ndarray) and data.dtype == object:
            return data
        return self.array(data)

    def zeros(self, shape):
        if self._gf is not None:
            return self._gf.Zeros(shape)
        return np.full(shape, Fraction(0), dtype=object)

    def identity(self, n):
        if self._gf is not None:
            return self._gf.Identity(n)
        return self.array(np.eye(n, dtype=np.int64))

    def scalar(self, value):
        """Get a 0-dimensional field array for a single element."""
        return self.array(value)

    def plain(self, arr):
        """Get an array that supports ordinary numpy comparisons."""
        if self._gf is not None:
            return arr.view(np.ndarray)
        return arr

    def is_zero(self, arr):
        return not bool(np.any(self.plain(arr) != 0))

    def equal(self, a, b):
        return a.shape == b.shape and bool(np.all(self.plain(a) == self.plain(b)))

    def key(self, arr):
        """Get a hashable key for an array."""
        if self._gf is not None:
            return (arr.shape, tuple(int(v) for v in arr.view(np.ndarray).flat))
        return (arr.shape, tuple(arr.flat))

    def to_json(self, arr):
        """Get a nested list of JSON-compatible field elements."""
        if self._gf is not None:
            return arr.view(np.ndarray).astype(np.int64).tolist()
        if arr.size == 0:
            return np.zeros(arr.shape).tolist()
        return _fractions_to_json(arr).tolist()

    def elements(self):
        """Get a list of all field elements (prime fields only)."""
        assert self.is_finite, 'The rationals cannot be enumerated.'
        return [self._gf(v) for v in range(self._p)]

    def random(self, shape, rng):
        """Get a random array using a numpy Generator."""
        if self._gf is not None:
            return self._gf(rng.integers(0, self._p, size=shape))
        return self.array(rng.integers(-2, 3, size=shape))

    def matmul(self, a, b):
        """Matrix product that accepts empty operands."""
        if a.shape[-1] == 0 or a.size == 0 or b.size == 0:
            shape = a.shape[:-1] + b.shape[1:]
            return self.zeros(shape)
        return a @ b

    def stack(self, rows, width):
        """Stack 1-D arrays into a 2-D array with a fixed number of columns."""
        rows = [self.coerce(r).reshape(-1) for r in rows]
        if not rows:
            return self.zeros((0, width))
        return np.vstack(rows)

    def hstack(self, blocks, height):
        blocks = [b for b in blocks if b.shape[1] > 0]
        if not blocks:
            return self.zeros((height, 0))
        return np.hstack(blocks)

    def vstack(self, blocks, width):
        blocks = [b for b in blocks if b.shape[0] > 0]
        if not blocks:
            return self.zeros((0, width))
        return np.vstack(blocks)

    def kron(self, a, b):
        """Kronecker product of two matrices."""
        if self._gf is not None:
            prod = np.kron(a.view(np.ndarray).astype(np.int64),
                           b.view(np.ndarray).astype(np.int64))
            return self._gf(np.mod(prod, self._p))
        return np.kron(a, b)

    def row_reduce(self, m):
        """Get the reduced row echelon form of a matrix and its pivot columns."""
        rows, cols = m.shape
        if rows == 0 or cols == 0:
            return m.copy(), ()
        if self._gf is not None:
            red = m.row_reduce()
        else:
            red = self._rational_row_reduce(m)
        pivots = []
        for row in self.plain(red):
            nonzero = np.flatnonzero(row != 0)
            if len(nonzero) == 0:
                break
            pivots.append(int(nonzero[0]))
        return red, tuple(pivots)

    @staticmethod
    def _rational_row_reduce(m):
        rows, cols = m.shape
        entries = [sympy.Rational(v.numerator, v.denominator) for v in m.flat]
        red, _ = sympy.Matrix(rows, cols, entries).rref()
        out = np.empty((rows, cols), dtype=object)
        for i in range(rows):
            for j in range(cols):
                val = red[i, j]
                out[i, j] = Fraction(int(val.p), int(val.q))
        return out

    def inverse(self, m):
        """Get the inverse of a square matrix or None if it is singular."""
        n = m.shape[0]
        assert m.shape == (n, n), 'Expected a square matrix. Got {}.'.format(m.shape)
        if n == 0:
            return m.copy()
        red, pivots = self.row_reduce(np.hstack([m, self.identity(n)]))
        if pivots != tuple(range(n)):
            return None
        return red[:, n:]

    def to_dict(self):
        """Get the field as a dictionary."""
        if self._gf is not None:
            return {'kind': 'prime', 'p': self._p}
        return {'kind': 'rational'}

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._kind == other._kind \
            and self._p == other._p

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._kind, self._p))

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'F_{}'.format(self._p) if self._gf is not None else 'Q'


class Subspace(object):
    """A subspace of a coordinate space, stored by its reduced echelon basis.

    Two equal subspaces always have identical stored bases.

    Args:
        field: The FieldSpec of the coordinate space.
        ambient_dim: An integer for the dimension of the coordinate space.
        vectors: An optional list of vectors or 2-D array whose rows span
            the subspace. (Default: None).

    Properties:
        * field
        * ambient_dim
        * dim
        * basis
        * pivots
        * complement
    """
    __slots__ = ('_field', '_ambient_dim', '_basis', '_pivots', '_complement')

    def __init__(self, field, ambient_dim, vectors=None):
        self._field = field
        self._ambient_dim = int_positive(ambient_dim, 'ambient dimension')
        n = self._ambient_dim
        if vectors is None or len(vectors) == 0 or n == 0:
            self._basis = field.zeros((0, n))
            self._pivots = ()
        else:
            if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
                mat = field.coerce(vectors)
            else:
                mat = field.stack(vectors, n)
            assert mat.shape[1] == n, 'Expected vectors of length {}. ' \
                'Got {}.'.format(n, mat.shape[1])
            red, pivots = field.row_reduce(mat)
            self._basis = red[:len(pivots)]
            self._pivots = pivots
        piv = set(self._pivots)
        self._complement = tuple(j for j in range(n) if j not in piv)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim)

    @classmethod
    def full(cls, field, ambient_dim):
        return cls(field, ambient_dim, field.identity(ambient_dim))

    @property
    def field(self):
        return self._field

    @property
    def ambient_dim(self):
        return self._ambient_dim

    @property
    def dim(self):
        return len(self._pivots)

    @property
    def basis(self):
        """Get a 2-D array with the reduced echelon basis as rows."""
        return self._basis

    @property
    def pivots(self):
        return self._pivots

    @property
    def complement(self):
        """Get the non-pivot positions, which index the canonical quotient coordinates."""
        return self._complement

    def _check_vector(self, vec):
        vec = self._field.coerce(vec).reshape(-1)
        if vec.shape[0] != self._ambient_dim:
            raise ValueError('Vector of length {} does not match ambient dimension '
                             '{}.'.format(vec.shape[0], self._ambient_dim))
        return vec

    def coset_representative(self, vec):
        """Get the unique member of vec + U that vanishes on the pivot positions."""
        vec = self._check_vector(vec)
        if not self._pivots:
            return vec.copy()
        coeffs = vec[list(self._pivots)]
        return vec - self._field.matmul(coeffs.reshape(1, -1), self._basis).reshape(-1)

    def contains(self, vec):
        return self._field.is_zero(self.coset_representative(vec))

    def coordinates(self, vec):
        """Get the coordinates of a member of the subspace in the echelon basis."""
        vec = self._check_vector(vec)
        return vec[list(self._pivots)] if self._pivots else self._field.zeros(0)

    def combine(self, coords):
        """Get the vector with the given coordinates in the echelon basis."""
        coords = self._field.coerce(coords).reshape(1, -1)
        return self._field.matmul(coords, self._basis).reshape(-1)

    def quotient_coordinates(self, vec):
        """Get coordinates of vec + U in the complement given by the non-pivot positions."""
        rep = self.coset_representative(vec)
        return rep[list(self._complement)] if self._complement \
            else self._field.zeros(0)

    def lift(self, coords):
        """Get the coset representative with the given quotient coordinates."""
        coords = self._field.coerce(coords).reshape(-1)
        assert coords.shape[0] == len(self._complement), 'Expected {} quotient ' \
            'coordinates. Got {}.'.format(len(self._complement), coords.shape[0])
        vec = self._field.zeros(self._ambient_dim)
        if self._complement:
            vec[list(self._complement)] = coords
        return vec

    def quotient_matrix(self):
        """Get the matrix sending a vector to its quotient coordinates."""
        field, n = self._field, self._ambient_dim
        eye = field.identity(n)
        if not self._complement:
            return field.zeros((0, n))
        comp = eye[list(self._complement)]
        if not self._pivots:
            return comp
        corr = field.matmul(self._basis[:, list(self._complement)].T,
                            eye[list(self._pivots)])
        return comp - corr

    def lift_matrix(self):
        """Get the matrix sending quotient coordinates to coset representatives."""
        eye = self._field.identity(self._ambient_dim)
        if not self._complement:
            return self._field.zeros((self._ambient_dim, 0))
        return eye[:, list(self._complement)]

    def __add__(self, other):
        self._check_compatible(other)
        return Subspace(self._field, self._ambient_dim,
                        self._field.vstack([self._basis, other._basis],
                                           self._ambient_dim))

    def is_subspace_of(self, other):
        self._check_compatible(other)
        return all(other.contains(row) for row in self._basis)

    def image(self, matrix):
        """Get the image of this subspace under a linear map given by a matrix."""
        assert matrix.shape[1] == self._ambient_dim, 'Expected a matrix with {} ' \
            'columns. Got {}.'.format(self._ambient_dim, matrix.shape[1])
        images = self._field.matmul(self._basis, matrix.T)
        return Subspace(self._field, matrix.shape[0], images)

    def extend_basis(self, candidates):
        """Get the indices of candidates that greedily extend this subspace to their span.

        Args:
            candidates: A list of vectors.

        Returns:
            A tuple with the indices of the chosen candidates and the Subspace
            spanned by this subspace together with all candidates.
        """
        chosen, current = [], self
        for i, vec in enumerate(candidates):
            if not current.contains(vec):
                current = current + Subspace(self._field, self._ambient_dim, [vec])
                chosen.append(i)
        return tuple(chosen), current

    def points(self):
        """Iterate over all members of the subspace (prime fields only)."""
        origin = self._field.zeros(self._ambient_dim)
        for point in _affine_points(self._field, origin, self._basis):
            yield point

    def _check_compatible(self, other):
        if other._ambient_dim != self._ambient_dim:
            raise ValueError('Subspace dimension mismatch: {} != {}.'.format(
                self._ambient_dim, other._ambient_dim))

    def key(self):
        return (self._ambient_dim, self._pivots, self._field.key(self._basis))

    def __eq__(self, other):
        return isinstance(other, Subspace) and self._field == other._field and \
            self.key() == other.key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key())

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'Subspace (dim {} of {})'.format(self.dim, self._ambient_dim)


def rank_and_echelon(field, m):
    """Get the rank, reduced row echelon form and pivot columns of a matrix.

    Args:
        field: The FieldSpec of the matrix entries.
        m: A 2-D array.

    Returns:
        A tuple with three elements.

        -   rank: The number of pivots.

        -   echelon: The reduced row echelon form with the shape of m.

        -   pivots: A tuple of pivot column indices.
    """
    red, pivots = field.row_reduce(field.coerce(m))
    return len(pivots), red, pivots


def rank(field, m):
    return rank_and_echelon(field, m)[0] if m.size else 0


def _nullspace_from_echelon(field, red, pivots, ncols):
    free = [j for j in range(ncols) if j not in set(pivots)]
    if not free:
        return Subspace.zero(field, ncols)
    vecs = field.zeros((len(free), ncols))
    for k, j in enumerate(free):
        vecs[k, j] = 1
    if pivots:
        vecs[:, list(pivots)] = -(red[:len(pivots)][:, free].T)
    return Subspace(field, ncols, vecs)


def nullspace(field, m):
    """Get the Subspace {x : m x = 0}."""
    m = field.coerce(m)
    rows, cols = m.shape
    if rows == 0:
        return Subspace.full(field, cols)
    red, pivots = field.row_reduce(m)
    return _nullspace_from_echelon(field, red, pivots, cols)


def column_space(field, m):
    """Get the Subspace spanned by the columns of m."""
    m = field.coerce(m)
    return Subspace(field, m.shape[0], m.T)


def solve(field, a, b):
    """Solve the linear system a x = b exactly.

    Args:
        field: The FieldSpec of the system.
        a: A 2-D array with the coefficients.
        b: A 1-D array with the right hand side.

    Returns:
        None if the system has no solution. Otherwise, a tuple with a
        particular solution and the Subspace of solutions of the homogeneous
        system.
    """
    a = field.coerce(a)
    b = field.coerce(b).reshape(-1)
    rows, cols = a.shape
    assert b.shape[0] == rows, 'Right hand side of length {} does not match {} ' \
        'equations.'.format(b.shape[0], rows)
    if rows == 0:
        return field.zeros(cols), Subspace.full(field, cols)
    red, pivots = field.row_reduce(np.hstack([a, b.reshape(rows, 1)]))
    if cols in pivots:
        return None
    particular = field.zeros(cols)
    for r, c in enumerate(pivots):
        particular[c] = red[r, cols]
    return particular, _nullspace_from_echelon(field, red[:, :cols], pivots, cols)


def subspace_sum(u, v):
    return u + v


def subspace_contains(u, vec):
    return u.contains(vec)


def coset_representative(u, vec):
    return u.coset_representative(vec)


def _affine_points(field, particular, basis):
    """Iterate over every point of particular + rowspace(basis) in a fixed order."""
    k = basis.shape[0]
    if k == 0:
        yield particular
        return
    combos = itertools.product(range(field.order), repeat=k)
    while True:
        chunk = list(itertools.islice(combos, _CHUNK))
        if not chunk:
            return
        points = field.matmul(field.array(chunk), basis) + particular
        for row in points:
            yield row


def search_points(field, particular, subspace, seed=0, limit=ENUMERATION_LIMIT,
                  samples=SAMPLE_SIZE):
    """Get an iterator over points of an affine space and whether it is exhaustive.

    The space is enumerated completely when it has at most limit points, after
    a short seeded random warm-up that usually finds witnesses faster. Otherwise
    only a seeded random sample is produced.

    Args:
        field: The FieldSpec of the space.
        particular: A 1-D array for the base point of the affine space.
        subspace: The Subspace of directions.
        seed: Integer seed for the random points. (Default: 0).
        limit: The maximum size of an exhaustively enumerated space.
        samples: The number of random points for larger spaces.

    Returns:
        A tuple with an iterator of 1-D arrays and a boolean for whether the
        iterator covers the whole space.
    """
    k = subspace.dim
    size = field.order ** k if field.is_finite else None
    exhaustive = size is not None and size <= limit
    return _search_iter(field, particular, subspace.basis, seed, exhaustive,
                        samples, size), exhaustive


def _search_iter(field, particular, basis, seed, exhaustive, samples, size):
    k = basis.shape[0]
    if k == 0:
        yield particular
        return
    rng = np.random.default_rng(seed)
    warm = min(WARMUP_SIZE, size) if exhaustive else samples
    for _ in range(warm):
        coeffs = field.random((1, k), rng)
        yield particular + field.matmul(coeffs, basis).reshape(-1)
    if exhaustive:
        for point in _affine_points(field, particular, basis):
            yield point


def first_point(field, particular, subspace, predicate, seed=0,
                limit=ENUMERATION_LIMIT, samples=SAMPLE_SIZE):
    """Search an affine space for a point satisfying a predicate.

    Args:
        field: The FieldSpec of the space.
        particular: A 1-D array for the base point of the affine space.
        subspace: The Subspace of directions.
        predicate: A function that takes a point and returns a truthy witness
            (or None/False when the point does not qualify).

    Returns:
        A tuple with a status text (Yes, No or Undecided) and the witness
        returned by the predicate (None unless the status is Yes).
    """
    points, exhaustive = search_points(
        field, particular, subspace, seed, limit, samples)
    for point in points:
        found = predicate(point)
        if found is not None and found is not False:
            return 'Yes', found
    return ('No' if exhaustive else 'Undecided'), None
