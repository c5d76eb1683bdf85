#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Reading and writing matrices, vectors, and reports.

Matrices and vectors are stored as JSON documents of the form::

    {"dim": d, "data": [[re, im], ...]}

where ``data`` lists the entries in row-major order (``d*d`` pairs for a
matrix, ``d`` pairs for a vector). Floating point values are written in the
shortest decimal form that round-trips, so a matrix that is written and read
back is bit-identical.

Examples
--------
>>> import io
>>> import numpy as np
>>> f = io.StringIO()
>>> dump_matrix([[0, 1], [4, 0]], f)
>>> print(f.getvalue(), end='')
{"dim": 2, "data": [[0.0, 0.0], [1.0, 0.0], [4.0, 0.0], [0.0, 0.0]]}
>>> _ = f.seek(0)
>>> np.array_equal(load_matrix(f), [[0, 1], [4, 0]])
True

"""
from importlib import resources
import json

import numpy as np

from . import data
from .errors import MatrixFormatError

__all__ = ('complex_pair', 'complex_pairs', 'from_pairs', 'to_document',
           'from_document', 'dump_matrix', 'dump_vector', 'load_matrix',
           'load_vector', 'load_example', 'dump_json')


def complex_pair(z):
    """Represent a complex number as ``[re, im]``."""
    z = complex(z)
    return [z.real, z.imag]


def complex_pairs(values):
    return [complex_pair(z) for z in np.ravel(values)]


def from_pairs(pairs):
    """Inverse of :func:`complex_pairs`."""
    try:
        array = np.asarray(pairs, dtype=float)
    except (TypeError, ValueError) as e:
        raise MatrixFormatError(f'entries are not numeric pairs: {e}') from e
    if array.ndim != 2 or array.shape[1] != 2:
        raise MatrixFormatError('entries must be a list of [re, im] pairs')
    if not np.all(np.isfinite(array)):
        raise MatrixFormatError('entries must be finite')
    return array[:, 0] + 1j * array[:, 1]


def to_document(array):
    """Convert a square matrix or a vector to its JSON document."""
    array = np.asarray(array, dtype=complex)
    return {'dim': array.shape[0], 'data': complex_pairs(array)}


def from_document(doc, kind='matrix'):
    """Parse a JSON document as a ``'matrix'`` or a ``'vector'``."""
    if not isinstance(doc, dict) or 'dim' not in doc or 'data' not in doc:
        raise MatrixFormatError('document must have "dim" and "data" keys')
    dim = doc['dim']
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise MatrixFormatError(f'"dim" must be a positive integer: {dim!r}')
    values = from_pairs(doc['data'])
    expected = dim * dim if kind == 'matrix' else dim
    if values.size != expected:
        raise MatrixFormatError(
            f'{kind} of dimension {dim} needs {expected} entries, '
            f'got {values.size}')
    if kind == 'matrix':
        values = values.reshape(dim, dim)
    return values


def _load(fileobj, kind):
    try:
        if hasattr(fileobj, 'read'):
            doc = json.load(fileobj)
        else:
            with open(fileobj, encoding='utf-8') as f:
                doc = json.load(f)
    except json.JSONDecodeError as e:
        raise MatrixFormatError(f'invalid JSON: {e}') from e
    return from_document(doc, kind)


def load_matrix(fileobj):
    """Read a matrix from a path or file object."""
    return _load(fileobj, 'matrix')


def load_vector(fileobj):
    """Read a vector from a path or file object."""
    return _load(fileobj, 'vector')


def dump_json(doc, fileobj):
    json.dump(doc, fileobj)
    fileobj.write('\n')


def dump_matrix(A, fileobj):
    """Write a square matrix to a file object."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise MatrixFormatError(f'not a square matrix: shape {A.shape}')
    dump_json(to_document(A), fileobj)


def dump_vector(psi, fileobj):
    """Write a vector to a file object."""
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1:
        raise MatrixFormatError(f'not a vector: shape {psi.shape}')
    dump_json(to_document(psi), fileobj)


def load_example(filename, kind='matrix'):
    """Read one of the example files bundled in :mod:`nhqm.data`.

    Examples
    --------
    >>> print(load_example('born-example-a.json').real)
    [[0. 1.]
     [4. 0.]]

    """
    with resources.path(data, filename) as p:
        return _load(str(p), kind)
