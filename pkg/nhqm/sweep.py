#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Parameter sweeps.

A sweep evaluates a function at every point of a Cartesian grid and gathers
the results into a table with one row per point. Grids are written as
``name=start:stop:step``, the stop value included when it falls on the
grid, or as a list ``name=v1,v2,...``.

Examples
--------
>>> grid_points([parse_grid('x=0:1:0.5')])
[{'x': 0.0}, {'x': 0.5}, {'x': 1.0}]

"""
from functools import partial
import itertools
import logging

from astropy.table import Table
from ligo.skymap.util import progress_map
import numpy as np

from .errors import DomainError, GridParseError, NumericalFailure

__all__ = ('parse_grid', 'grid_points', 'sweep')

log = logging.getLogger(__name__)


def parse_grid(spec):
    """Parse a grid specification ``name=start:stop:step`` or
    ``name=v1,v2,...``.

    Returns
    -------
    name : str
        Parameter name.
    values : numpy.ndarray
        Grid values ``start, start + step, ...`` up to and including
        `stop`, empty if `stop` is less than `start`; or the listed values
        in the order given.

    Raises
    ------
    GridParseError
        If the specification is malformed, a value is not a finite number
        or the step is not positive.

    Examples
    --------
    >>> name, values = parse_grid('r=0:0.95:0.05')
    >>> name, len(values)
    ('r', 20)
    >>> parse_grid('omega=1:0:0.1')[1].size
    0
    >>> parse_grid('theta=0.5,-1,2')[1].tolist()
    [0.5, -1.0, 2.0]
    >>> parse_grid('x')
    Traceback (most recent call last):
      ...
    nhqm.errors.GridParseError: grid needs name=start:stop:step or a list: 'x'

    """
    name, sep, body = spec.partition('=')
    name = name.strip()
    if not sep or not name.isidentifier():
        raise GridParseError(_USAGE + f': {spec!r}')
    if ':' not in body:
        return name, _numbers(body.split(','), spec)

    parts = body.split(':')
    if len(parts) != 3:
        raise GridParseError(_USAGE + f': {spec!r}')
    start, stop, step = _numbers(parts, spec)
    if not step > 0:
        raise GridParseError(f'grid step must be positive: {spec!r}',
                             step=step)
    if stop < start:
        count = 0
    else:
        count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return name, start + step * np.arange(count)


_USAGE = 'grid needs name=start:stop:step or a list'


def _numbers(parts, spec):
    try:
        values = np.asarray([float(part) for part in parts])
    except ValueError:
        raise GridParseError(f'grid values are not numbers: {spec!r}')
    if not np.all(np.isfinite(values)):
        raise GridParseError(f'grid values must be finite: {spec!r}')
    return values


def grid_points(grids, fixed=None):
    """Points of the Cartesian product of grids, first grid outermost.

    Parameters
    ----------
    grids : list
        ``(name, values)`` pairs from :func:`parse_grid`.
    fixed : dict, optional
        Parameters held constant; overridden by swept ones.

    Raises
    ------
    GridParseError
        If a parameter is swept twice.

    Examples
    --------
    >>> grid_points([('a', [1, 2]), ('b', [3])], {'c': 0})
    [{'c': 0, 'a': 1, 'b': 3}, {'c': 0, 'a': 2, 'b': 3}]

    """
    names = [name for name, _ in grids]
    if len(set(names)) != len(names):
        raise GridParseError('a parameter is swept more than once',
                             names=', '.join(names))
    fixed = dict(fixed or {})
    axes = [np.asarray(values).tolist() for _, values in grids]
    return [{**fixed, **dict(zip(names, values))}
            for values in itertools.product(*axes)]


def _evaluate(func, columns, point):
    try:
        row = func(**point)
    except (DomainError, NumericalFailure) as e:
        log.warning('sweep point %r failed: %s', point, e)
        row = {}
    return [row.get(name, point.get(name, np.nan)) for name in columns]


def sweep(func, grids, columns, fixed=None, jobs=1, descriptions=None):
    """Evaluate a function over a grid of parameters.

    Parameters
    ----------
    func : callable
        Called with one keyword argument per parameter; returns a mapping
        from column name to value. It must be defined at module level when
        ``jobs != 1``, so that it can be sent to worker processes.
    grids : list
        ``(name, values)`` pairs from :func:`parse_grid`.
    columns : sequence
        Names of the output columns. Parameters appear in a column of the
        same name unless `func` overrides them.
    fixed : dict, optional
        Parameters held constant.
    jobs : int or None
        Number of worker processes, or None for one per CPU.
    descriptions : dict, optional
        Column descriptions.

    Returns
    -------
    astropy.table.Table
        One row per grid point, in grid order. A point at which `func`
        raises a domain or numerical error gets NaN in the columns it does
        not supply.
    """
    points = grid_points(grids, fixed)
    log.info('evaluating %d grid points', len(points))
    if points:
        rows = list(progress_map(
            partial(_evaluate, func, tuple(columns)), points, jobs=jobs))
    else:
        rows = []
    table = Table(rows=rows or None, names=columns,
                  dtype=None if rows else [float] * len(columns))
    for name, description in (descriptions or {}).items():
        table[name].description = description
    return table
