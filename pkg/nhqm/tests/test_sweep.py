#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
import numpy as np
import pytest

from ..errors import DomainError, GridParseError
from ..sweep import grid_points, parse_grid, sweep


def total(x, y=0.0):
    if x > 1:
        raise DomainError('x is too large')
    return {'z': x + y}


@pytest.mark.parametrize('spec,name,count', [
    ('r=0:0.95:0.05', 'r', 20),
    ('omega=0.1:1.5:0.1', 'omega', 15),
    ('x=0:1:2', 'x', 1),
    ('x=1:0:0.1', 'x', 0),
    (' phi = -1:1:0.5', 'phi', 5)])
def test_parse_grid(spec, name, count):
    parsed_name, values = parse_grid(spec)
    assert parsed_name == name
    assert len(values) == count
    if count:
        assert values[0] == float(spec.split('=')[1].split(':')[0])


@pytest.mark.parametrize('spec,values', [
    ('theta=0.5,-1,2', [0.5, -1, 2]),
    ('gamma=3', [3]),
    ('r = 1e-3, 0.2', [1e-3, 0.2])])
def test_parse_grid_list(spec, values):
    name, parsed = parse_grid(spec)
    assert name == spec.split('=')[0].strip()
    np.testing.assert_array_equal(parsed, values)


@pytest.mark.parametrize('spec', [
    'x', 'x=0:1', 'x=0:1:0.1:2', '1x=0:1:0.1', 'x=a:1:0.1', 'x=0:inf:1',
    'x=0:1:0', 'x=0:1:-0.1', '=0:1:0.1', 'x=', 'x=1,,2', 'x=1,nan',
    'x=1,a'])
def test_parse_grid_errors(spec):
    with pytest.raises(GridParseError):
        parse_grid(spec)


def test_grid_points():
    points = grid_points([('x', [0, 1]), ('y', [2, 3, 4])], {'y': 0, 'z': 5})
    assert len(points) == 6
    assert points[0] == {'x': 0, 'y': 2, 'z': 5}
    assert points[-1] == {'x': 1, 'y': 4, 'z': 5}
    with pytest.raises(GridParseError):
        grid_points([('x', [0]), ('x', [1])])


def test_sweep():
    """Test that failed points become NaN rows."""
    table = sweep(total, [parse_grid('x=0:2:0.5')], ['x', 'z'],
                  fixed={'y': 10}, descriptions={'z': 'Sum'})
    np.testing.assert_allclose(table['x'], [0, 0.5, 1, 1.5, 2])
    np.testing.assert_allclose(table['z'][:3], [10, 10.5, 11])
    assert np.all(np.isnan(table['z'][3:]))
    assert table['z'].description == 'Sum'


def test_sweep_empty():
    table = sweep(total, [parse_grid('x=1:0:1')], ['x', 'z'])
    assert len(table) == 0
    assert table.colnames == ['x', 'z']
