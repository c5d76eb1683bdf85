#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
import numpy as np
import pytest

from .. import regression
from ..errors import NoCycleFound


def failing():
    yield 'first', 1e-12, 1e-10
    yield 'second', 1.0, 1e-3


def raising():
    yield 'first', 0.0, 1.0
    raise NoCycleFound('no period')


@pytest.mark.parametrize('suite', ['paper', 'quick'])
def test_suite(suite):
    """Test that every check of each suite passes."""
    table = regression.run_checks(regression.SUITES[suite])
    assert len(table) == len(regression.SUITES[suite])
    failed = table[~table['passed']]
    assert len(failed) == 0, failed


def test_full_suite_sizes():
    """Test that the full suite runs the large random samples."""
    checks = {check.name: check for check in regression.FULL_CHECKS}
    assert checks['probabilities'].compute.args == (1000,)
    assert checks['biorthogonal'].compute.args == (500,)
    assert checks['stone'].compute.args == (100,)
    assert checks['invariance'].compute.args == (20,)
    assert len(checks['brachistochrone'].compute.keywords['grid']) == 200
    assert len(regression.transfer_grid()) == 200


def test_failing_check():
    """Test that the worst quantity of a failing check is reported."""
    table = regression.run_checks([
        regression.Check('failing', 'Fails on purpose', failing),
        regression.Check('raising', 'Raises on purpose', raising)])
    assert table['passed'].tolist() == [False, False]
    assert table['quantity'].tolist() == ['second', 'NoCycleFound']
    assert table['deviation'][0] == 1.0
    assert np.isinf(table['deviation'][1])


def test_empty():
    table = regression.run_checks([])
    assert len(table) == 0
    assert 'passed' in table.colnames


@pytest.mark.parametrize('omega,phi', [(0, 0), (0.3, 0.4)])
def test_qubit_phases_limits(omega, phi):
    """Test that the closed-form phases are real for a Hermitian drive and
    sum to a multiple of 2 pi."""
    beta = regression.qubit_phases(omega, phi)
    assert np.sum(beta) == pytest.approx(2 * np.pi)
    if omega == 0:
        np.testing.assert_allclose(beta.imag, 0)


def test_check_names_unique():
    names = [check.name for check in regression.FULL_CHECKS]
    assert names == [check.name for check in regression.EXAMPLE_CHECKS]
    assert len(set(names)) == len(names)
