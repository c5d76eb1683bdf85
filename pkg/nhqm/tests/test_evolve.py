#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from hypothesis import given, settings
from hypothesis.strategies import floats
import numpy as np
import pytest

from .. import evolve
from ..errors import DomainError, NotParaHermitian, ZeroState
from ..matkit import mat_exp, op_norm
from ..paraops import (deformed_pauli, jordan_block, pauli,
                       two_level_hamiltonian)
from .test_matkit import random_para_hermitian


def driven(t):
    """Time-dependent generator, para-Hermitian with one metric
    throughout."""
    sx, _, sz = deformed_pauli(0.3)
    return np.cos(t) * sx + sz


@given(omega=floats(-1.2, 1.2), t=floats(-5, 5), s=floats(-5, 5))
@settings(deadline=None)
def test_group_law(omega, t, s):
    H = deformed_pauli(omega)[0]
    np.testing.assert_allclose(
        evolve.group(H, t + s), evolve.group(H, t) @ evolve.group(H, s),
        atol=1e-10 / np.cos(omega) ** 2)


def test_group_matches_exponential():
    H = deformed_pauli(0.7)[2]
    np.testing.assert_allclose(evolve.group(H, 1.3), mat_exp(H, -1.3j),
                               atol=1e-12)


def test_group_rejects_jordan():
    with pytest.raises(NotParaHermitian):
        evolve.group(jordan_block(), 1.0)


def test_stone_check():
    report = evolve.stone_check(deformed_pauli(0.4)[0],
                                [0.1, 0.5, 1.3, 2.9])
    assert report.group_law_defect < 1e-10
    assert report.norm_bound_defect < 1e-9
    assert report.max_norm > 1
    assert report.unitarity_defect < 1e-10
    assert report.rate == pytest.approx(1, abs=0.1)
    errors = report.generator_errors
    assert errors[0] > errors[1] > errors[2]
    assert report.to_dict()['deltas'] == [1e-2, 1e-3, 1e-4]


@pytest.mark.parametrize('order', [2, 4])
def test_propagator_constant(order):
    """Test that a constant generator is integrated exactly."""
    H = deformed_pauli(0.5)[0]
    P = evolve.propagator(lambda t: H, 2.0, steps=200, order=order)
    np.testing.assert_allclose(P.forward[-1], evolve.group(H, 2.0),
                               atol=1e-10)
    np.testing.assert_allclose(P.backward[-1], evolve.group(H, -2.0),
                               atol=1e-10)
    np.testing.assert_allclose(P.between(150, 50), evolve.group(H, 1.0),
                               atol=1e-10)
    np.testing.assert_allclose(P.at(0.123), evolve.group(H, 0.123),
                               atol=1e-10)
    composition, invertibility = P.defects()
    assert composition < 1e-10
    assert invertibility < 1e-10


@pytest.mark.parametrize('order,ratio', [(2, 4), (4, 16)])
def test_propagator_order(order, ratio):
    """Test that halving the step reduces the error by 2**order."""
    reference = evolve.propagator(driven, 2.0, steps=4000, order=4)
    errors = [op_norm(evolve.propagator(driven, 2.0, steps=steps,
                                        order=order).forward[-1]
                      - reference.forward[-1])
              for steps in (25, 50)]
    assert errors[0] / errors[1] == pytest.approx(ratio, rel=0.3)


def test_propagator_refined():
    P = evolve.propagator(driven, 1.0, steps=100, order=4)
    Q = P.refined()
    assert len(Q.steps) == 200
    assert Q.order == 4
    np.testing.assert_allclose(Q.forward[-1], P.forward[-1], atol=1e-6)


def test_propagator_domain():
    H = pauli()[2]
    with pytest.raises(DomainError):
        evolve.propagator(lambda t: H, 0.0)
    with pytest.raises(DomainError):
        evolve.propagator(lambda t: H, 1.0, steps=0)
    with pytest.raises(DomainError):
        evolve.propagator(lambda t: H, 1.0, order=3)
    with pytest.raises(NotParaHermitian):
        evolve.propagator(lambda t: jordan_block(), 1.0, steps=10)
    P = evolve.propagator(lambda t: H, 1.0, steps=10)
    with pytest.raises(DomainError):
        P.at(1.5)


def test_evolve_state():
    H = deformed_pauli(0.5)[2]
    P = evolve.propagator(lambda t: H, 3.0, steps=300)
    psi = evolve.evolve_state(P, [1, 0])
    assert psi.shape == (301, 2)
    np.testing.assert_allclose(psi[-1], evolve.group(H, 3.0)[:, 0],
                               atol=1e-10)
    with pytest.raises(ZeroState):
        evolve.evolve_state(P, [0, 0])


def test_stone_check_random():
    """Test the group, boundedness and generator properties on random
    para-Hermitian generators."""
    rng = np.random.default_rng(11)
    for _ in range(100):
        H, _ = random_para_hermitian(int(rng.integers(2, 9)), rng)
        report = evolve.stone_check(H, [0.1, 0.5, 1.3, 2.9])
        assert report.group_law_defect < 1e-10
        assert report.norm_bound_defect < 1e-9
        assert report.unitarity_defect < 1e-8
        assert report.rate == pytest.approx(1, abs=0.1)


@pytest.mark.parametrize('r,theta,gamma', [(1, np.pi / 2, 2),
                                           (0.5, 0.7, 1.3),
                                           (0.8, -2.0, 3)])
def test_evolve_state_two_level(r, theta, gamma):
    """Test the evolved components of the two-level Hamiltonian against
    their closed form."""
    H = two_level_hamiltonian(r, theta, gamma)
    P = evolve.propagator(lambda t: H, 2.0, steps=200)
    psi = evolve.evolve_state(P, [1, 0])

    phi = np.arcsin(r * np.sin(theta) / gamma)
    omega = 2 * np.sqrt(gamma ** 2 - (r * np.sin(theta)) ** 2)
    t = P.grid[:, np.newaxis]
    expected = np.hstack([np.cos(omega * t / 2 - phi),
                          -1j * np.sin(omega * t / 2)])
    expected *= np.exp(-1j * r * t * np.cos(theta)) / np.cos(phi)
    np.testing.assert_allclose(psi, expected, atol=1e-9)
