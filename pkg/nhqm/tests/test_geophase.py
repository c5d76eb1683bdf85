#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from functools import lru_cache

import numpy as np
import pytest

from .. import geophase
from ..errors import (BadGauge, DegenerateSpectrum, DomainError,
                      NoCycleFound, NotInFiber)
from ..evolve import propagator
from ..matkit import eig_general
from .test_matkit import random_para_hermitian
from ..paraops import bloch_observable, deformed_pauli, pauli
from ..regression import qubit_phases


@lru_cache()
def qubit_cycle(omega, phi):
    h = -deformed_pauli(omega)[2]
    P = propagator(lambda t: h, 4.0, 4000)
    X = geophase.heisenberg_evolve(bloch_observable(phi), P)
    return geophase.detect_cycle(X, P)


@pytest.mark.parametrize('omega,phi', [(0.3, 0.4), (0.6, 0.9), (-0.5, 1.2)])
def test_qubit_phases(omega, phi):
    """Test the period and phases of the driven qubit against their closed
    form."""
    C = qubit_cycle(omega, phi)
    assert C.tau == pytest.approx(np.pi, abs=1e-8)
    report = geophase.geometric_phases(C)
    assert geophase.phase_deviation(report.beta,
                                    qubit_phases(omega, phi)) < 1e-6
    np.testing.assert_allclose(report.holonomy_diag, np.exp(1j * report.beta))
    doc = report.to_dict()
    assert len(doc['beta']) == 2


def test_hermitian_phases_are_real():
    C = qubit_cycle(0.0, 0.7)
    report = geophase.geometric_phases(C)
    np.testing.assert_allclose(report.beta.imag, 0, atol=1e-10)


@pytest.mark.parametrize('omega,phi', [(0.3, 0.4), (0.6, 0.9)])
def test_holonomy(omega, phi):
    """Test that the holonomy of the horizontal lift carries the phases."""
    C = qubit_cycle(omega, phi)
    V0 = np.array(C.X0_system.right)
    lift = geophase.horizontal_lift(
        C.propagator, geophase.Decomposition.standard(2), V0, start=C.start)
    assert lift.transport_defect < 1e-4
    assert lift.ode_agreement < 1e-4
    diagonal = geophase.holonomy_diagonal(geophase.holonomy(lift, C), V0,
                                          lift.reference)
    beta = geophase.geometric_phases(C).beta
    np.testing.assert_allclose(diagonal, np.exp(1j * beta), atol=1e-8)


def test_lift_not_in_fiber():
    C = qubit_cycle(0.3, 0.4)
    with pytest.raises(NotInFiber):
        geophase.horizontal_lift(C.propagator,
                                 geophase.Decomposition.standard(2),
                                 np.eye(2), start=C.start)


def test_loop_formula():
    """Test that the loop integral and the dynamical subtraction agree."""
    h = -deformed_pauli(0.3)[2]
    P = propagator(lambda t: h, 4.0, 40000)
    C = geophase.detect_cycle(
        geophase.heisenberg_evolve(bloch_observable(0.4), P), P)
    alphas = [lambda t, n=n: C.theta[n] * t / C.tau for n in range(2)]
    loop = geophase.geometric_phases_loop(C, alphas)
    assert geophase.phase_deviation(
        loop.beta, geophase.geometric_phases(C).beta) < 1e-6
    with pytest.raises(BadGauge):
        geophase.geometric_phases_loop(C, [lambda t: 0, lambda t: 0])


def test_invariance_suite():
    report = geophase.invariance_suite(qubit_cycle(0.3, 0.4), trials=20,
                                       seed=0)
    assert report.passed()
    assert report.reparameterization < 1e-6
    assert report.gauge < 1e-6
    assert report.measurement_point < 1e-6
    assert report.max_imag_beta > 0
    assert report.to_dict()['trials'] == 20


def test_no_cycle():
    h = -deformed_pauli(0.3)[2]
    P = propagator(lambda t: h, 1.0, 1000)
    with pytest.raises(NoCycleFound):
        geophase.detect_cycle(
            geophase.heisenberg_evolve(bloch_observable(0.4), P), P)


def test_degenerate_observable():
    h = -deformed_pauli(0.3)[2]
    P = propagator(lambda t: h, 1.0, 100)
    with pytest.raises(DegenerateSpectrum):
        geophase.detect_cycle(geophase.heisenberg_evolve(np.eye(2), P), P)


def test_cyclic_evolution_hermitian():
    """Test the total phases of a Hermitian evolution with known period."""
    sx, _, sz = pauli()
    X0 = np.cos(0.4) * sz + np.sin(0.4) * sx
    P = propagator(lambda t: -sz, np.pi, 1000)
    C = geophase.cyclic_evolution(eig_general(X0), P)
    np.testing.assert_allclose(C.theta, [np.pi, np.pi], atol=1e-10)
    assert C.defect < 1e-10


def test_decomposition():
    rng = np.random.default_rng(0)
    V = np.eye(3) + 0.3 * rng.normal(size=(3, 3))
    O = geophase.Decomposition.from_frame(V)
    assert max(O.defects().values()) < 1e-12
    g = geophase.GaugeElem.random(3, rng)
    assert geophase.hausdorff_distance(O, O.conjugated(g.matrix(V))) < 1e-10
    T = np.eye(3) + 0.3 * rng.normal(size=(3, 3))
    assert geophase.hausdorff_distance(O, O.conjugated(T)) > 1e-3


def test_gauge_elem_validation():
    with pytest.raises(DomainError):
        geophase.GaugeElem((0, 0), (1, 1))
    with pytest.raises(DomainError):
        geophase.GaugeElem((1, 0), (1, 0))


def test_canonical_connection():
    """Test that the connection commutes with the measurement point."""
    rng = np.random.default_rng(1)
    O0 = geophase.Decomposition.from_frame(
        np.eye(3) + 0.3 * rng.normal(size=(3, 3)))
    P = np.eye(3) + 0.3 * rng.normal(size=(3, 3))
    Q = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    omega = geophase.canonical_connection(P, Q, O0)
    for projector in O0.projectors:
        np.testing.assert_allclose(omega @ projector, projector @ omega,
                                   atol=1e-10)


def test_phase_deviation():
    assert geophase.phase_deviation([1, 2 + 1j],
                                    [2 + 1j, 1 + 2 * np.pi]) < 1e-12
    assert geophase.phase_deviation([1], [1.5]) == pytest.approx(0.5)
    assert geophase.phase_deviation([1j], [-1j]) == pytest.approx(2)


def test_connection_gauge_equivariance():
    """Test that the connection transforms by conjugation under the gauge
    group and returns vertical tangents unchanged."""
    rng = np.random.default_rng(3)
    O0 = geophase.Decomposition.from_frame(
        np.eye(3) + 0.3 * rng.normal(size=(3, 3)))
    P = np.eye(3) + 0.3 * rng.normal(size=(3, 3))
    Q = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    omega = geophase.canonical_connection(P, Q, O0)
    for _ in range(5):
        g = geophase.GaugeElem.random(3, rng).matrix(O0.frame)
        np.testing.assert_allclose(
            geophase.canonical_connection(P @ g, Q @ g, O0),
            np.linalg.solve(g, omega @ g), atol=1e-10)

    xi = np.einsum('n,nij->ij', [1, 2j, -0.5], O0.projectors)
    np.testing.assert_allclose(geophase.canonical_connection(P, P @ xi, O0),
                               xi, atol=1e-10)


def test_lift_constant_path():
    """Test that a path at rest is its own horizontal lift."""
    rng = np.random.default_rng(4)
    P = propagator(lambda t: np.zeros((3, 3)), 1.0, 100)
    V0 = np.eye(3) + 0.3 * rng.normal(size=(3, 3))
    lift = geophase.horizontal_lift(P, geophase.Decomposition.standard(3),
                                    V0)
    np.testing.assert_allclose(lift.frames, np.broadcast_to(
        V0, lift.frames.shape), atol=1e-12)
    assert lift.transport_defect < 1e-12


def test_lift_diagonal_generator():
    """Test that a generator diagonal in the measurement frame only moves
    the frame along its fiber, so that the lift stays at the identity."""
    h = np.diag([1.0, -0.5])
    P = propagator(lambda t: h, 2.0, 400)
    lift = geophase.horizontal_lift(P, geophase.Decomposition.standard(2),
                                    np.eye(2))
    np.testing.assert_allclose(lift.frames, np.broadcast_to(
        np.eye(2), lift.frames.shape), atol=1e-10)


def test_hausdorff_pauli():
    """Test the distance between the eigendecompositions of sigma_z and
    sigma_x."""
    sx, _, sz = pauli()
    Oz = geophase.Decomposition.from_eigensystem(eig_general(sz))
    Ox = geophase.Decomposition.from_eigensystem(eig_general(sx))
    assert geophase.hausdorff_distance(Oz, Ox) == pytest.approx(
        1 / np.sqrt(2), abs=1e-12)
    assert geophase.hausdorff_distance(Oz, Oz) == pytest.approx(0, abs=1e-15)


def test_heisenberg_spectrum_constant():
    """Test that the Heisenberg trajectory keeps the spectrum of the initial
    observable."""
    rng = np.random.default_rng(5)
    h, _ = random_para_hermitian(3, rng)
    X0, w = random_para_hermitian(3, rng)
    X = geophase.heisenberg_evolve(X0, propagator(lambda t: h, 3.0, 300))
    spectra = np.linalg.eigvals(X)
    np.testing.assert_allclose(np.sort(spectra.real, axis=-1),
                               np.broadcast_to(w, spectra.shape), atol=1e-8)
    np.testing.assert_allclose(spectra.imag, 0, atol=1e-8)


def test_transported_connection():
    """Test that the transported connection is the canonical connection of
    the moved measurement point."""
    rng = np.random.default_rng(6)
    O0 = geophase.Decomposition.standard(3)
    T = np.eye(3) + 0.3 * rng.normal(size=(3, 3))
    O0_new = O0.conjugated(T)
    connection = geophase.transported_connection(T, O0)
    W = np.eye(3) + 0.3 * rng.normal(size=(3, 3))
    X = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    omega = connection(W, X)
    np.testing.assert_allclose(
        omega, geophase.canonical_connection(W, X, O0_new), atol=1e-10)
    for projector in O0_new.projectors:
        np.testing.assert_allclose(omega @ projector, projector @ omega,
                                   atol=1e-10)


def test_lift_at_moved_measurement_point():
    """Test that a lift under the transported connection reproduces the
    phases at a moved measurement point, while a lift that ignores the
    connection does not."""
    C = qubit_cycle(0.3, 0.4)
    beta = geophase.geometric_phases(C).beta
    O0 = geophase.Decomposition.standard(2)
    T = np.asarray([[1.2, 0.4 - 0.3j], [0.1j, 0.8]])
    O0_new = O0.conjugated(T)
    V0_new = np.array(C.X0_system.right) @ np.linalg.inv(T)

    def phases(connection):
        lift = geophase.horizontal_lift(C.propagator, O0_new, V0_new,
                                        start=C.start, connection=connection)
        element = geophase.holonomy(lift, C, O0_new)
        return -1j * np.log(geophase.holonomy_diagonal(element, V0_new,
                                                       O0_new))

    transported = phases(geophase.transported_connection(T, O0))
    assert geophase.phase_deviation(beta, transported) < 1e-6
    unlifted = phases(lambda frames, tangents: np.zeros_like(tangents))
    assert geophase.phase_deviation(beta, unlifted) > 0.1
