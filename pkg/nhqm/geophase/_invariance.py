#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from dataclasses import dataclass, field
import logging

import numpy as np
from scipy.optimize import linear_sum_assignment
from tqdm import tqdm

from ..evolve import propagator
from ._connection import (holonomy, holonomy_diagonal, horizontal_lift,
                          transported_connection)
from ._decomposition import Decomposition, GaugeElem
from ._phases import cyclic_evolution, geometric_phases

__all__ = ('InvarianceReport', 'invariance_suite', 'phase_deviation')

log = logging.getLogger(__name__)


def _wrap(x):
    return np.abs(x - 2 * np.pi * np.rint(x / (2 * np.pi)))


def phase_deviation(beta1, beta2):
    """Distance between two multisets of phases.

    Real parts are compared modulo :math:`2\\pi` and imaginary parts
    exactly; the multisets are matched by the assignment minimizing the
    largest deviation of a pair.

    Examples
    --------
    >>> phase_deviation([1, 2 + 1j], [2 + 1j, 1 - 2 * np.pi]) < 1e-12
    True

    """
    beta1 = np.asarray(beta1, dtype=complex)
    beta2 = np.asarray(beta2, dtype=complex)
    cost = np.maximum(
        _wrap(beta1.real[:, np.newaxis] - beta2.real[np.newaxis, :]),
        np.abs(beta1.imag[:, np.newaxis] - beta2.imag[np.newaxis, :]))
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max(initial=0))


def _phases_from_holonomy(element, V0, O0):
    return -1j * np.log(holonomy_diagonal(element, V0, O0))


@dataclass(frozen=True)
class InvarianceReport:
    """Deviations of the observable-geometric phases under changes that
    must leave them invariant."""

    trials: int
    """Number of random draws of each kind."""

    reparameterization: float
    """Largest deviation under smooth reparameterizations of time that fix
    the endpoints."""

    gauge: float
    """Largest deviation under random starting frames in the fiber."""

    measurement_point: float
    """Largest deviation under random changes of measurement point, with
    the connection transported along."""

    canonical_measurement_point: float
    """Largest deviation when the canonical connection of the new
    measurement point is used instead; recorded for information."""

    max_imag_beta: float
    """Largest imaginary part of the reference phases."""

    deviations: dict = field(default_factory=dict, repr=False)
    """Per-trial deviations, keyed like the attributes above."""

    @property
    def max_deviation(self):
        return max(self.reparameterization, self.gauge,
                   self.measurement_point)

    def passed(self, tol=1e-6):
        return self.max_deviation <= tol

    def to_dict(self):
        return {'trials': self.trials,
                'reparameterization': self.reparameterization,
                'gauge': self.gauge,
                'measurement_point': self.measurement_point,
                'canonical_measurement_point':
                    self.canonical_measurement_point,
                'max_deviation': self.max_deviation,
                'max_imag_beta': self.max_imag_beta}


def _reparameterized(h, tau, c, j):
    """:math:`\\tilde h(s) = g'(s)h(g(s))` for :math:`g(s) = s +
    c\\tau\\sin(2\\pi js/\\tau)/(2\\pi j)`."""
    k = 2 * np.pi * j / tau

    def h_tilde(s):
        g = s + c * np.sin(k * s) / k
        return (1 + c * np.cos(k * s)) * np.asarray(h(g))

    return h_tilde


def _random_invertible(dim, rng):
    noise = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return np.eye(dim) + 0.3 * noise / np.sqrt(dim)


def invariance_suite(C, h=None, trials=20, seed=None, progress=False):
    """Check that the observable-geometric phases are invariant.

    Each trial draws, independently,

    1. a reparameterization :math:`g(s) = s + c\\tau\\sin(2\\pi js/\\tau)/
       (2\\pi j)` with :math:`|c| < 1/2` and :math:`j \\in \\{1, 2, 3\\}`,
       under which the generator becomes :math:`g'(s)h(g(s))`;
    2. a starting frame :math:`V_0g` for a random gauge element
       :math:`g`, whose holonomy carries the phases in permuted order;
    3. a measurement point :math:`O_0' = TO_0T^{-1}` for a random invertible
       :math:`T`, with starting frame :math:`V_0T^{-1}` and the lift taken
       under :func:`transported_connection`.

    Phases are compared as multisets with :func:`phase_deviation`.

    Parameters
    ----------
    C : CyclicEvolution
        Reference cyclic evolution.
    h : callable, optional
        Generator; defaults to that of the propagator of `C`.
    trials : int
        Number of draws of each kind.
    seed : int or numpy.random.Generator, optional
        Seed for the random draws.
    progress : bool
        Show a progress bar.

    Returns
    -------
    InvarianceReport
    """
    if h is None:
        h = C.propagator.generator
    rng = np.random.default_rng(seed)
    reference = geometric_phases(C, h)
    beta = reference.beta
    P = C.propagator
    steps = len(P.steps)
    O0 = Decomposition.standard(C.dim)
    V0 = np.array(C.X0_system.right)

    log.info('running %d invariance trials', trials)
    deviations = {'reparameterization': [], 'gauge': [],
                  'measurement_point': [], 'canonical_measurement_point': []}
    for _ in tqdm(range(trials), disable=not progress):
        c = rng.uniform(-0.5, 0.5)
        j = int(rng.integers(1, 4))
        h_tilde = _reparameterized(h, C.tau, c, j)
        C_tilde = cyclic_evolution(
            C.X0_system, propagator(h_tilde, C.tau, steps=steps, order=4))
        deviations['reparameterization'].append(phase_deviation(
            beta, geometric_phases(C_tilde, h_tilde).beta))

        g = GaugeElem.random(C.dim, rng).matrix(O0.frame)
        V0g = V0 @ g
        element = holonomy(horizontal_lift(P, O0, V0g, start=C.start), C, O0)
        deviations['gauge'].append(phase_deviation(
            beta, _phases_from_holonomy(element, V0g, O0)))

        T = _random_invertible(C.dim, rng)
        O0_new = O0.conjugated(T)
        V0_new = V0 @ np.linalg.inv(T)
        lift = horizontal_lift(P, O0_new, V0_new, start=C.start,
                               connection=transported_connection(T, O0))
        element = holonomy(lift, C, O0_new)
        deviations['measurement_point'].append(phase_deviation(
            beta, _phases_from_holonomy(element, V0_new, O0_new)))
        element = holonomy(
            horizontal_lift(P, O0_new, V0_new, start=C.start), C, O0_new)
        deviations['canonical_measurement_point'].append(phase_deviation(
            beta, _phases_from_holonomy(element, V0_new, O0_new)))

    worst = {key: max(values, default=0.0)
             for key, values in deviations.items()}
    log.info('largest phase deviation: %g', max(worst.values()))
    return InvarianceReport(
        trials, worst['reparameterization'], worst['gauge'],
        worst['measurement_point'], worst['canonical_measurement_point'],
        float(np.max(np.abs(beta.imag))), deviations)
