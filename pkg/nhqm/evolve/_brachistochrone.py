#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from dataclasses import dataclass
import logging
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from ..errors import BrokenRegime, DomainError, NumericalFailure
from ..matkit import eig_general
from ..paraops import two_level_hamiltonian
from ..utils import local_minima

__all__ = ('BrachistochroneResult', 'brachistochrone', 'parameters_for_gap',
           'first_passage')

log = logging.getLogger(__name__)

# Number of samples per period used to bracket the first passage.
_SAMPLES = 4000

# Largest disagreement between the analytic and simulated transfer times.
_AGREEMENT = 1e-6


@dataclass(frozen=True)
class BrachistochroneResult:
    """Time to steer :math:`|0\\rangle` to :math:`|1\\rangle` under the
    two-level Hamiltonian :math:`\\begin{pmatrix} re^{i\\theta} & \\gamma
    \\\\ \\gamma & re^{-i\\theta}\\end{pmatrix}`."""

    r: float
    theta: float
    gamma: float

    omega: float
    """Eigenvalue gap :math:`\\omega = 2\\sqrt{\\gamma^2 -
    r^2\\sin^2\\theta}`."""

    phi: float
    """Angle with :math:`\\sin\\phi = (r/\\gamma)\\sin\\theta`."""

    t_transfer: float
    """Analytic transfer time :math:`(2\\phi + \\pi)/\\omega`."""

    t_simulated: Optional[float]
    """Transfer time found by evolving :math:`|0\\rangle`, or None if the
    simulation was skipped."""

    hermitian_bound: float
    """Transfer time :math:`\\pi/\\omega` of a Hermitian Hamiltonian with the
    same gap."""

    @property
    def speedup(self):
        """Ratio of the Hermitian bound to the transfer time."""
        return self.hermitian_bound / self.t_transfer

    def to_dict(self):
        return {'r': self.r, 'theta': self.theta, 'gamma': self.gamma,
                'omega': self.omega, 'phi': self.phi,
                't_analytic': self.t_transfer,
                't_simulated': self.t_simulated,
                'hermitian_bound': self.hermitian_bound}


def parameters_for_gap(omega, phi):
    """Hamiltonian parameters with a given gap and angle.

    Returns :math:`(r, \\theta, \\gamma)` with :math:`\\theta = -\\pi/2` and
    :math:`\\gamma = \\omega/(2\\cos\\phi)`, so that every member of the
    family has the same energy gap :math:`\\omega`.

    Examples
    --------
    >>> r, theta, gamma = parameters_for_gap(2.0, -np.pi / 6)
    >>> print(round(r, 10), round(gamma, 10))
    0.5773502692 1.1547005384

    """
    if not omega > 0:
        raise DomainError('gap must be positive', omega=omega)
    if not abs(phi) < 0.5 * np.pi:
        raise DomainError('angle must satisfy |phi| < pi/2', phi=phi)
    gamma = omega / (2 * np.cos(phi))
    return float(-gamma * np.sin(phi)), -0.5 * np.pi, float(gamma)


def _amplitudes(sys, times):
    """Components of :math:`e^{-itH}|0\\rangle`, shape ``(len(times), 2)``."""
    coeffs = sys.left.conj().T[:, 0]
    phases = np.exp(-1j * np.outer(times, sys.eigenvalues.real))
    return (phases * coeffs) @ sys.right.T


def first_passage(H, horizon, samples=_SAMPLES):
    """First time at which :math:`e^{-itH}|0\\rangle` is proportional to
    :math:`|1\\rangle`.

    The overlap defect :math:`|\\psi_0|^2/\\|\\psi\\|^2` is sampled on a
    uniform grid; its first interior local minimum brackets the passage,
    which is then refined by root finding on the component
    :math:`\\psi_0` with the phase of :math:`\\psi_1` removed, projected
    onto its chord across the bracket.

    Raises
    ------
    NumericalFailure
        If no passage is found before `horizon`.
    """
    sys = eig_general(H)
    times = np.linspace(0, horizon, samples + 1)
    psi = _amplitudes(sys, times)
    defect = np.abs(psi[:, 0]) ** 2 / np.sum(np.abs(psi) ** 2, axis=1)
    minima = local_minima(defect, below=0.5)
    if len(minima) == 0:
        raise NumericalFailure('state never reaches |1> before the horizon',
                               horizon=horizon)
    i = minima[0]
    # psi_1 vanishes at t = 0
    lo = times[i - 1] if i > 1 else 1e-9 * times[1]
    hi = times[i + 1]

    def aligned(t):
        psi0, psi1 = _amplitudes(sys, np.atleast_1d(t))[0]
        return psi0 * np.conj(psi1) / abs(psi1)

    chord = aligned(hi) - aligned(lo)

    def projected(t):
        return float(np.real(aligned(t) * np.conj(chord)))

    if projected(lo) * projected(hi) > 0:
        raise NumericalFailure('first passage is not bracketed',
                               lo=lo, hi=hi)
    return brentq(projected, lo, hi, xtol=1e-12)


def brachistochrone(r, theta, gamma, simulate=True):
    """Transfer time between orthogonal states of the two-level
    Hamiltonian.

    Parameters
    ----------
    r, theta, gamma : float
        Hamiltonian parameters; `gamma` must be positive.
    simulate : bool
        If True, confirm the analytic time by evolving :math:`|0\\rangle`.

    Returns
    -------
    BrachistochroneResult

    Raises
    ------
    BrokenRegime
        If :math:`\\gamma^2 \\le r^2\\sin^2\\theta`.
    NumericalFailure
        If the simulated and analytic times disagree.

    Examples
    --------
    >>> result = brachistochrone(0, 0, 1)
    >>> print(round(result.t_transfer, 12), round(result.hermitian_bound, 12))
    1.570796326795 1.570796326795
    >>> brachistochrone(1, np.pi / 2, 0.5)
    Traceback (most recent call last):
      ...
    nhqm.errors.BrokenRegime: Hamiltonian is in the broken regime

    """
    if not gamma > 0:
        raise DomainError('gamma must be positive', gamma=gamma)
    disc = gamma ** 2 - (r * np.sin(theta)) ** 2
    if not disc > 0:
        raise BrokenRegime('Hamiltonian is in the broken regime',
                           r=r, theta=theta, gamma=gamma)
    omega = 2 * np.sqrt(disc)
    phi = float(np.arcsin(r * np.sin(theta) / gamma))
    t_transfer = (2 * phi + np.pi) / omega

    t_simulated = None
    if simulate:
        H = two_level_hamiltonian(r, theta, gamma)
        t_simulated = float(first_passage(H, 2.1 * np.pi / omega))
        if abs(t_simulated - t_transfer) > _AGREEMENT:
            raise NumericalFailure(
                'simulated transfer time disagrees with the analytic one',
                t_analytic=t_transfer, t_simulated=t_simulated)
        log.debug('transfer time %.12g (simulated %.12g)',
                  t_transfer, t_simulated)

    return BrachistochroneResult(
        float(r), float(theta), float(gamma), float(omega), phi,
        float(t_transfer), t_simulated, float(np.pi / omega))
