#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from dataclasses import dataclass
import logging

import numpy as np
from scipy.integrate import quad_vec, trapezoid
from scipy.optimize import brentq, minimize_scalar

from .. import config
from ..errors import (BadGauge, DegenerateSpectrum, DimensionMismatch,
                      NoCycleFound, NotCyclic)
from ..evolve import Propagator, propagator
from ..matkit import EigSystem, as_matrix
from ..paraops import para_hermitian_system
from ._connection import derivative
from ._decomposition import Decomposition, hausdorff_distance

__all__ = ('heisenberg_evolve', 'CyclicEvolution', 'cyclic_evolution',
           'detect_cycle', 'PhaseReport', 'geometric_phases',
           'geometric_phases_loop')

log = logging.getLogger(__name__)


def _pairs(values):
    return [[z.real, z.imag] for z in np.asarray(values, dtype=complex)]


def heisenberg_evolve(X0, P):
    """Heisenberg trajectory :math:`X(t_k) = U(0, t_k)X_0U(t_k, 0)`.

    Returns
    -------
    numpy.ndarray
        Observables on the grid of `P`, shape ``(K + 1, d, d)``. Being
        similar to :math:`X_0`, each has the same spectrum.

    Raises
    ------
    NotParaHermitian
        If `X0` is not para-Hermitian.

    Examples
    --------
    >>> import numpy as np
    >>> from nhqm.evolve import propagator
    >>> from nhqm.paraops import pauli
    >>> sx, _, sz = pauli()
    >>> X = heisenberg_evolve(sx, propagator(lambda t: -sz, np.pi, 1000))
    >>> np.allclose(X[-1], sx)
    True

    """
    X0 = as_matrix(X0, 'observable')
    para_hermitian_system(X0, 'observable')
    if X0.shape[0] != P.dim:
        raise DimensionMismatch('observable does not match propagator')
    return P.backward @ X0 @ P.forward


def _check_gap(sys, tol_gap=None):
    tol_gap = config.resolve(tol_gap, 'tol_gap')
    w = np.sort(sys.eigenvalues.real)
    if len(w) < 2:
        return
    gap = float(np.min(np.diff(w)))
    spread = float(w[-1] - w[0])
    if not gap > tol_gap * spread:
        raise DegenerateSpectrum('observable has a degenerate spectrum',
                                 gap=gap, spread=spread)


def _spectral_projectors(X, w):
    """Eigenprojections of matrices with the known simple spectrum `w`, by
    Sylvester's formula; shape ``(..., d, d, d)`` with the eigenvalue index
    third from last."""
    eye = np.eye(len(w))
    result = []
    for n, wn in enumerate(w):
        product = np.broadcast_to(eye, X.shape).astype(complex)
        for m, wm in enumerate(w):
            if m != n:
                product = product @ ((X - wm * eye) / (wn - wm))
        result.append(product)
    return np.stack(result, axis=-3)


@dataclass(frozen=True, eq=False)
class CyclicEvolution:
    """Evolution that returns an observable to itself after a period."""

    X0_system: EigSystem
    """Eigensystem of :math:`X_0`: eigenstates :math:`\\psi_n` and their
    duals :math:`\\psi^*_n`."""

    tau: float
    """Period :math:`\\tau`."""

    theta: np.ndarray
    """Total phases :math:`\\theta_n` with :math:`U(0, \\tau)\\psi_n =
    e^{i\\theta_n}\\psi_n`, real part on the principal branch
    :math:`(-\\pi, \\pi]`."""

    propagator: Propagator
    """Propagator on a uniform grid ending exactly at :attr:`tau`."""

    defect: float
    """Largest relative residual of :math:`U(0, \\tau)\\psi_n =
    e^{i\\theta_n}\\psi_n`."""

    @property
    def dim(self):
        return self.X0_system.dim

    @property
    def start(self):
        """Decomposition of :math:`X_0`."""
        return Decomposition.from_eigensystem(self.X0_system)


def cyclic_evolution(X0_system, P, tol=None):
    """Total phases of an evolution that ends at a period.

    Parameters
    ----------
    X0_system : nhqm.matkit.EigSystem
        Eigensystem of the initial observable.
    P : nhqm.evolve.Propagator
        Propagator whose final time is the period.
    tol : float, optional
        Cyclicity tolerance, scaled by the condition number of the
        eigenvector frame. Defaults to ``tol_cycle``.

    Raises
    ------
    NotCyclic
        If some :math:`U(0, \\tau)\\psi_n` is not a multiple of
        :math:`\\psi_n`.
    """
    tol = config.resolve(tol, 'tol_cycle')
    R = np.asarray(X0_system.right)
    L = np.asarray(X0_system.left)
    image = P.backward[-1] @ R
    mu = np.einsum('in,in->n', L.conj(), image)
    defect = float(np.max(np.linalg.norm(image - R * mu, axis=0)
                          / np.linalg.norm(image, axis=0)))
    if defect > tol * X0_system.frame_condition:
        raise NotCyclic('evolution does not return the eigenstates',
                        defect=defect, tau=P.duration)
    angle = np.angle(mu)
    angle = np.where(angle <= -np.pi + tol, angle + 2 * np.pi, angle)
    theta = angle - 1j * np.log(np.abs(mu))
    theta.setflags(write=False)
    return CyclicEvolution(X0_system, P.duration, theta, P, defect)


def detect_cycle(X_traj, P, tol=None):
    """Find the period of a Heisenberg trajectory.

    The period is the first time at which every eigenprojection of
    :math:`X(t)` is back at its starting value, so that a return with the
    eigenprojections permuted does not count. Grid minima of this distance
    are refined by root finding on the continuously evaluated trajectory,
    and the evolution is then recomputed on a uniform grid
    ending exactly at the period.

    Parameters
    ----------
    X_traj : numpy.ndarray
        Trajectory from :func:`heisenberg_evolve`.
    P : nhqm.evolve.Propagator
        Propagator that generated the trajectory.
    tol : float, optional
        Largest distance at which the observable counts as returned.
        Defaults to ``tol_cycle``.

    Returns
    -------
    CyclicEvolution

    Raises
    ------
    DegenerateSpectrum
        If two eigenvalues of :math:`X_0` are closer than ``tol_gap`` times
        the spectral spread.
    NoCycleFound
        If the observable does not return within the trajectory.

    Examples
    --------
    >>> import numpy as np
    >>> from nhqm.evolve import propagator
    >>> from nhqm.paraops import deformed_pauli, pauli
    >>> h = -deformed_pauli(0.3)[2]
    >>> X0 = np.cos(0.4) * pauli()[2] + np.sin(0.4) * pauli()[0]
    >>> P = propagator(lambda t: h, 4.0, 4000)
    >>> C = detect_cycle(heisenberg_evolve(X0, P), P)
    >>> abs(C.tau - np.pi) < 1e-8
    True

    """
    tol = config.resolve(tol, 'tol_cycle')
    X_traj = np.asarray(X_traj, dtype=complex)
    if X_traj.shape[0] != len(P.grid) or X_traj.shape[1:] != (P.dim, P.dim):
        raise DimensionMismatch('trajectory does not match propagator grid')
    sys = para_hermitian_system(X_traj[0], 'observable')
    _check_gap(sys)
    w = sys.eigenvalues.real
    X0 = X_traj[0]

    projectors = _spectral_projectors(X_traj, w)
    distance = np.max(np.linalg.norm(
        projectors - projectors[0], ord=2, axis=(-2, -1)), axis=-1)

    def difference(t):
        U = P.at(t)
        X = np.linalg.solve(U, X0 @ U)
        return _spectral_projectors(X, w) - projectors[0]

    def refine(lo, hi):
        # The difference vanishes at the period; projecting it onto its
        # chord across the bracket gives a scalar with a simple root there.
        chord = difference(hi) - difference(lo)

        def projected(t):
            return float(np.real(np.vdot(chord, difference(t))))

        if projected(lo) * projected(hi) < 0:
            t = brentq(projected, lo, hi, xtol=1e-14)
        else:
            t = minimize_scalar(
                lambda t: np.linalg.norm(difference(t)),
                bounds=(lo, hi), method='bounded',
                options={'xatol': 1e-12}).x
        return t, float(np.max(np.linalg.norm(
            difference(t), ord=2, axis=(-2, -1))))

    K = len(P.grid) - 1
    slack = float(np.max(np.abs(np.diff(distance)), initial=0)) + tol
    tau = None
    for k in range(1, K + 1):
        if distance[k] <= tol:
            tau = float(P.grid[k])
            break
        right = distance[k + 1] if k < K else np.inf
        if distance[k] <= distance[k - 1] and distance[k] <= right \
                and distance[k] <= slack:
            t, refined = refine(P.grid[k - 1], P.grid[min(k + 1, K)])
            log.debug('refined candidate period %.12g: distance %g',
                      t, refined)
            if refined <= tol:
                tau = float(t)
                break
    if tau is None:
        raise NoCycleFound('observable does not return within the horizon',
                           horizon=P.duration,
                           min_distance=float(np.min(distance[1:],
                                                     initial=np.inf)))

    log.info('observable returns after tau = %.12g', tau)
    dt = P.grid[1] - P.grid[0]
    steps = max(1, int(np.ceil(tau / dt - 1e-9)))
    periodic = propagator(P.generator, tau, steps=steps, order=P.order)
    C = cyclic_evolution(sys, periodic)
    returned = Decomposition.from_frame(periodic.backward[-1] @ sys.right)
    log.debug('Hausdorff distance at the period: %g',
              hausdorff_distance(returned, C.start))
    return C


@dataclass(frozen=True, eq=False)
class PhaseReport:
    """Observable-geometric phases of a cyclic evolution.

    The phases satisfy :math:`\\beta_n = \\theta_n - \\int_0^\\tau
    \\langle\\psi^*_n|h(t)|\\psi_n\\rangle dt + 2\\pi k_n`, where
    :math:`k_n` counts the windings of
    :math:`\\langle\\psi^*_n, U(0, t)\\psi_n\\rangle` around the origin
    beyond the principal branch of :math:`\\theta_n`. They are defined
    modulo :math:`2\\pi`, and are complex in general.
    """

    tau: float
    beta: np.ndarray
    theta: np.ndarray
    dynamical: np.ndarray
    holonomy_diag: np.ndarray
    """:math:`e^{i\\beta_n}`."""
    branch_windings: np.ndarray

    def to_dict(self):
        return {'tau': self.tau,
                'theta': _pairs(self.theta),
                'dynamical': _pairs(self.dynamical),
                'beta': _pairs(self.beta),
                'windings': [int(k) for k in self.branch_windings],
                'holonomy_diag': _pairs(self.holonomy_diag)}


def _windings(C):
    R = np.asarray(C.X0_system.right)
    L = np.asarray(C.X0_system.left)
    overlaps = np.einsum('in,kij,jn->kn', L.conj(), C.propagator.backward, R)
    tracked = np.unwrap(np.angle(overlaps), axis=0)[-1]
    return np.rint((tracked - C.theta.real) / (2 * np.pi)).astype(int)


def geometric_phases(C, h=None):
    """Observable-geometric phases :math:`\\beta_n`.

    The dynamical phases :math:`\\int_0^\\tau
    \\langle\\psi^*_n|h(t)|\\psi_n\\rangle dt` are computed by adaptive
    quadrature.

    Parameters
    ----------
    C : CyclicEvolution
        Cyclic evolution from :func:`detect_cycle`.
    h : callable, optional
        Generator; defaults to that of the propagator of `C`.

    Returns
    -------
    PhaseReport

    Examples
    --------
    A Hermitian generator gives real phases:

    >>> import numpy as np
    >>> from nhqm.evolve import propagator
    >>> from nhqm.matkit import eig_general
    >>> from nhqm.paraops import pauli
    >>> sx, _, sz = pauli()
    >>> X0 = np.cos(0.4) * sz + np.sin(0.4) * sx
    >>> P = propagator(lambda t: -sz, np.pi, 1000)
    >>> report = geometric_phases(cyclic_evolution(eig_general(X0), P))
    >>> bool(np.all(np.abs(report.beta.imag) < 1e-12))
    True

    """
    if h is None:
        h = C.propagator.generator
    R = np.asarray(C.X0_system.right)
    L = np.asarray(C.X0_system.left)
    d = C.dim

    def integrand(t):
        values = np.einsum('in,ij,jn->n', L.conj(), as_matrix(h(t)), R)
        return np.concatenate((values.real, values.imag))

    log.debug('integrating dynamical phases')
    result, _ = quad_vec(integrand, 0, C.tau, epsabs=1e-10, epsrel=1e-10)
    dynamical = result[:d] + 1j * result[d:]
    windings = _windings(C)
    beta = C.theta + 2 * np.pi * windings - dynamical
    return PhaseReport(C.tau, beta, np.array(C.theta), dynamical,
                       np.exp(1j * beta), windings)


def _wrap(x):
    return x - 2 * np.pi * np.rint(x / (2 * np.pi))


def geometric_phases_loop(C, alphas):
    """Observable-geometric phases as loop integrals.

    With gauge functions :math:`\\alpha_n` satisfying
    :math:`\\alpha_n(\\tau) - \\alpha_n(0) = \\theta_n` modulo
    :math:`2\\pi`, the states :math:`\\bar\\psi_n(t) =
    e^{-i\\alpha_n(t)}U(0, t)\\psi_n` trace closed loops and

    .. math::

        \\beta_n = \\int_0^\\tau i\\langle\\bar\\psi^*_n(t)|
        \\bar\\psi'_n(t)\\rangle dt.

    Derivatives are taken by finite differences on the propagator grid.

    Raises
    ------
    BadGauge
        If some :math:`\\alpha_n` does not close the loop.
    """
    if len(alphas) != C.dim:
        raise DimensionMismatch(f'need {C.dim} gauge functions, '
                                f'got {len(alphas)}')
    P = C.propagator
    times = P.grid
    gauge = np.asarray([[alpha(t) for alpha in alphas] for t in times],
                       dtype=complex)
    closure = gauge[-1] - gauge[0] - C.theta
    windings = np.rint(closure.real / (2 * np.pi)).astype(int)
    if np.any(np.abs(_wrap(closure.real)) > 1e-8) \
            or np.any(np.abs(closure.imag) > 1e-8):
        raise BadGauge('gauge functions do not close the loop',
                       closure=complex(closure[np.argmax(np.abs(
                           _wrap(closure.real)) + np.abs(closure.imag))]))

    R = np.asarray(C.X0_system.right)
    L = np.asarray(C.X0_system.left)
    factor = np.exp(-1j * gauge)[:, np.newaxis, :]
    states = (P.backward @ R) * factor
    duals = (np.conj(np.swapaxes(P.forward, -2, -1)) @ L) / factor.conj()
    tangent, _ = derivative(states, times[1] - times[0])
    integrand = 1j * np.einsum('kin,kin->kn', duals.conj(), tangent)
    beta = trapezoid(integrand, times, axis=0)
    theta = np.array(C.theta)
    dynamical = theta + 2 * np.pi * windings - beta
    return PhaseReport(C.tau, beta, theta, dynamical, np.exp(1j * beta),
                       windings)
