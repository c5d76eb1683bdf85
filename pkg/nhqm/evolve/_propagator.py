#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from dataclasses import dataclass
import logging
from typing import Callable

import numpy as np
from scipy import linalg

from .. import config
from ..errors import DomainError, NumericalFailure, ZeroState
from ..matkit import as_matrix, as_vector, op_norm
from ..paraops import para_hermitian_system

__all__ = ('Propagator', 'propagator', 'evolve_state')

log = logging.getLogger(__name__)

# Largest number of grid nodes at which the generator is classified.
_MAX_CHECKS = 256

_GAUSS = np.sqrt(3) / 6


def _exponents(h, t0, dt, order):
    """Magnus exponents :math:`\\Omega` of steps starting at `t0`."""
    t0 = np.atleast_1d(t0)
    dt = np.broadcast_to(dt, t0.shape)
    if order == 2:
        A = np.asarray([h(t) for t in t0 + 0.5 * dt], dtype=complex)
        return -1j * dt[:, np.newaxis, np.newaxis] * A
    A1 = -1j * np.asarray([h(t) for t in t0 + (0.5 - _GAUSS) * dt],
                          dtype=complex)
    A2 = -1j * np.asarray([h(t) for t in t0 + (0.5 + _GAUSS) * dt],
                          dtype=complex)
    dt = dt[:, np.newaxis, np.newaxis]
    return (0.5 * dt * (A1 + A2)
            + (np.sqrt(3) / 12) * dt ** 2 * (A2 @ A1 - A1 @ A2))


def _expm(Omega):
    with np.errstate(over='ignore', invalid='ignore'):
        result = linalg.expm(Omega)
    if not np.all(np.isfinite(result)):
        raise NumericalFailure('propagator step overflowed')
    return result


@dataclass(frozen=True, eq=False)
class Propagator:
    """Evolution system :math:`U(t, s)` sampled on a time grid.

    :math:`U(t, s)` maps states at time :math:`s` to states at time
    :math:`t` under :math:`i\\psi'(t) = h(t)\\psi(t)`, so that
    :math:`U(t, t) = I` and :math:`U(t, r)U(r, s) = U(t, s)`.
    """

    grid: np.ndarray
    """Strictly increasing times :math:`t_0 = 0, \\ldots, t_K = T`."""

    steps: np.ndarray
    """Step propagators :math:`U(t_{k+1}, t_k)`, shape ``(K, d, d)``."""

    forward: np.ndarray
    """Cumulative propagators :math:`U(t_k, 0)`, shape ``(K + 1, d, d)``."""

    backward: np.ndarray
    """Inverse propagators :math:`U(0, t_k)`, shape ``(K + 1, d, d)``."""

    generator: Callable
    """The generator :math:`t \\mapsto h(t)`."""

    order: int
    """Order of the Magnus integrator, 2 or 4."""

    @property
    def dim(self):
        return self.forward.shape[-1]

    @property
    def duration(self):
        return float(self.grid[-1])

    def between(self, j, i):
        """:math:`U(t_j, t_i)` for grid indices `j` and `i`."""
        return self.forward[j] @ self.backward[i]

    def at(self, t):
        """:math:`U(t, 0)` at an arbitrary time in the grid range.

        Between grid points the last step is replaced by a partial step of
        the same integrator.
        """
        if not self.grid[0] <= t <= self.grid[-1]:
            raise DomainError('time is outside of the propagator grid',
                              t=t, T=self.duration)
        k = min(int(np.searchsorted(self.grid, t, side='right')) - 1,
                len(self.steps))
        dt = t - self.grid[k]
        if dt == 0:
            return self.forward[k].copy()
        step = _expm(_exponents(self.generator, self.grid[k], dt,
                                self.order))[0]
        return step @ self.forward[k]

    def defects(self, samples=64):
        """Composition and invertibility defects.

        Returns
        -------
        composition : float
            Largest :math:`\\|U(t_j, 0) - U(t_j, t_i)U(t_i, 0)\\|` over up to
            `samples` pairs :math:`i \\le j`, with :math:`U(t_j, t_i)`
            formed from the step propagators.
        invertibility : float
            Largest :math:`\\|U(t_k, 0)U(0, t_k) - I\\|`.
        """
        eye = np.eye(self.dim)
        invertibility = float(np.max(np.linalg.norm(
            self.forward @ self.backward - eye, ord=2, axis=(-2, -1))))
        nodes = np.unique(np.linspace(
            0, len(self.steps), min(samples, len(self.grid))).astype(int))
        composition = 0.0
        for i, j in zip(nodes[:-1], nodes[1:]):
            product = eye
            for step in self.steps[i:j]:
                product = step @ product
            composition = max(composition, op_norm(
                self.forward[j] - product @ self.forward[i]))
        return composition, invertibility

    def refined(self):
        """Rebuild the propagator with half the step size."""
        return propagator(self.generator, self.duration,
                          steps=2 * len(self.steps), order=self.order)


def propagator(h, T, steps=None, order=None):
    """Integrate the Schrödinger equation :math:`i\\psi' = h(t)\\psi`.

    Each step of length :math:`\\Delta` is the exponential of a Magnus
    exponent: :math:`-i\\Delta\\,h(t_k + \\Delta/2)` for order 2, or the
    two-point Gauss rule with a single commutator correction for order 4.
    The order guarantees assume that :math:`h` is smooth on the grid.

    Parameters
    ----------
    h : callable
        Generator :math:`t \\mapsto h(t)`, returning a square matrix.
    T : float
        Final time.
    steps : int, optional
        Number of uniform steps. Defaults to ``steps_per_unit_time * T``.
    order : int, optional
        2 or 4. Defaults to the configured order.

    Returns
    -------
    Propagator

    Raises
    ------
    NotParaHermitian
        If :math:`h(t)` fails to be para-Hermitian at a checked grid node.
    NumericalFailure
        If a step overflows.

    Examples
    --------
    >>> import numpy as np
    >>> from nhqm.paraops import deformed_pauli
    >>> sz = deformed_pauli(0.3)[2]
    >>> P = propagator(lambda t: -sz, np.pi, steps=100)
    >>> np.allclose(P.forward[-1], -np.eye(2))
    True

    """
    order = config.resolve(order, 'order')
    if order not in (2, 4):
        raise DomainError('order must be 2 or 4', order=order)
    if not T > 0:
        raise DomainError('final time must be positive', T=T)
    if steps is None:
        steps = int(np.ceil(config.current().steps_per_unit_time * T))
    steps = int(steps)
    if steps < 1:
        raise DomainError('number of steps must be positive', steps=steps)

    grid = np.linspace(0, T, steps + 1)
    dim = as_matrix(h(0.0), 'generator').shape[0]

    log.debug('checking generator on the grid')
    for t in grid[np.unique(np.linspace(
            0, steps, min(_MAX_CHECKS, steps + 1)).astype(int))]:
        para_hermitian_system(h(t), f'generator at t={t:g}')

    log.debug('integrating %d steps of order %d', steps, order)
    dt = np.diff(grid)
    Omega = _exponents(h, grid[:-1], dt, order)
    if Omega.shape[1:] != (dim, dim):
        raise DomainError('generator changes shape along the grid')
    step = _expm(Omega)
    inverse = _expm(-Omega)

    forward = np.empty((steps + 1, dim, dim), dtype=complex)
    backward = np.empty_like(forward)
    forward[0] = backward[0] = np.eye(dim)
    for k in range(steps):
        forward[k + 1] = step[k] @ forward[k]
        backward[k + 1] = backward[k] @ inverse[k]
    if not (np.all(np.isfinite(forward)) and np.all(np.isfinite(backward))):
        raise NumericalFailure('propagator overflowed')

    for value in (grid, step, forward, backward):
        value.setflags(write=False)
    return Propagator(grid, step, forward, backward, h, order)


def evolve_state(P, psi0):
    """Evolve a state along a propagator.

    Returns
    -------
    numpy.ndarray
        :math:`\\psi(t_k) = U(t_k, 0)\\psi_0`, one row per grid time.

    Raises
    ------
    ZeroState
        If `psi0` is zero.

    Examples
    --------
    >>> import numpy as np
    >>> from nhqm.paraops import pauli
    >>> P = propagator(lambda t: pauli()[2], 1.0, steps=10)
    >>> psi = evolve_state(P, [1, 0])
    >>> np.allclose(psi[-1], [np.exp(-1j), 0])
    True

    """
    psi0 = as_vector(psi0, P.dim)
    if not np.any(psi0):
        raise ZeroState('initial state is zero')
    return P.forward @ psi0
