#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from dataclasses import dataclass
import logging

import numpy as np
from scipy.integrate import cumulative_trapezoid

from .. import config
from ..errors import DimensionMismatch, NotCyclic, NotInFiber, SingularFrame
from ..matkit import as_matrix
from ._decomposition import Decomposition, hausdorff_distance

__all__ = ('canonical_connection', 'transported_connection',
           'HorizontalLift', 'horizontal_lift', 'holonomy',
           'holonomy_diagonal')

log = logging.getLogger(__name__)


def derivative(frames, dt):
    """Time derivative of uniformly sampled matrices.

    Second-order centered differences are improved by one Richardson step
    against the doubled stencil in the interior.

    Returns
    -------
    derivative : numpy.ndarray
        Estimated derivative, same shape as `frames`.
    richardson : float
        Largest change made by the Richardson step, an estimate of the error
        of the plain centered differences.
    """
    n = len(frames)
    if n < 3:
        d1 = np.broadcast_to((frames[-1] - frames[0]) / dt, frames.shape)
        return np.array(d1), 0.0
    d1 = np.gradient(frames, dt, axis=0, edge_order=2)
    if n < 5:
        return d1, 0.0
    d2 = (frames[4:] - frames[:-4]) / (4 * dt)
    result = d1.copy()
    result[2:-2] = (4 * d1[2:-2] - d2) / 3
    return result, float(np.max(np.abs(result - d1)))


def _diagonal(X, reference):
    """Diagonal of :math:`X` in the frame of a decomposition."""
    E = reference.frame
    L = reference.dual
    return np.einsum('in,...ij,jn->...n', L.conj(), X, E)


def _assemble(values, reference):
    """:math:`\\sum_n v_n |e_n\\rangle\\langle e^*_n|`, batched over leading
    axes of `values`."""
    E = reference.frame
    L = reference.dual
    return (E * values[..., np.newaxis, :]) @ L.conj().T


def _check_frame(P):
    kappa = np.linalg.cond(P)
    if not np.all(np.isfinite(kappa)) or np.any(
            kappa * np.finfo(float).eps >= 1):
        raise SingularFrame('frame is singular', kappa=np.max(kappa))


def canonical_connection(P, Q, O0):
    """Canonical connection :math:`\\check\\Omega_P(Q) = P^{-1}\\star Q`.

    The operator :math:`P^{-1}Q` is reduced to its diagonal in the frame of
    the measurement point `O0`:

    .. math::

        P^{-1}\\star Q = \\sum_n \\langle e^*_n|P^{-1}Q|e_n\\rangle\\,
        |e_n\\rangle\\langle e^*_n|.

    The result commutes with every projection of `O0`.

    Raises
    ------
    SingularFrame
        If `P` is not invertible.

    Examples
    --------
    >>> import numpy as np
    >>> O0 = Decomposition.standard(2)
    >>> print(canonical_connection(np.eye(2), [[1, 2], [3, 4]], O0).real)
    [[1. 0.]
     [0. 4.]]

    """
    P = as_matrix(P, 'frame')
    Q = as_matrix(Q, 'tangent')
    if P.shape != Q.shape or P.shape[0] != O0.dim:
        raise DimensionMismatch('frame, tangent and decomposition differ in '
                                'dimension')
    _check_frame(P)
    return _canonical(P, Q, O0)


def _canonical(P, Q, O0):
    return _assemble(_diagonal(np.linalg.solve(P, Q), O0), O0)


def transported_connection(T, O0):
    """Canonical connection carried to the measurement point
    :math:`TO_0T^{-1}`.

    Frames :math:`V` over :math:`O_0` correspond to frames :math:`VT^{-1}`
    over :math:`O_0' = TO_0T^{-1}` with the same observable. The returned
    connection is the push-forward of the canonical connection of `O0`
    along this correspondence,

    .. math::

        \\Omega'_W(X) = T\\,\\check\\Omega_{WT}(XT)\\,T^{-1},

    and takes values that commute with the projections of :math:`O_0'`.

    Returns
    -------
    callable
        ``connection(frames, tangents)``, evaluated over leading axes.

    Examples
    --------
    >>> import numpy as np
    >>> O0 = Decomposition.standard(2)
    >>> T = np.asarray([[1, 1], [0, 2]])
    >>> connection = transported_connection(T, O0)
    >>> W, X = np.eye(2), np.asarray([[1, 2], [3, 4]])
    >>> np.allclose(connection(W, X),
    ...             canonical_connection(W, X, O0.conjugated(T)))
    True

    """
    T = as_matrix(T, 'transformation')
    if T.shape[0] != O0.dim:
        raise DimensionMismatch('transformation does not match dimension')
    _check_frame(T)
    T_inv = np.linalg.inv(T)

    def connection(P, Q):
        return T @ _canonical(P @ T, Q @ T, O0) @ T_inv

    return connection


@dataclass(frozen=True, eq=False)
class HorizontalLift:
    """Horizontal lift of an observable path to the frame bundle."""

    times: np.ndarray
    """Grid times."""

    frames: np.ndarray
    """Lifted frames :math:`\\tilde V(t_k)`, shape ``(K + 1, d, d)``."""

    initial: np.ndarray
    """Starting frame :math:`V_0`."""

    reference: Decomposition
    """Measurement point :math:`O_0`."""

    transport_defect: float
    """Largest :math:`\\|\\check\\Omega_{\\tilde V}(\\tilde V')\\|` along the
    lift; zero for an exactly horizontal curve."""

    ode_agreement: float
    """Largest distance between the closed-form lift and the lift obtained
    by integrating the gauge equation."""

    richardson: float
    """Estimated error of the finite-difference derivatives."""


def horizontal_lift(P, O0, V0, start=None, tol=None, connection=None):
    """Horizontal lift of the path :math:`V(t) = U(0, t)V_0`.

    The lift is assembled in closed form,

    .. math::

        \\tilde V(t) = \\sum_n \\exp\\left(-\\int_0^t
        \\langle e^*_n|\\Omega_V(V')|e_n\\rangle ds\\right)
        V(t)|e_n\\rangle\\langle e^*_n|,

    with the exact tangent :math:`V' = iVV_0^{-1}h(t)V_0`; for the canonical
    connection :math:`\\Omega_V(V') = \\check\\Omega_V(V')`. It is checked
    two ways: the connection of its finite-difference tangent must vanish,
    and it must agree with :math:`\\Gamma(t)G(t)` where :math:`G' =
    -\\Omega_\\Gamma(\\Gamma')G` is integrated along the unlifted path
    :math:`\\Gamma = V`.

    Parameters
    ----------
    P : nhqm.evolve.Propagator
        Propagator on a uniform grid.
    O0 : Decomposition
        Measurement point.
    V0 : numpy.ndarray
        Starting frame.
    start : Decomposition, optional
        Starting point of the observable path. If given, `V0` must map
        `O0` onto it.
    tol : float, optional
        Hausdorff tolerance of the fiber check. Defaults to ``tol_cycle``.
    connection : callable, optional
        ``connection(frames, tangents)`` evaluated over leading axes, with
        values commuting with the projections of `O0`, such as the result
        of :func:`transported_connection`. Defaults to the canonical
        connection of `O0`.

    Returns
    -------
    HorizontalLift

    Raises
    ------
    NotInFiber
        If `V0` does not map `O0` onto `start`.
    SingularFrame
        If `V0` is not invertible.
    """
    tol = config.resolve(tol, 'tol_cycle')
    V0 = as_matrix(V0, 'starting frame')
    if V0.shape[0] != P.dim or O0.dim != P.dim:
        raise DimensionMismatch('starting frame, decomposition and '
                                'propagator differ in dimension')
    _check_frame(V0)
    if start is not None:
        distance = hausdorff_distance(O0.conjugated(V0), start)
        if distance > tol * np.linalg.cond(V0):
            raise NotInFiber('starting frame does not map the measurement '
                             'point onto the start of the path',
                             distance=distance)

    if connection is None:
        def connection(frames, tangents):
            return _canonical(frames, tangents, O0)

    times = P.grid
    dt = times[1] - times[0]
    path = P.backward @ V0
    H = np.asarray([P.generator(t) for t in times], dtype=complex)
    velocity = path @ (1j * np.linalg.solve(V0, H @ V0))
    rate = _diagonal(connection(path, velocity), O0)
    phases = np.exp(-cumulative_trapezoid(rate, times, axis=0, initial=0))
    frames = path @ _assemble(phases, O0)

    log.debug('integrating gauge equation along the unlifted path')
    tangent, _ = derivative(path, dt)
    omega = _diagonal(connection(path, tangent), O0)
    gauge = np.exp(-cumulative_trapezoid(omega, times, axis=0, initial=0))
    ode_agreement = float(np.max(np.linalg.norm(
        frames - path @ _assemble(gauge, O0), ord=2, axis=(-2, -1))))

    tangent, richardson = derivative(frames, dt)
    residual = connection(frames, tangent)
    transport_defect = float(np.max(np.linalg.norm(
        residual, ord=2, axis=(-2, -1))))
    if transport_defect > config.current().tol_lift:
        log.warning('lift is not horizontal to within %g: %g',
                    config.current().tol_lift, transport_defect)

    frames.setflags(write=False)
    return HorizontalLift(times, frames, V0, O0, transport_defect,
                          ode_agreement, richardson)


def holonomy(lift, C, O0=None, tol=None):
    """Holonomy element :math:`\\tilde V(\\tau)` of a cyclic evolution.

    Raises
    ------
    NotCyclic
        If the lift does not end at the period of `C`, or its endpoint
        does not map the measurement point back onto the starting
        decomposition.
    """
    tol = config.resolve(tol, 'tol_cycle')
    if O0 is None:
        O0 = lift.reference
    end = lift.times[-1]
    if abs(end - C.tau) > 1e-12 * max(1.0, C.tau):
        raise NotCyclic('lift does not end at the period',
                        end=end, tau=C.tau)
    final = lift.frames[-1]
    distance = hausdorff_distance(O0.conjugated(final),
                                  O0.conjugated(lift.frames[0]))
    if distance > tol * np.linalg.cond(final):
        raise NotCyclic('lift does not close over the observable path',
                        distance=distance)
    return np.array(final)


def holonomy_diagonal(element, V0, O0):
    """Phase factors :math:`\\langle e^*_n|V_0^{-1}\\tilde V(\\tau)
    |e_n\\rangle = e^{i\\beta_n}` carried by a holonomy element."""
    return _diagonal(np.linalg.solve(as_matrix(V0), element), O0)
