#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from dataclasses import dataclass
import logging
from typing import Optional

import numpy as np

from ..errors import DomainError, InputError

__all__ = ('pauli', 'deformed_pauli', 'deformed_pauli_metric', 'TwoLevel',
           'two_level_hamiltonian', 'two_level_spectrum', 'bloch_state',
           'bloch_observable', 'metric_dependent_operator', 'example_metric',
           'jordan_block', 'build', 'BUILDERS')

log = logging.getLogger(__name__)


def pauli():
    """The Pauli matrices :math:`(\\sigma_x, \\sigma_y, \\sigma_z)`."""
    return (np.asarray([[0, 1], [1, 0]], dtype=complex),
            np.asarray([[0, -1j], [1j, 0]], dtype=complex),
            np.asarray([[1, 0], [0, -1]], dtype=complex))


def deformed_pauli(omega):
    """Deformed Pauli matrices.

    Parameters
    ----------
    omega : float
        Deformation angle, :math:`|\\omega| < \\pi/2`.

    Returns
    -------
    sx, sy, sz : numpy.ndarray
        :math:`\\sigma^\\omega_x`, :math:`\\sigma^\\omega_y = \\sigma_y`,
        :math:`\\sigma^\\omega_z`. Each has spectrum :math:`\\{-1, 1\\}`, and
        they obey :math:`\\sigma^\\omega_x\\sigma^\\omega_y =
        i\\sigma^\\omega_z` and its cyclic permutations.

    Examples
    --------
    >>> import numpy as np
    >>> sx, sy, sz = deformed_pauli(0.3)
    >>> np.allclose(sx @ sy, 1j * sz)
    True
    >>> deformed_pauli(2)
    Traceback (most recent call last):
      ...
    nhqm.errors.DomainError: deformation angle must satisfy |omega| < pi/2

    """
    if not abs(omega) < 0.5 * np.pi:
        raise DomainError('deformation angle must satisfy |omega| < pi/2',
                          omega=omega)
    c = np.cos(omega)
    s = 1j * np.sin(omega)
    sx = np.asarray([[-s, 1], [1, s]]) / c
    sy = pauli()[1]
    sz = np.asarray([[1, s], [s, -1]]) / c
    return sx, sy, sz


def deformed_pauli_metric(omega):
    """Metric under which all three deformed Pauli matrices are Hermitian.

    .. math::

        G = \\frac{1}{\\cos^2\\omega}\\begin{pmatrix} 1 & i\\sin\\omega \\\\
        -i\\sin\\omega & 1 \\end{pmatrix}

    Its square root maps :math:`\\sigma^\\omega_j` to :math:`\\sigma_j`.

    Examples
    --------
    >>> from nhqm.paraops import MetricOp, hermitianize
    >>> G = MetricOp.from_matrix(deformed_pauli_metric(0.3))
    >>> np.allclose(hermitianize(deformed_pauli(0.3)[2], G), pauli()[2])
    True

    """
    if not abs(omega) < 0.5 * np.pi:
        raise DomainError('deformation angle must satisfy |omega| < pi/2',
                          omega=omega)
    s = 1j * np.sin(omega)
    return np.asarray([[1, s], [-s, 1]]) / np.cos(omega) ** 2


@dataclass(frozen=True)
class TwoLevel:
    """Spectral data of the two-level Hamiltonian
    :math:`\\begin{pmatrix} re^{i\\theta} & \\gamma \\\\ \\gamma &
    re^{-i\\theta}\\end{pmatrix}`."""

    r: float
    theta: float
    gamma: float

    lam_plus: complex
    """Upper eigenvalue :math:`r\\cos\\theta + \\sqrt{\\gamma^2 -
    r^2\\sin^2\\theta}`."""

    lam_minus: complex
    """Lower eigenvalue."""

    phi: Optional[float]
    """Angle with :math:`\\sin\\phi = (r/\\gamma)\\sin\\theta`, or None in the
    broken regime."""

    broken: bool
    """True when :math:`\\gamma^2 \\le r^2\\sin^2\\theta`, so that the
    spectrum is complex."""

    @property
    def omega(self):
        """Eigenvalue gap :math:`2\\sqrt{\\gamma^2 - r^2\\sin^2\\theta}`."""
        return (self.lam_plus - self.lam_minus).real

    @property
    def matrix(self):
        return two_level_hamiltonian(self.r, self.theta, self.gamma)


def two_level_hamiltonian(r, theta, gamma):
    """Two-level Hamiltonian with complex diagonal.

    Examples
    --------
    >>> print(two_level_hamiltonian(0, 0.3, 1).real)
    [[0. 1.]
     [1. 0.]]

    """
    return np.asarray([[r * np.exp(1j * theta), gamma],
                       [gamma, r * np.exp(-1j * theta)]], dtype=complex)


def two_level_spectrum(r, theta, gamma):
    """Closed-form spectrum of :func:`two_level_hamiltonian`.

    In the broken regime the returned record is flagged rather than an error
    raised, so that such matrices can still be classified.

    Examples
    --------
    >>> tl = two_level_spectrum(1, np.pi / 2, 2)
    >>> print(round(tl.lam_plus.real, 6), round(tl.phi, 6))
    1.732051 0.523599
    >>> two_level_spectrum(1, np.pi / 2, 0.5).broken
    True

    """
    disc = gamma ** 2 - (r * np.sin(theta)) ** 2
    broken = not disc > 0
    root = np.sqrt(complex(disc))
    center = r * np.cos(theta)
    if broken:
        log.warning('two-level Hamiltonian is in the broken regime: '
                    'gamma^2 - r^2 sin^2 theta = %g', disc)
        phi = None
    else:
        phi = float(np.arcsin(r * np.sin(theta) / gamma))
    return TwoLevel(r, theta, gamma, center + root, center - root, phi, broken)


def bloch_state(theta, phi):
    """The state
    :math:`(\\cos\\frac\\theta2,\\ e^{i\\phi}\\sin\\frac\\theta2)`.
    """
    return np.asarray([np.cos(0.5 * theta),
                       np.exp(1j * phi) * np.sin(0.5 * theta)])


def bloch_observable(phi):
    """Observable :math:`\\cos\\phi\\,\\sigma_z + \\sin\\phi\\,\\sigma_x` with
    spectrum :math:`\\{-1, 1\\}`.

    Its eigenvector for :math:`+1` is :func:`bloch_state` at polar angle
    `phi` and zero azimuth.

    Examples
    --------
    >>> X = bloch_observable(0.7)
    >>> np.allclose(X @ bloch_state(0.7, 0), bloch_state(0.7, 0))
    True

    """
    sx, _, sz = pauli()
    return np.cos(phi) * sz + np.sin(phi) * sx


def metric_dependent_operator(delta):
    """Operator with spectrum :math:`\\pm\\sqrt\\delta` admitting a
    two-parameter family of metrics (see :func:`example_metric`).

    Examples
    --------
    >>> print(metric_dependent_operator(0.25).real)
    [[ 0.625 -0.375]
     [ 0.375 -0.625]]

    """
    if not delta > 0:
        raise DomainError('delta must be positive', delta=delta)
    return 0.5 * np.asarray([[1 + delta, -1 + delta],
                             [1 - delta, -1 - delta]], dtype=complex)


def example_metric(delta, r_plus, r_minus):
    """Metrics of :func:`metric_dependent_operator`.

    Every choice of positive weights `r_plus` and `r_minus` yields a metric
    for the same operator.

    Examples
    --------
    >>> print(example_metric(0.25, 1, 1).real)
    [[10. -6.]
     [-6. 10.]]

    """
    if not delta > 0:
        raise DomainError('delta must be positive', delta=delta)
    if not (r_plus > 0 and r_minus > 0):
        raise DomainError('metric weights must be positive',
                          r_plus=r_plus, r_minus=r_minus)
    a = delta ** -0.5
    off = 1 - 1 / delta
    m_plus = np.asarray([[(1 + a) ** 2, off], [off, (1 - a) ** 2]])
    m_minus = np.asarray([[(1 - a) ** 2, off], [off, (1 + a) ** 2]])
    return (r_plus * m_plus + r_minus * m_minus).astype(complex)


def jordan_block(dim=2):
    """Nilpotent Jordan block, the standard non-diagonalizable matrix."""
    return np.eye(dim, k=1, dtype=complex)


BUILDERS = {
    'pauli-x': (lambda omega=0: deformed_pauli(omega)[0], ('omega',)),
    'pauli-y': (lambda omega=0: deformed_pauli(omega)[1], ('omega',)),
    'pauli-z': (lambda omega=0: deformed_pauli(omega)[2], ('omega',)),
    'minus-sigma-z': (lambda omega=0: -deformed_pauli(omega)[2], ('omega',)),
    'twolevel': (lambda r=1, theta=0, gamma=1:
                 two_level_hamiltonian(r, theta, gamma),
                 ('r', 'theta', 'gamma')),
    'metric35': (lambda delta=0.25: metric_dependent_operator(delta),
                 ('delta',)),
    'bloch': (lambda phi=0: bloch_observable(phi), ('phi',)),
    'born-a': (lambda: np.asarray([[0, 1], [4, 0]], dtype=complex), ()),
    'jordan': (lambda dim=2: jordan_block(int(dim)), ('dim',)),
}
"""Named operator builders understood by :func:`build`."""


def build(spec):
    """Build an operator from a string such as ``'pauli-x:omega=0.3'``.

    The name is followed by an optional colon and comma-separated
    ``key=value`` parameters.

    Examples
    --------
    >>> print(build('twolevel:r=0,gamma=2').real)
    [[0. 2.]
     [2. 0.]]
    >>> build('nonsense')
    Traceback (most recent call last):
      ...
    nhqm.errors.InputError: unknown operator 'nonsense'

    """
    name, _, params = spec.partition(':')
    name = name.strip()
    try:
        func, allowed = BUILDERS[name]
    except KeyError:
        raise InputError(f'unknown operator {name!r}',
                         choices=', '.join(sorted(BUILDERS)))
    kwargs = {}
    for item in filter(None, (s.strip() for s in params.split(','))):
        key, sep, value = item.partition('=')
        key = key.strip()
        if not sep or key not in allowed:
            raise InputError(f'bad parameter {item!r} for {name!r}',
                             allowed=', '.join(allowed))
        try:
            kwargs[key] = float(value)
        except ValueError:
            raise InputError(f'parameter {key!r} is not a number: {value!r}')
    return func(**kwargs)
