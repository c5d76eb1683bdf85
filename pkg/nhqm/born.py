#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Measurement of non-Hermitian observables.

The expectation of an observable :math:`A` at a state :math:`\\psi` in the
measurement context of a metric :math:`G` is

.. math::

    \\langle A\\rangle_{\\psi, G} =
    \\frac{\\langle\\psi, G^{1/2} A G^{-1/2}\\psi\\rangle}{\\|\\psi\\|^2}.

It is real whenever :math:`G` is a metric for :math:`A`, and in general
depends on which metric is chosen. States need not be normalized: every
formula divides by :math:`\\|\\psi\\|^2`, so that a state and any nonzero
multiple of it give the same results.

Example
-------
>>> import numpy as np
>>> from nhqm.paraops import MetricOp
>>> A = [[0, 1], [4, 0]]
>>> G = MetricOp.from_matrix(np.diag([1, 0.25]))
>>> psi = np.asarray([1, -1j]) / np.sqrt(2)
>>> abs(expect(A, G, psi)) < 1e-12
True
>>> bool(np.isclose(naive_expect(A, psi), 1.5j))
True

"""
from dataclasses import dataclass
import logging

import numpy as np

from . import config
from .errors import (ComplexSpectrum, DegenerateOverlap, NotAMetric,
                     NotHermitian, NumericalFailure, ZeroState)
from .matkit import as_matrix, as_vector, hermiticity_defect, is_hermitian
from .paraops import MetricOp, is_metric_for, metric_from_eigensystem

__all__ = ('MeasurementOutcome', 'expect', 'naive_expect', 'expect_discrete',
           'biorthogonal_expect', 'hermitian_consistency', 'collapse_states')

log = logging.getLogger(__name__)

# Largest probability deficit that is silently renormalized.
_MAX_DEFICIT = 1e-10


def _norm2(psi):
    norm2 = float(np.vdot(psi, psi).real)
    if norm2 == 0:
        raise ZeroState('state vector is zero')
    return norm2


@dataclass(frozen=True, eq=False)
class MeasurementOutcome:
    """Expectation and outcome probabilities of a discrete measurement."""

    expectation: complex
    """:math:`\\sum_n \\lambda_n p_n`."""

    probabilities: np.ndarray
    """Probabilities :math:`p_n` of collapsing to the eigenstates
    :math:`e_n`, summing to one."""

    context: MetricOp
    """Metric defining the measurement context."""

    basis_labels: np.ndarray
    """Eigenvalues labelling the outcomes."""

    def to_dict(self):
        return {'expectation': [self.expectation.real,
                                self.expectation.imag],
                'probabilities': [float(p) for p in self.probabilities],
                'eigenvalues': [float(z.real) for z in self.basis_labels]}


def expect(A, G, psi):
    """Expectation :math:`\\langle A\\rangle_{\\psi, G}`.

    Parameters
    ----------
    A : numpy.ndarray
        Observable.
    G : nhqm.paraops.MetricOp
        Metric defining the measurement context.
    psi : numpy.ndarray
        Nonzero state, not necessarily normalized.

    Raises
    ------
    ZeroState
        If `psi` is zero.
    """
    A = as_matrix(A)
    psi = as_vector(psi, A.shape[0])
    norm2 = _norm2(psi)
    return complex(np.vdot(psi, G.sqrt @ (A @ (G.inv_sqrt @ psi))) / norm2)


def naive_expect(A, psi):
    """The usual Born rule :math:`\\langle\\psi, A\\psi\\rangle/\\|\\psi\\|^2`.

    For non-Hermitian `A` this is not a physical expectation; it equals
    :func:`expect` with the trivial metric.
    """
    A = as_matrix(A)
    psi = as_vector(psi, A.shape[0])
    norm2 = _norm2(psi)
    if not is_hermitian(A):
        log.debug('naive expectation of a non-Hermitian operator is not '
                  'a physical quantity')
    return complex(np.vdot(psi, A @ psi) / norm2)


def expect_discrete(sys, psi):
    """Discrete measurement in the eigenbasis of an observable.

    The measurement context is the canonical metric
    :math:`G = \\sum_n |e^*_n\\rangle\\langle e^*_n|`, and the probability of
    outcome :math:`\\lambda_n` is
    :math:`p_n = |\\langle e^*_n, G^{-1/2}\\psi\\rangle|^2/\\|\\psi\\|^2`.

    Raises
    ------
    ZeroState
        If `psi` is zero.
    ComplexSpectrum
        If the observable has a complex eigenvalue.
    NumericalFailure
        If the probabilities fail to sum to one by more than rounding.

    Examples
    --------
    >>> from nhqm.matkit import eig_general
    >>> from nhqm.paraops import bloch_state, deformed_pauli
    >>> sz = deformed_pauli(0.5)[2]
    >>> outcome = expect_discrete(eig_general(sz), bloch_state(1.0, 0.3))
    >>> print(round(outcome.expectation.real, 12), round(np.cos(1.0), 12))
    0.540302305868 0.540302305868

    """
    psi = as_vector(psi, sys.dim)
    norm2 = _norm2(psi)
    labels = sys.eigenvalues
    tol_spec = config.current().tol_spec * max(1.0, np.max(np.abs(labels)))
    max_imag = float(np.max(np.abs(labels.imag)))
    if max_imag > tol_spec:
        raise ComplexSpectrum('observable has a complex spectrum',
                              max_imag=max_imag)
    G = metric_from_eigensystem(sys)
    amplitudes = sys.left.conj().T @ (G.inv_sqrt @ psi)
    probabilities = np.abs(amplitudes) ** 2 / norm2
    deficit = 1 - probabilities.sum()
    if abs(deficit) > _MAX_DEFICIT:
        raise NumericalFailure('outcome probabilities do not sum to one',
                               deficit=deficit)
    probabilities = np.clip(probabilities, 0, None)
    probabilities /= probabilities.sum()
    expectation = complex(np.sum(labels.real * probabilities))
    return MeasurementOutcome(expectation, probabilities, G, labels.real)


def biorthogonal_expect(T, sys, psi):
    """Expectation in a biorthogonal frame.

    With :math:`a_n = \\langle e^*_n, \\psi\\rangle` and
    :math:`\\tilde\\psi = \\sum_n a_n e^*_n`, returns
    :math:`\\langle\\tilde\\psi, T\\psi\\rangle /
    \\langle\\tilde\\psi, \\psi\\rangle`. This is real whenever the matrix
    of `T` in the frame of `sys` is Hermitian, and equals
    :func:`expect` at :math:`G^{1/2}\\psi` for the canonical metric of `sys`.

    Raises
    ------
    DegenerateOverlap
        If :math:`\\langle\\tilde\\psi, \\psi\\rangle` vanishes.
    """
    T = as_matrix(T)
    psi = as_vector(psi, sys.dim)
    _norm2(psi)
    L = sys.left
    dual = L @ (L.conj().T @ psi)
    overlap = np.vdot(dual, psi)
    if abs(overlap) <= 1e-12 * np.linalg.norm(dual) * np.linalg.norm(psi):
        raise DegenerateOverlap('biorthogonal normalization vanishes',
                                overlap=overlap)
    return complex(np.vdot(dual, T @ psi) / overlap)


def hermitian_consistency(A, G, psi, tol=None):
    """Check that a metric does not change the expectation of a Hermitian
    observable.

    Raises
    ------
    NotHermitian
        If `A` is not Hermitian.
    NotAMetric
        If `G` is not a metric for `A`.

    Examples
    --------
    >>> from nhqm.paraops import MetricOp, pauli
    >>> G = MetricOp.from_matrix(np.diag([2, 3]))
    >>> hermitian_consistency(pauli()[2], G, [0.6, 0.8j])
    True

    """
    tol = config.resolve(tol, 'tol')
    A = as_matrix(A)
    if not is_hermitian(A):
        raise NotHermitian('observable is not Hermitian',
                           defect=hermiticity_defect(A))
    if not is_metric_for(G, A):
        raise NotAMetric('metric does not make the observable Hermitian')
    return abs(expect(A, G, psi) - naive_expect(A, psi)) <= tol


def collapse_states(sys):
    """States left behind by each outcome of a discrete measurement.

    Outcome :math:`\\lambda_n` leaves the system in the eigenstate
    :math:`e_n`, normalized to unit length with the phase convention of
    :func:`nhqm.matkit.eig_general`.
    """
    return [sys.right[:, n].copy() for n in range(sys.dim)]
