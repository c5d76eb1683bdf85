#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from dataclasses import dataclass, field
import enum
import logging
from typing import Optional

import numpy as np
from scipy import linalg

from .. import config
from ..errors import NonDiagonalizable, NotParaHermitian
from ..matkit import as_matrix, eig_general, hermiticity_defect, op_norm
from ._metric import MetricOp, hermitianize, metric_from_eigensystem

__all__ = ('Kind', 'Classification', 'classify', 'para_hermitian_system')

log = logging.getLogger(__name__)


class Kind(enum.Enum):
    """Operator classes distinguished by :func:`classify`."""

    HERMITIAN = 'Hermitian'
    PARA_HERMITIAN = 'ParaHermitianNonHermitian'
    PARA_UNITARY = 'ParaUnitary'
    UNITARY = 'Unitary'
    COMPLEX_SPECTRUM = 'ComplexSpectrum'
    NON_DIAGONALIZABLE = 'NonDiagonalizable'


@dataclass(frozen=True, eq=False)
class Classification:
    """Result of :func:`classify`."""

    kind: Kind
    """Operator class."""

    spectrum: np.ndarray
    """Eigenvalues, sorted by real then imaginary part."""

    diagnostics: dict = field(default_factory=dict)
    """Named residuals behind the decision: ``hermiticity_defect``
    (relative), ``max_imag``, ``max_unit_defect``, ``kappa``, and for
    para-Hermitian operators ``witness_defect``."""

    witness_metric: Optional[MetricOp] = None
    """Metric that makes the operator Hermitian; present for Hermitian and
    para-Hermitian operators only."""

    def to_dict(self):
        return {'kind': self.kind.value,
                'spectrum': [[z.real, z.imag] for z in self.spectrum],
                'diagnostics': {k: float(v)
                                for k, v in self.diagnostics.items()}}


def _spectral_tol(spectrum, tol_spec):
    radius = np.max(np.abs(spectrum)) if len(spectrum) else 0.0
    return tol_spec * max(1.0, radius)


def classify(T, tol=None, evolution=False):
    """Classify an operator.

    Parameters
    ----------
    T : numpy.ndarray
        Square matrix.
    tol : float, optional
        Relative Hermiticity tolerance. Defaults to ``tol_herm``.
    evolution : bool
        If True, `T` is treated as an evolution operator and tested for
        (para-)unitarity before the observable classes are considered.
        Otherwise only the real axis counts, so that for example
        :math:`i\\sigma_z` has a complex spectrum.

    Returns
    -------
    Classification

    Examples
    --------
    >>> from nhqm.paraops import deformed_pauli
    >>> classify(deformed_pauli(0.4)[0]).kind
    <Kind.PARA_HERMITIAN: 'ParaHermitianNonHermitian'>
    >>> classify([[0, 1], [0, 0]]).kind
    <Kind.NON_DIAGONALIZABLE: 'NonDiagonalizable'>
    >>> classify([[1j, 0], [0, -1j]]).kind
    <Kind.COMPLEX_SPECTRUM: 'ComplexSpectrum'>
    >>> classify([[1j, 0], [0, -1j]], evolution=True).kind
    <Kind.UNITARY: 'Unitary'>

    """
    T = as_matrix(T)
    tol = config.resolve(tol, 'tol_herm')
    tol_spec = config.current().tol_spec
    norm = op_norm(T)
    scale = max(norm, np.finfo(float).tiny)
    diagnostics = {'hermiticity_defect': hermiticity_defect(T) / scale}

    try:
        sys = eig_general(T)
    except NonDiagonalizable as e:
        spectrum = linalg.eigvals(T)
        spectrum = spectrum[np.lexsort((spectrum.imag, spectrum.real))]
        diagnostics['kappa'] = e.diagnostics['kappa']
        log.debug('operator is not diagonalizable: kappa=%g',
                  diagnostics['kappa'])
        return Classification(Kind.NON_DIAGONALIZABLE, spectrum, diagnostics)

    spectrum = sys.eigenvalues
    diagnostics['kappa'] = sys.frame_condition
    diagnostics['max_imag'] = float(np.max(np.abs(spectrum.imag)))
    diagnostics['max_unit_defect'] = float(
        np.max(np.abs(np.abs(spectrum) - 1)))
    hermitian = diagnostics['hermiticity_defect'] <= tol

    if evolution and diagnostics['max_unit_defect'] <= tol_spec:
        unitary = op_norm(T.conj().T @ T - np.eye(len(T))) <= tol
        kind = Kind.UNITARY if unitary else Kind.PARA_UNITARY
        return Classification(kind, spectrum, diagnostics)

    if hermitian:
        return Classification(Kind.HERMITIAN, spectrum, diagnostics,
                              MetricOp.identity(len(T)))

    if diagnostics['max_imag'] > _spectral_tol(spectrum, tol_spec):
        return Classification(Kind.COMPLEX_SPECTRUM, spectrum, diagnostics)

    metric = metric_from_eigensystem(sys)
    witness_defect = hermiticity_defect(hermitianize(T, metric)) / scale
    diagnostics['witness_defect'] = witness_defect
    if witness_defect > tol:
        log.warning('witness metric leaves a Hermiticity defect of %g '
                    '(kappa=%g)', witness_defect, sys.frame_condition)
    return Classification(Kind.PARA_HERMITIAN, spectrum, diagnostics, metric)


def para_hermitian_system(T, name='operator'):
    """Eigensystem of a para-Hermitian operator.

    Raises
    ------
    NotParaHermitian
        If `T` is not diagonalizable or has a complex spectrum.
    """
    try:
        sys = eig_general(T)
    except NonDiagonalizable as e:
        raise NotParaHermitian(f'{name} is not diagonalizable',
                               **e.diagnostics) from e
    max_imag = float(np.max(np.abs(sys.eigenvalues.imag)))
    if max_imag > _spectral_tol(sys.eigenvalues, config.current().tol_spec):
        raise NotParaHermitian(f'{name} has a complex spectrum',
                               max_imag=max_imag)
    return sys
