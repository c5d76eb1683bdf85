#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Dense complex linear algebra.

Operators are square complex :class:`numpy.ndarray` objects and states are
one-dimensional complex arrays. The central object is :class:`EigSystem`, a
biorthogonal eigensystem holding right eigenvectors :math:`e_n` and their duals
:math:`e^*_n` as matrix columns, so that :math:`\\langle e^*_n, e_m\\rangle =
\\delta_{nm}` and :math:`\\sum_n |e_n\\rangle\\langle e^*_n| = I`.

Examples
--------
>>> import numpy as np
>>> from nhqm.matkit import eig_general
>>> sys = eig_general([[0, 1], [4, 0]])
>>> print(sys.eigenvalues.real)
[-2.  2.]
>>> np.allclose(sys.matrix(), [[0, 1], [4, 0]])
True

"""
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from . import config
from .errors import (DimensionMismatch, DimensionOverflow, DomainError,
                     NonDiagonalizable, NotHermitian, NotPositiveDefinite,
                     NumericalFailure, SingularFrame)

__all__ = ('EigSystem', 'as_matrix', 'as_vector', 'op_norm',
           'hermiticity_defect', 'is_hermitian', 'eig_general',
           'dual_basis', 'herm_eig', 'herm_sqrt', 'mat_exp', 'kron')

# Entries whose modulus is within this factor of the largest one tie for
# carrying the real positive phase; the first of them wins.
_PHASE_TIE = 1e-8


def as_matrix(A, name='matrix'):
    """Coerce `A` to a finite square complex matrix."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise DimensionMismatch(
            f'{name} must be a non-empty square matrix, got shape {A.shape}')
    if not np.all(np.isfinite(A)):
        raise DomainError(f'{name} has non-finite entries')
    return A


def as_vector(psi, dim=None, name='state'):
    """Coerce `psi` to a finite complex vector, optionally of length `dim`."""
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1 or psi.size < 1:
        raise DimensionMismatch(
            f'{name} must be a non-empty vector, got shape {psi.shape}')
    if dim is not None and psi.size != dim:
        raise DimensionMismatch(
            f'{name} has dimension {psi.size}, expected {dim}')
    if not np.all(np.isfinite(psi)):
        raise DomainError(f'{name} has non-finite entries')
    return psi


def op_norm(A):
    """Operator (spectral) norm."""
    return float(np.linalg.norm(A, 2))


def hermiticity_defect(A):
    """Operator norm of the anti-Hermitian part, :math:`\\|A - A^\\dagger\\|`.
    """
    A = np.asarray(A, dtype=complex)
    return op_norm(A - A.conj().T)


def is_hermitian(A, tol=None):
    """Test :math:`\\|A - A^\\dagger\\| \\le \\mathrm{tol}\\,\\|A\\|`.

    Examples
    --------
    >>> is_hermitian([[1, 1j], [-1j, 2]])
    True
    >>> is_hermitian([[0, 1], [4, 0]])
    False

    """
    tol = config.resolve(tol, 'tol_herm')
    A = np.asarray(A, dtype=complex)
    return hermiticity_defect(A) <= tol * max(op_norm(A), np.finfo(float).tiny)


def _fix_phases(V):
    """Normalize columns to unit norm with the leading largest-modulus entry
    real and positive."""
    V = V / np.linalg.norm(V, axis=0)
    mod = np.abs(V)
    # first entry that ties for the largest modulus
    lead = np.argmax(mod >= mod.max(axis=0) * (1 - _PHASE_TIE), axis=0)
    pivot = V[lead, np.arange(V.shape[1])]
    return V * (pivot.conj() / np.abs(pivot))


def _order(w, scale):
    # Round before sorting so rounding noise cannot reorder equal keys.
    key_re = np.round(w.real / scale, 10)
    key_im = np.round(w.imag / scale, 10)
    return np.lexsort((key_im, key_re))


@dataclass(frozen=True, eq=False)
class EigSystem:
    """Biorthogonal eigensystem of a diagonalizable matrix."""

    eigenvalues: np.ndarray
    """Eigenvalues :math:`\\lambda_n`, sorted by real then imaginary part."""

    right: np.ndarray
    """Right eigenvectors :math:`e_n` as columns."""

    left: np.ndarray
    """Dual vectors :math:`e^*_n` as columns, the conjugated rows of the
    inverse of :attr:`right`."""

    residual: float = 0.0
    """Largest relative residual
    :math:`\\|Ae_n - \\lambda_n e_n\\|/\\|A\\|`."""

    frame_condition: float = 1.0
    """Condition number of :attr:`right`."""

    def __post_init__(self):
        for name in ('eigenvalues', 'right', 'left'):
            value = np.array(getattr(self, name), dtype=complex)
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    @property
    def dim(self):
        return len(self.eigenvalues)

    def matrix(self, values=None):
        """Reassemble :math:`\\sum_n v_n |e_n\\rangle\\langle e^*_n|`.

        Parameters
        ----------
        values : numpy.ndarray, optional
            Spectral values :math:`v_n`. Defaults to the eigenvalues.
        """
        if values is None:
            values = self.eigenvalues
        return (self.right * values) @ self.left.conj().T

    def projectors(self):
        """Rank-one skew projections :math:`|e_n\\rangle\\langle e^*_n|`."""
        return [np.outer(self.right[:, n], self.left[:, n].conj())
                for n in range(self.dim)]

    def rescaled(self, scales):
        """Rescale :math:`e_n \\to c_n e_n` and
        :math:`e^*_n \\to e^*_n / \\bar c_n`.

        The rescaled system describes the same operator but yields a
        different metric in :func:`nhqm.paraops.metric_from_eigensystem`.
        """
        scales = np.asarray(scales, dtype=complex)
        if scales.shape != self.eigenvalues.shape:
            raise DimensionMismatch(
                f'need {self.dim} scales, got shape {scales.shape}')
        if np.any(scales == 0) or not np.all(np.isfinite(scales)):
            raise DomainError('scales must be finite and nonzero')
        return EigSystem(self.eigenvalues, self.right * scales,
                         self.left / scales.conj(),
                         self.residual, float(np.linalg.cond(
                             self.right * scales)))

    def biorthogonality_defect(self):
        """Largest of :math:`\\|\\langle e^*_n, e_m\\rangle - \\delta_{nm}\\|`
        and :math:`\\|\\sum_n |e_n\\rangle\\langle e^*_n| - I\\|`."""
        eye = np.eye(self.dim)
        return max(op_norm(self.left.conj().T @ self.right - eye),
                   op_norm(self.right @ self.left.conj().T - eye))


def dual_basis(right):
    """Dual vectors of a frame.

    Parameters
    ----------
    right : numpy.ndarray
        Matrix whose columns are the vectors :math:`e_n`.

    Returns
    -------
    left : numpy.ndarray
        Matrix whose columns are :math:`e^*_n`, so that
        ``left.conj().T @ right`` is the identity.

    Examples
    --------
    >>> import numpy as np
    >>> left = dual_basis([[1, 1], [0, 1]])
    >>> np.allclose(left.conj().T @ [[1, 1], [0, 1]], np.eye(2))
    True

    """
    V = as_matrix(right, 'frame')
    kappa = np.linalg.cond(V)
    if not np.isfinite(kappa) or kappa * np.finfo(float).eps >= 1:
        raise SingularFrame('frame is singular', kappa=kappa)
    try:
        inverse = linalg.inv(V)
    except linalg.LinAlgError as e:
        raise SingularFrame(str(e), kappa=kappa) from e
    return inverse.conj().T


def herm_eig(Hm, tol_herm=None):
    """Eigensystem of a Hermitian matrix.

    Eigenvalues are real and ascending, the eigenvectors orthonormal, and the
    dual vectors coincide with them.

    Examples
    --------
    >>> print(herm_eig([[1, 0], [0, 0.25]]).eigenvalues.real)
    [0.25 1.  ]

    """
    Hm = as_matrix(Hm)
    tol_herm = config.resolve(tol_herm, 'tol_herm')
    norm = op_norm(Hm)
    defect = hermiticity_defect(Hm)
    if defect > tol_herm * max(norm, np.finfo(float).tiny):
        raise NotHermitian('matrix is not Hermitian',
                           defect=defect, norm=norm)
    Hm = 0.5 * (Hm + Hm.conj().T)
    try:
        w, V = linalg.eigh(Hm)
    except linalg.LinAlgError as e:
        raise NumericalFailure(str(e)) from e
    V = _fix_phases(V)
    residual = _residual(Hm, w, V, norm)
    return EigSystem(w.astype(complex), V, V, residual, 1.0)


def _residual(A, w, V, norm):
    if norm == 0:
        norm = 1.0
    return float(np.max(np.linalg.norm(A @ V - V * w, axis=0)) / norm)


def eig_general(A, tol=None, kappa_max=None):
    """Biorthogonal eigensystem of a diagonalizable matrix.

    Hermitian input (within ``tol_herm``) is delegated to :func:`herm_eig` so
    that its eigenvectors come out exactly orthonormal.

    Parameters
    ----------
    A : numpy.ndarray
        Square matrix.
    tol : float, optional
        Largest accepted relative residual.
    kappa_max : float, optional
        Largest accepted condition number of the eigenvector frame.

    Returns
    -------
    EigSystem

    Raises
    ------
    NonDiagonalizable
        If the eigenvector frame is too ill-conditioned.
    NumericalFailure
        If the eigensolver fails or the residual is too large.

    Examples
    --------
    >>> sys = eig_general([[0, 1], [1, 0]])
    >>> print(sys.eigenvalues.real)
    [-1.  1.]
    >>> eig_general([[0, 1], [0, 0]])
    Traceback (most recent call last):
      ...
    nhqm.errors.NonDiagonalizable: eigenvector frame is ill-conditioned

    """
    A = as_matrix(A)
    tol = config.resolve(tol, 'tol')
    kappa_max = config.resolve(kappa_max, 'kappa_max')
    if is_hermitian(A):
        return herm_eig(A)

    norm = op_norm(A)
    try:
        w, V = linalg.eig(A)
    except linalg.LinAlgError as e:
        raise NumericalFailure(str(e)) from e
    order = _order(w, max(norm, 1.0))
    w = w[order]
    V = _fix_phases(V[:, order])

    kappa = float(np.linalg.cond(V))
    if not kappa <= kappa_max:
        raise NonDiagonalizable('eigenvector frame is ill-conditioned',
                                kappa=kappa, kappa_max=kappa_max)
    residual = _residual(A, w, V, norm)
    if residual > tol:
        raise NumericalFailure('eigenvector residual exceeds tolerance',
                               residual=residual, tol=tol)
    return EigSystem(w, V, linalg.inv(V).conj().T, residual, kappa)


def herm_sqrt(G, tol_pd=None):
    """Square root and inverse square root of a positive-definite matrix.

    Returns
    -------
    S, Sinv : numpy.ndarray
        Hermitian :math:`G^{1/2}` and :math:`G^{-1/2}`.

    Examples
    --------
    >>> S, Sinv = herm_sqrt([[1, 0], [0, 0.25]])
    >>> print(S.real)
    [[1.  0. ]
     [0.  0.5]]

    """
    tol_pd = config.resolve(tol_pd, 'tol_pd')
    sys = herm_eig(G)
    w = sys.eigenvalues.real
    if not w[0] > tol_pd:
        raise NotPositiveDefinite('matrix is not positive-definite',
                                  min_eig=w[0], tol_pd=tol_pd)
    V = sys.right
    S = (V * np.sqrt(w)) @ V.conj().T
    Sinv = (V / np.sqrt(w)) @ V.conj().T
    return 0.5 * (S + S.conj().T), 0.5 * (Sinv + Sinv.conj().T)


def mat_exp(A, z=1.0, sys=None):
    """Matrix exponential :math:`e^{zA}`.

    If the eigensystem `sys` of `A` is supplied, the exponential is assembled
    from the spectral resolution; otherwise scaling and squaring with Padé
    approximation is used.

    Examples
    --------
    >>> import numpy as np
    >>> np.allclose(mat_exp(np.diag([1, -1]), 1j * np.pi), -np.eye(2))
    True
    >>> print(mat_exp([[0, 1], [0, 0]], 2).real)
    [[1. 2.]
     [0. 1.]]

    """
    A = as_matrix(A)
    with np.errstate(over='ignore', invalid='ignore'):
        if sys is not None:
            if sys.dim != A.shape[0]:
                raise DimensionMismatch('eigensystem does not match matrix')
            result = sys.matrix(np.exp(z * sys.eigenvalues))
        else:
            result = linalg.expm(z * A)
    if not np.all(np.isfinite(result)):
        raise NumericalFailure('matrix exponential overflowed', z=z)
    return result


def kron(A, B, cap=None):
    """Kronecker product with a dimension cap.

    Examples
    --------
    >>> import numpy as np
    >>> np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    True

    """
    A = as_matrix(A)
    B = as_matrix(B)
    cap = config.resolve(cap, 'kron_cap')
    dim = A.shape[0] * B.shape[0]
    if dim > cap:
        raise DimensionOverflow('Kronecker product too large',
                                dim=dim, cap=cap)
    return np.kron(A, B)
