#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from dataclasses import dataclass

import numpy as np

from .. import config
from ..errors import NotHermitian, SingularEta
from ..matkit import (as_matrix, as_vector, eig_general, herm_eig, herm_sqrt,
                      hermiticity_defect, is_hermitian, op_norm)

__all__ = ('MetricOp', 'metric_from_eigensystem', 'hermitianize',
           'is_metric_for', 'is_pseudo_hermitian', 'func_calc')


@dataclass(frozen=True, eq=False)
class MetricOp:
    """Hermitian positive-definite metric operator :math:`G`.

    Construct with :meth:`from_matrix`, which symmetrizes the input and
    caches :math:`G^{1/2}` and :math:`G^{-1/2}`.
    """

    g: np.ndarray
    """The metric :math:`G`, Hermitian to the last bit."""

    sqrt: np.ndarray
    """:math:`G^{1/2}`."""

    inv_sqrt: np.ndarray
    """:math:`G^{-1/2}`."""

    min_eig: float
    """Smallest eigenvalue of :math:`G`."""

    max_eig: float
    """Largest eigenvalue of :math:`G`."""

    @classmethod
    def from_matrix(cls, G, tol_pd=None):
        """Validate a metric and precompute its square roots.

        Raises
        ------
        NotHermitian
            If `G` is not Hermitian.
        NotPositiveDefinite
            If the smallest eigenvalue of `G` does not exceed `tol_pd`.

        Examples
        --------
        >>> G = MetricOp.from_matrix([[1, 0], [0, 0.25]])
        >>> print(G.inv_sqrt.real)
        [[1. 0.]
         [0. 2.]]

        """
        G = as_matrix(G, 'metric')
        if not is_hermitian(G):
            raise NotHermitian('metric is not Hermitian',
                               defect=hermiticity_defect(G))
        G = 0.5 * (G + G.conj().T)
        S, Sinv = herm_sqrt(G, tol_pd)
        w = herm_eig(G).eigenvalues.real
        for value in (G, S, Sinv):
            value.setflags(write=False)
        return cls(G, S, Sinv, float(w[0]), float(w[-1]))

    @classmethod
    def identity(cls, dim):
        """The trivial metric :math:`G = I`."""
        return cls.from_matrix(np.eye(dim))

    @property
    def dim(self):
        return self.g.shape[0]

    @property
    def condition(self):
        """Condition number :math:`\\|G\\|\\,\\|G^{-1}\\|`."""
        return self.max_eig / self.min_eig

    def inner(self, u, v):
        """The metric inner product :math:`\\langle u, Gv\\rangle`."""
        u = as_vector(u, self.dim)
        v = as_vector(v, self.dim)
        return complex(np.vdot(u, self.g @ v))


def metric_from_eigensystem(sys, scales=None, tol_pd=None):
    """Metric :math:`G = \\sum_n |e^*_n\\rangle\\langle e^*_n|` of an
    eigensystem.

    Parameters
    ----------
    sys : nhqm.matkit.EigSystem
        Eigensystem of the operator.
    scales : array-like, optional
        Nonzero scalars :math:`c_n`. The eigensystem is first rescaled by
        :meth:`~nhqm.matkit.EigSystem.rescaled`, which selects another member
        of the family of metrics for the same operator.

    Examples
    --------
    >>> import numpy as np
    >>> from nhqm.matkit import eig_general
    >>> G = metric_from_eigensystem(eig_general([[0, 1], [4, 0]]))
    >>> np.allclose(G.g, np.diag([2.5, 0.625]))
    True

    """
    if scales is not None:
        sys = sys.rescaled(scales)
    L = sys.left
    return MetricOp.from_matrix(L @ L.conj().T, tol_pd)


def _metric_matrix(G):
    if isinstance(G, MetricOp):
        return G.g
    return as_matrix(G, 'metric')


def hermitianize(T, G):
    """Similarity transform :math:`G^{1/2} T G^{-1/2}`.

    The result is Hermitian exactly when `G` is a metric for `T`; this is
    reported by the caller, not enforced here.

    Examples
    --------
    >>> G = MetricOp.from_matrix([[1, 0], [0, 0.25]])
    >>> print(hermitianize([[0, 1], [4, 0]], G).real)
    [[0. 2.]
     [2. 0.]]

    """
    T = as_matrix(T)
    return G.sqrt @ T @ G.inv_sqrt


def is_metric_for(G, T, tol=None):
    """Test :math:`\\|GT - T^\\dagger G\\| \\le \\mathrm{tol}\\,\\|G\\|\\,
    \\|T\\|`.

    `G` may be a :class:`MetricOp` or a plain matrix.
    """
    tol = config.resolve(tol, 'tol')
    G = _metric_matrix(G)
    T = as_matrix(T)
    defect = op_norm(G @ T - T.conj().T @ G)
    return defect <= tol * op_norm(G) * op_norm(T)


def is_pseudo_hermitian(T, eta, tol=None):
    """Test :math:`T^\\dagger \\eta = \\eta T` for an invertible Hermitian,
    possibly indefinite, :math:`\\eta`.

    Examples
    --------
    >>> is_pseudo_hermitian([[0, 1], [-1, 0]], [[1, 0], [0, -1]])
    True

    """
    tol = config.resolve(tol, 'tol')
    T = as_matrix(T)
    eta = as_matrix(eta, 'eta')
    if not is_hermitian(eta):
        raise NotHermitian('eta is not Hermitian')
    w = np.abs(herm_eig(eta).eigenvalues)
    if not w.min() > np.finfo(float).eps * w.max() * eta.shape[0]:
        raise SingularEta('eta is not invertible',
                          min_abs_eig=w.min(), max_abs_eig=w.max())
    defect = op_norm(T.conj().T @ eta - eta @ T)
    return defect <= tol * op_norm(eta) * op_norm(T)


def func_calc(sys, f):
    """Functional calculus :math:`f(T) = \\sum_n f(\\lambda_n)
    |e_n\\rangle\\langle e^*_n|`.

    Parameters
    ----------
    sys : nhqm.matkit.EigSystem or numpy.ndarray
        Eigensystem of :math:`T`, or :math:`T` itself.
    f : callable
        Complex function, evaluated once per eigenvalue.

    Examples
    --------
    >>> import numpy as np
    >>> from nhqm.matkit import eig_general
    >>> sys = eig_general([[0, 1], [4, 0]])
    >>> np.allclose(func_calc(sys, lambda z: z ** 2), 4 * np.eye(2))
    True

    """
    if not hasattr(sys, 'eigenvalues'):
        sys = eig_general(sys)
    values = np.asarray([f(z) for z in sys.eigenvalues], dtype=complex)
    return sys.matrix(values)
