#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from dataclasses import dataclass

import numpy as np

from ..errors import DimensionMismatch, DomainError
from ..matkit import as_matrix, dual_basis, op_norm

__all__ = ('Decomposition', 'GaugeElem', 'hausdorff_distance')


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Complete decomposition :math:`\\{P_n = |n\\rangle\\langle n^*|\\}` of
    the identity into rank-one skew projections.

    A decomposition is a point of the observable space: it is what remains
    of a non-degenerate para-Hermitian observable once its eigenvalues are
    forgotten.
    """

    projectors: np.ndarray
    """Projections :math:`P_n`, shape ``(d, d, d)``."""

    frame: np.ndarray
    """Matrix whose columns :math:`|n\\rangle` span the ranges of the
    projections."""

    @classmethod
    def from_frame(cls, V):
        """Decomposition defined by the columns of an invertible matrix.

        Raises
        ------
        SingularFrame
            If `V` is not invertible.
        """
        V = as_matrix(V, 'frame')
        left = dual_basis(V)
        projectors = np.einsum('in,jn->nij', V, left.conj())
        for value in (V, projectors):
            value.setflags(write=False)
        return cls(projectors, V)

    @classmethod
    def from_eigensystem(cls, sys):
        """Decomposition of an observable into its eigenprojections."""
        return cls.from_frame(np.array(sys.right))

    @classmethod
    def standard(cls, dim):
        """Decomposition :math:`\\{|n\\rangle\\langle n|\\}` of the standard
        basis."""
        return cls.from_frame(np.eye(dim, dtype=complex))

    @property
    def dim(self):
        return self.frame.shape[0]

    @property
    def dual(self):
        """Dual frame :math:`V^{-\\dagger}`, whose columns are
        :math:`|n^*\\rangle`."""
        return dual_basis(self.frame)

    def conjugated(self, T):
        """The decomposition :math:`\\{TP_nT^{-1}\\}`.

        Examples
        --------
        >>> import numpy as np
        >>> O = Decomposition.standard(2)
        >>> T = [[1, 1], [0, 1]]
        >>> np.allclose(O.conjugated(T).projectors[1], [[0, 1], [0, 1]])
        True

        """
        T = as_matrix(T, 'transformation')
        if T.shape[0] != self.dim:
            raise DimensionMismatch('transformation does not match dimension')
        return Decomposition.from_frame(T @ self.frame)

    def defects(self):
        """Largest violations of idempotence, completeness, mutual
        annihilation and unit trace."""
        P = self.projectors
        eye = np.eye(self.dim)
        idempotence = max(op_norm(p @ p - p) for p in P)
        completeness = op_norm(P.sum(axis=0) - eye)
        annihilation = max(
            (op_norm(P[n] @ P[m]) for n in range(self.dim)
             for m in range(self.dim) if n != m), default=0.0)
        trace = float(np.max(np.abs(np.trace(P, axis1=1, axis2=2) - 1)))
        return {'idempotence': idempotence, 'completeness': completeness,
                'annihilation': annihilation, 'trace': trace}


def hausdorff_distance(O1, O2):
    """Hausdorff distance between two decompositions.

    The projector sets are compared as unordered sets in the operator norm:
    the larger of :math:`\\max_i \\min_j \\|P_i - Q_j\\|` and
    :math:`\\max_j \\min_i \\|P_i - Q_j\\|`.

    Raises
    ------
    DimensionMismatch
        If the decompositions act on spaces of different dimension.

    Examples
    --------
    >>> import numpy as np
    >>> O = Decomposition.standard(2)
    >>> hausdorff_distance(O, O.conjugated([[0, 1], [1, 0]]))
    0.0

    """
    if O1.dim != O2.dim:
        raise DimensionMismatch('decompositions have different dimensions',
                                dim1=O1.dim, dim2=O2.dim)
    P = O1.projectors[:, np.newaxis]
    Q = O2.projectors[np.newaxis, :]
    distances = np.linalg.norm(P - Q, ord=2, axis=(-2, -1))
    return float(max(distances.min(axis=1).max(),
                     distances.min(axis=0).max()))


@dataclass(frozen=True)
class GaugeElem:
    """Element of the gauge group of a decomposition.

    The element permutes the frame vectors and rescales them:
    :math:`|e_n\\rangle \\mapsto c_n|e_{\\sigma(n)}\\rangle`.
    """

    permutation: tuple
    """The permutation :math:`\\sigma` as a tuple of indices."""

    scalars: tuple
    """Nonzero complex scalars :math:`c_n`."""

    def __post_init__(self):
        permutation = tuple(int(i) for i in self.permutation)
        scalars = tuple(complex(c) for c in self.scalars)
        if sorted(permutation) != list(range(len(permutation))):
            raise DomainError('not a permutation',
                              permutation=str(permutation))
        if len(scalars) != len(permutation):
            raise DimensionMismatch('need one scalar per frame vector')
        if not all(0 < abs(c) < np.inf for c in scalars):
            raise DomainError('gauge scalars must be finite and nonzero')
        object.__setattr__(self, 'permutation', permutation)
        object.__setattr__(self, 'scalars', scalars)

    @property
    def dim(self):
        return len(self.permutation)

    @classmethod
    def random(cls, dim, rng=None):
        """Random element with moduli in :math:`[e^{-1/2}, e^{1/2}]`."""
        rng = np.random.default_rng(rng)
        moduli = np.exp(rng.uniform(-0.5, 0.5, dim))
        phases = np.exp(2j * np.pi * rng.uniform(size=dim))
        return cls(tuple(rng.permutation(dim)), tuple(moduli * phases))

    def matrix(self, frame):
        """The operator :math:`g = EME^{-1}` with :math:`M_{\\sigma(n), n} =
        c_n`, acting on the frame :math:`E`.

        Examples
        --------
        >>> g = GaugeElem((1, 0), (2, 1))
        >>> print(g.matrix(np.eye(2)).real)
        [[0. 1.]
         [2. 0.]]

        """
        E = as_matrix(frame, 'frame')
        if E.shape[0] != self.dim:
            raise DimensionMismatch('frame does not match gauge element')
        M = np.zeros((self.dim, self.dim), dtype=complex)
        M[list(self.permutation), np.arange(self.dim)] = self.scalars
        return E @ M @ np.linalg.inv(E)
