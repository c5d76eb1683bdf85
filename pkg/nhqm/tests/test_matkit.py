#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
import numpy as np
import pytest

from .. import matkit
from ..errors import (DimensionMismatch, DimensionOverflow, DomainError,
                      NonDiagonalizable, NotHermitian, NotPositiveDefinite,
                      SingularFrame)


def random_para_hermitian(dim, rng):
    noise = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    V = np.eye(dim) + 0.5 * noise / np.sqrt(dim)
    w = np.sort(rng.uniform(-1, 1, dim))
    return V @ np.diag(w) @ np.linalg.inv(V), w


def random_hermitian(dim, rng):
    A = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return A + A.conj().T


@pytest.mark.parametrize('dim', range(2, 9))
def test_eig_general_biorthogonal(dim):
    """Test that the eigensystem is biorthogonal and reassembles the input."""
    rng = np.random.default_rng(dim)
    A, w = random_para_hermitian(dim, rng)
    sys = matkit.eig_general(A)

    np.testing.assert_allclose(sys.eigenvalues, w, atol=1e-10)
    assert np.all(np.diff(sys.eigenvalues.real) > 0)
    assert sys.biorthogonality_defect() < 1e-10
    assert sys.residual < 1e-10
    np.testing.assert_allclose(sys.matrix(), A, atol=1e-10)
    np.testing.assert_allclose(sum(sys.projectors()), np.eye(dim),
                               atol=1e-10)


@pytest.mark.parametrize('dim', [2, 3, 5])
def test_eig_general_phase_convention(dim):
    """Test that eigenvectors are unit vectors whose largest entry is real
    and positive."""
    rng = np.random.default_rng(10 + dim)
    sys = matkit.eig_general(random_para_hermitian(dim, rng)[0])
    V = sys.right
    np.testing.assert_allclose(np.linalg.norm(V, axis=0), 1)
    pivots = V[np.argmax(np.abs(V), axis=0), np.arange(dim)]
    np.testing.assert_allclose(pivots.imag, 0, atol=1e-12)
    assert np.all(pivots.real > 0)


def test_eig_general_defective():
    with pytest.raises(NonDiagonalizable):
        matkit.eig_general(np.eye(3, k=1))


def test_eig_general_hermitian():
    """Test that Hermitian input gets an orthonormal eigenbasis."""
    rng = np.random.default_rng(0)
    H = random_hermitian(4, rng)
    sys = matkit.eig_general(H)
    np.testing.assert_allclose(sys.right.conj().T @ sys.right, np.eye(4),
                               atol=1e-12)
    np.testing.assert_array_equal(sys.left, sys.right)
    np.testing.assert_allclose(sys.eigenvalues.imag, 0)


def test_herm_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        matkit.herm_eig([[0, 1], [4, 0]])


def test_herm_sqrt():
    rng = np.random.default_rng(1)
    A = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    G = A @ A.conj().T + np.eye(4)
    S, Sinv = matkit.herm_sqrt(G)
    np.testing.assert_allclose(S @ S, G, atol=1e-10)
    np.testing.assert_allclose(S @ Sinv, np.eye(4), atol=1e-10)
    assert matkit.is_hermitian(S)


def test_herm_sqrt_indefinite():
    with pytest.raises(NotPositiveDefinite):
        matkit.herm_sqrt(np.diag([1, -1]))


def test_rescaled_preserves_operator():
    rng = np.random.default_rng(2)
    A, _ = random_para_hermitian(3, rng)
    sys = matkit.eig_general(A).rescaled([1, 2j, 0.5])
    np.testing.assert_allclose(sys.matrix(), A, atol=1e-10)
    assert sys.biorthogonality_defect() < 1e-10
    with pytest.raises(DomainError):
        sys.rescaled([1, 0, 1])
    with pytest.raises(DimensionMismatch):
        sys.rescaled([1, 1])


def test_mat_exp_spectral():
    """Test that the spectral and Padé exponentials agree."""
    rng = np.random.default_rng(3)
    A, _ = random_para_hermitian(4, rng)
    sys = matkit.eig_general(A)
    np.testing.assert_allclose(matkit.mat_exp(A, -0.7j, sys),
                               matkit.mat_exp(A, -0.7j), atol=1e-10)


def test_dual_basis_singular():
    with pytest.raises(SingularFrame):
        matkit.dual_basis([[1, 1], [1, 1]])


def test_kron_cap():
    np.testing.assert_array_equal(
        matkit.kron(np.eye(2), [[0, 1], [1, 0]]),
        np.kron(np.eye(2), [[0, 1], [1, 0]]))
    with pytest.raises(DimensionOverflow):
        matkit.kron(np.eye(64), np.eye(65))
    with pytest.raises(DimensionOverflow):
        matkit.kron(np.eye(2), np.eye(2), cap=3)


@pytest.mark.parametrize('value', [np.zeros((2, 3)), np.zeros(4),
                                   np.zeros((0, 0))])
def test_as_matrix_shape(value):
    with pytest.raises(DimensionMismatch):
        matkit.as_matrix(value)


def test_as_matrix_finite():
    with pytest.raises(DomainError):
        matkit.as_matrix([[np.nan, 0], [0, 1]])


def test_as_vector():
    with pytest.raises(DimensionMismatch):
        matkit.as_vector([1, 2, 3], dim=2)
    with pytest.raises(DomainError):
        matkit.as_vector([1, np.inf])
