#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Exceptions raised by nhqm.

Every exception carries a stable, machine-readable :attr:`~NHQMError.code`
and an optional mapping of named diagnostics. The command-line tools turn
them into a JSON error envelope on standard error.
"""

__all__ = ('NHQMError', 'DomainError', 'NumericalFailure', 'InputError',
           'MatrixFormatError', 'GridParseError',
           'NonDiagonalizable', 'SingularFrame', 'NotHermitian',
           'NotPositiveDefinite', 'DimensionOverflow', 'DimensionMismatch',
           'NotParaHermitian', 'ZeroState', 'ComplexSpectrum',
           'DegenerateOverlap', 'NotAMetric', 'SingularEta', 'BrokenRegime',
           'DegenerateSpectrum', 'NoCycleFound', 'BadGauge', 'NotInFiber',
           'NotCyclic', 'RegressionFailure')


class NHQMError(Exception):
    """Base class for all nhqm errors.

    Parameters
    ----------
    message : str
        Human-readable description.
    **diagnostics
        Named numerical values that explain the failure, for example the
        condition number that exceeded its limit.
    """

    exit_code = 2

    artifact = None
    """Output that a command-line tool writes before reporting the error."""

    def __init__(self, message='', **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics

    @property
    def code(self):
        return type(self).__name__

    def to_dict(self):
        return {'code': self.code,
                'message': str(self),
                'diagnostics': {key: _jsonable(value)
                                for key, value in self.diagnostics.items()}}


def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    try:
        return float(value)
    except (TypeError, ValueError):
        return str(value)


class DomainError(NHQMError, ValueError):
    """An input lies outside the domain where an operation is defined."""


class NumericalFailure(NHQMError, ArithmeticError):
    """An iteration failed to converge or a result overflowed."""


class RegressionFailure(NumericalFailure):
    """Some regression checks did not pass."""


class InputError(NHQMError, ValueError):
    """A file, option, or environment setting could not be parsed."""

    exit_code = 1


class MatrixFormatError(InputError):
    """A matrix or vector JSON document is malformed."""


class GridParseError(InputError):
    """A sweep grid is neither ``name=start:stop:step`` nor a list of
    values."""


class NonDiagonalizable(DomainError):
    """The right-eigenvector matrix is too ill-conditioned."""


class SingularFrame(DomainError):
    """A frame (matrix of basis vectors) is singular."""


class NotHermitian(DomainError):
    """A matrix required to be Hermitian is not."""


class NotPositiveDefinite(DomainError):
    """A matrix required to be positive-definite is not."""


class DimensionOverflow(DomainError):
    """A result would exceed the configured dimension cap."""


class DimensionMismatch(DomainError):
    """Operands have incompatible dimensions."""


class NotParaHermitian(DomainError):
    """An operator is not diagonalizable with a real spectrum."""


class ZeroState(DomainError):
    """A state vector is zero."""


class ComplexSpectrum(DomainError):
    """An operator required to have a real spectrum does not."""


class DegenerateOverlap(DomainError):
    """The biorthogonal normalization ⟨ψ̃, ψ⟩ vanishes."""


class NotAMetric(DomainError):
    """A metric operator is not a metric for the given operator."""


class SingularEta(DomainError):
    """An indefinite metric η is not invertible."""


class BrokenRegime(DomainError):
    """A two-level Hamiltonian has a complex spectrum."""


class DegenerateSpectrum(DomainError):
    """An observable has (nearly) coincident eigenvalues."""


class NoCycleFound(DomainError):
    """A Heisenberg trajectory does not return within its horizon."""


class BadGauge(DomainError):
    """Gauge functions do not close the path of eigenstates."""


class NotInFiber(DomainError):
    """A frame does not map the measurement point to the path start."""


class NotCyclic(DomainError):
    """A lift does not close over a cyclic evolution."""
