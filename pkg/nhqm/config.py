#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Numerical tolerances shared by every module."""
from contextlib import contextmanager
from dataclasses import dataclass, fields, replace
from functools import lru_cache
import logging
import os

from .errors import InputError

__all__ = ('Tolerances', 'DEFAULT', 'ENVIRONMENT_VARIABLE', 'current',
           'override', 'resolve')

log = logging.getLogger(__name__)

ENVIRONMENT_VARIABLE = 'NHQM_DEFAULT_TOL'


@dataclass(frozen=True)
class Tolerances:
    """Container for numerical tolerances and limits."""

    tol: float = 1e-10
    """General relative residual tolerance."""

    tol_bio: float = 1e-10
    """Biorthogonality and resolution-of-identity tolerance."""

    tol_herm: float = 1e-10
    """Relative tolerance for Hermiticity tests."""

    tol_pd: float = 1e-14
    """Smallest eigenvalue accepted for a positive-definite matrix."""

    tol_spec: float = 1e-8
    """Tolerance for real-spectrum and unit-circle tests.

    Scaled by ``max(1, ρ(T))`` where ρ is the spectral radius."""

    kappa_max: float = 1e8
    """Largest condition number of an eigenvector frame that still counts as
    diagonalizable."""

    kron_cap: int = 4096
    """Largest dimension produced by a Kronecker product."""

    tol_gap: float = 1e-6
    """Smallest eigenvalue gap, relative to the spectral spread, of an
    observable whose geometric phases are computed."""

    tol_cycle: float = 1e-8
    """Hausdorff distance below which an observable has returned."""

    tol_lift: float = 1e-6
    """Largest connection residual accepted along a horizontal lift."""

    steps_per_unit_time: int = 1000
    """Default number of propagator steps per unit of time."""

    order: int = 2
    """Default propagator order (2 or 4)."""

    def __post_init__(self):
        for field in fields(self):
            value = getattr(self, field.name)
            if not value > 0:
                raise InputError(
                    f'tolerance {field.name} must be positive',
                    **{field.name: value})
        if self.order not in (2, 4):
            raise InputError('order must be 2 or 4', order=self.order)

    def with_tol(self, tol):
        """Return a copy with the general residual tolerances set to `tol`.

        Examples
        --------
        >>> Tolerances().with_tol(1e-8).tol_herm
        1e-08

        """
        return replace(self, tol=tol, tol_bio=tol, tol_herm=tol)

    @classmethod
    def from_environment(cls, environ=None):
        """Read overrides from the ``NHQM_DEFAULT_TOL`` environment variable.

        Examples
        --------
        >>> Tolerances.from_environment({'NHQM_DEFAULT_TOL': '1e-9'}).tol
        1e-09
        >>> Tolerances.from_environment({}).tol
        1e-10

        """
        if environ is None:
            environ = os.environ
        value = environ.get(ENVIRONMENT_VARIABLE)
        if value is None:
            return cls()
        try:
            tol = float(value)
        except ValueError:
            raise InputError(
                f'{ENVIRONMENT_VARIABLE} is not a number: {value!r}')
        log.debug('%s overrides default tolerance: %g',
                  ENVIRONMENT_VARIABLE, tol)
        return cls().with_tol(tol)


DEFAULT = Tolerances()
"""Built-in tolerances.

Notes
-----
``tol = tol_bio = tol_herm = 1e-10``, ``tol_spec = 1e-8``,
``kappa_max = 1e8``, ``kron_cap = 4096``, second-order propagators with 1000
steps per unit time. The environment variable ``NHQM_DEFAULT_TOL`` changes
the general residual tolerance; see :func:`current`.
"""

_active = None


@lru_cache()
def _from_setting(value):
    environ = {} if value is None else {ENVIRONMENT_VARIABLE: value}
    return Tolerances.from_environment(environ)


def current():
    """Tolerances in effect when a caller does not pass its own.

    These are the tolerances of the innermost :func:`override`, or else
    :data:`DEFAULT` with ``NHQM_DEFAULT_TOL`` applied. The environment is
    read on each call, so a malformed value is reported by the first
    computation that needs a default rather than on import.

    Raises
    ------
    InputError
        If ``NHQM_DEFAULT_TOL`` is set but not a positive number.
    """
    if _active is not None:
        return _active
    return _from_setting(os.environ.get(ENVIRONMENT_VARIABLE))


def resolve(value, name):
    """Return `value`, or the default tolerance `name` if `value` is None."""
    if value is None:
        return getattr(current(), name)
    if not value > 0:
        raise InputError(f'{name} must be positive', **{name: value})
    return value


@contextmanager
def override(tolerances):
    """Put `tolerances` in effect for the duration of a ``with`` block.

    Examples
    --------
    >>> with override(Tolerances(tol_cycle=1e-6)):
    ...     resolve(None, 'tol_cycle')
    1e-06
    >>> resolve(None, 'tol_cycle')
    1e-08

    """
    global _active
    saved = _active
    _active = tolerances
    try:
        yield tolerances
    finally:
        _active = saved
