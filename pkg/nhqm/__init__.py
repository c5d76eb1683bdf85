#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Numerical toolkit for finite-dimensional non-Hermitian quantum mechanics."""
from .config import Tolerances
from .errors import NHQMError
__all__ = ('NHQMError', 'Tolerances')
