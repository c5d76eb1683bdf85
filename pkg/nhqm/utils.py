#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Miscellaneous utilities."""
import shlex
import sys

import numpy as np


def local_minima(a, below=np.inf):
    """Find the interior local minima of an array.

    A sample is a minimum if it is no larger than its left neighbor and
    strictly smaller than its right neighbor, so that the last sample of a
    flat valley is reported.

    Parameters
    ----------
    a : numpy.ndarray
       A 1D array of length `N`.
    below : float
       Only report minima whose value is less than this.

    Returns
    -------
    indices : numpy.ndarray
       Indices of the minima in increasing order.

    Examples
    --------
    >>> local_minima([]).tolist()
    []
    >>> local_minima([3, 1, 2, 0, 0, 1]).tolist()
    [1, 4]
    >>> local_minima([3, 1, 2, 0, 0, 1], below=0.5).tolist()
    [4]
    >>> local_minima([1, 2, 3]).tolist()
    []

    """
    a = np.asarray(a, dtype=float)
    if a.size < 3:
        return np.empty(0, dtype=int)
    middle = a[1:-1]
    return np.flatnonzero(
        (middle <= a[:-2]) & (middle < a[2:]) & (middle < below)) + 1


def record_run(meta, stopwatch, argv=None):
    """Store the command line and the timings of a run in table metadata."""
    meta['cmdline'] = shlex.join(sys.argv if argv is None else argv)
    meta['real'] = stopwatch.real
    meta['user'] = stopwatch.user
    meta['sys'] = stopwatch.sys
