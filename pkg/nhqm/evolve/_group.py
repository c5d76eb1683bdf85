#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from dataclasses import dataclass
import itertools
import logging

import numpy as np

from ..matkit import as_matrix, op_norm
from ..paraops import func_calc, metric_from_eigensystem, para_hermitian_system

__all__ = ('group', 'StoneReport', 'stone_check')

log = logging.getLogger(__name__)


def group(H, t, sys=None):
    """One-parameter group :math:`U(t) = e^{-itH}` of a para-Hermitian
    operator.

    Parameters
    ----------
    H : numpy.ndarray
        Para-Hermitian generator.
    t : float
        Time (:math:`\\hbar = 1`).
    sys : nhqm.matkit.EigSystem, optional
        Precomputed eigensystem of `H`.

    Raises
    ------
    NotParaHermitian
        If `H` is not diagonalizable with a real spectrum.

    Examples
    --------
    >>> import numpy as np
    >>> from nhqm.paraops import deformed_pauli
    >>> np.allclose(group(deformed_pauli(0.4)[2], np.pi), -np.eye(2))
    True

    """
    if sys is None:
        sys = para_hermitian_system(H, 'generator')
    return func_calc(sys, lambda z: np.exp(-1j * t * z.real))


@dataclass(frozen=True)
class StoneReport:
    """Numerical evidence that :math:`e^{-itH}` is a bounded group of
    para-unitary operators generated by :math:`H`."""

    group_law_defect: float
    """Largest :math:`\\|U(t+s) - U(t)U(s)\\|`, relative to
    :math:`\\max(1, \\|U(t)\\|\\,\\|U(s)\\|)`."""

    norm_bound: float
    """The bound :math:`\\|G^{-1/2}\\|\\,\\|G^{1/2}\\|` for the canonical
    metric :math:`G`."""

    max_norm: float
    """Largest :math:`\\|U(t)\\|` over the sampled times."""

    norm_bound_defect: float
    """Amount by which :attr:`max_norm` exceeds :attr:`norm_bound`, or
    zero."""

    unitarity_defect: float
    """Largest :math:`|\\,\\|G^{1/2}U(t)G^{-1/2}\\| - 1|`."""

    deltas: tuple
    """Step sizes :math:`\\Delta` of the generator recovery ladder."""

    generator_errors: tuple
    """:math:`\\|(U(\\Delta) - I)/\\Delta + iH\\|` for each step."""

    rate: float
    """Observed order of convergence of the generator recovery; the
    slope of the log-log fit, close to 1."""

    def to_dict(self):
        return {'group_law_defect': self.group_law_defect,
                'norm_bound': self.norm_bound,
                'max_norm': self.max_norm,
                'norm_bound_defect': self.norm_bound_defect,
                'unitarity_defect': self.unitarity_defect,
                'deltas': list(self.deltas),
                'generator_errors': list(self.generator_errors),
                'rate': self.rate}


def stone_check(H, times, deltas=(1e-2, 1e-3, 1e-4)):
    """Verify the group, boundedness and generator properties of
    :math:`e^{-itH}`.

    Parameters
    ----------
    H : numpy.ndarray
        Para-Hermitian generator.
    times : array-like
        Times at which the group law :math:`U(t+s) = U(t)U(s)` is checked for
        every pair :math:`(t, s)`.
    deltas : tuple
        Decreasing step sizes for the generator recovery.

    Returns
    -------
    StoneReport

    Raises
    ------
    NotParaHermitian
        If `H` is not diagonalizable with a real spectrum.

    Examples
    --------
    >>> from nhqm.paraops import deformed_pauli
    >>> report = stone_check(deformed_pauli(0.5)[0], [0.1, 0.7, 2.0])
    >>> report.group_law_defect < 1e-10
    True
    >>> round(report.rate, 1)
    1.0

    """
    H = as_matrix(H)
    sys = para_hermitian_system(H, 'generator')
    G = metric_from_eigensystem(sys)
    norm_bound = op_norm(G.inv_sqrt) * op_norm(G.sqrt)
    times = np.atleast_1d(np.asarray(times, dtype=float))

    log.debug('checking group law at %d times', len(times))
    cache = {float(t): group(H, t, sys) for t in times}
    group_law_defect = 0.0
    for t, s in itertools.combinations_with_replacement(cache, 2):
        Ut, Us = cache[t], cache[s]
        defect = op_norm(group(H, t + s, sys) - Ut @ Us)
        scale = max(1.0, op_norm(Ut) * op_norm(Us))
        group_law_defect = max(group_law_defect, defect / scale)

    norms = [op_norm(U) for U in cache.values()]
    max_norm = max(norms, default=0.0)
    unitarity_defect = max(
        (abs(op_norm(G.sqrt @ U @ G.inv_sqrt) - 1) for U in cache.values()),
        default=0.0)

    eye = np.eye(len(H))
    errors = tuple(
        op_norm((group(H, delta, sys) - eye) / delta + 1j * H)
        for delta in deltas)
    with np.errstate(divide='ignore'):
        rate = float(np.polyfit(np.log(deltas), np.log(errors), 1)[0])

    return StoneReport(group_law_defect, norm_bound, max_norm,
                       max(0.0, max_norm - norm_bound), unitarity_defect,
                       tuple(deltas), errors, rate)
