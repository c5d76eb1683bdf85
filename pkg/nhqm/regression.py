#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Regression checks against known closed-form results.

Each :class:`Check` measures how far the toolkit deviates from closed-form
values and passes if every deviation is within its tolerance.
:data:`FULL_CHECKS` collects the worked examples of the theory: the Born
rule with a metric, the deformed Pauli matrices, the metric dependence of
expectations, one-parameter groups, the quantum brachistochrone, and the
observable-geometric phases of a qubit. :data:`EXAMPLE_CHECKS` runs the
same checks on fewer random instances.

Examples
--------
>>> table = run_checks([check for check in EXAMPLE_CHECKS
...                     if check.name == 'born-rule'])
>>> bool(table['passed'][0])
True

"""
from dataclasses import dataclass
from functools import partial
import itertools
import logging
from typing import Callable, Iterable, Tuple

from astropy.table import Table
import numpy as np
from scipy.linalg import sqrtm
from tqdm import tqdm

from .born import biorthogonal_expect, expect, expect_discrete, naive_expect
from .errors import NHQMError
from .evolve import (brachistochrone, parameters_for_gap, propagator,
                     stone_check)
from .geophase import (Decomposition, detect_cycle, geometric_phases,
                       geometric_phases_loop, heisenberg_evolve, holonomy,
                       holonomy_diagonal, horizontal_lift, invariance_suite,
                       phase_deviation)
from .io import load_example
from .matkit import eig_general, op_norm
from .paraops import (MetricOp, bloch_observable, bloch_state,
                      deformed_pauli, deformed_pauli_metric, example_metric,
                      hermitianize, metric_dependent_operator,
                      metric_from_eigensystem, pauli)

__all__ = ('Check', 'FULL_CHECKS', 'EXAMPLE_CHECKS', 'SUITES', 'run_checks',
           'qubit_phases', 'metric_dependence_oracle', 'transfer_grid')

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    """A named regression check."""

    name: str
    description: str

    compute: Callable[[], Iterable[Tuple[str, float, float]]]
    """Function yielding ``(quantity, deviation, tolerance)`` triples."""


def _born_rule():
    A = load_example('born-example-a.json')
    G = MetricOp.from_matrix(load_example('born-example-metric.json'))
    psi = load_example('born-example-state.json', 'vector')
    yield 'expectation', abs(expect(A, G, psi)), 1e-12
    yield 'naive expectation', abs(naive_expect(A, psi) - 1.5j), 1e-12
    yield 'Hermitian image', op_norm(hermitianize(A, G) - 2 * pauli()[0]), \
        1e-12


def _deformed_pauli():
    sx0, sy0, sz0 = pauli()
    grid = np.linspace(0, np.pi, 6)
    algebra = images = expectations = 0.0
    for omega in np.linspace(-1.2, 1.2, 13):
        sx, sy, sz = deformed_pauli(omega)
        algebra = max(algebra, op_norm(sx @ sy - 1j * sz),
                      op_norm(sy @ sz - 1j * sx), op_norm(sz @ sx - 1j * sy))
        G = MetricOp.from_matrix(deformed_pauli_metric(omega))
        images = max(images, op_norm(hermitianize(sz, G) - sz0),
                     op_norm(hermitianize(sx, G) - sx0))
        for theta in grid:
            for phi in 2 * grid:
                psi = bloch_state(theta, phi)
                expectations = max(
                    expectations,
                    abs(expect(sz, G, psi) - np.cos(theta)),
                    abs(expect(sy, G, psi) - np.sin(theta) * np.sin(phi)))
    yield 'commutation relations', algebra, 1e-12
    yield 'Hermitian images', images, 1e-10
    yield 'Bloch expectations', expectations, 1e-10


def metric_dependence_oracle(A, G, psi):
    """Expectation at `psi` with the metric square root taken by
    :func:`scipy.linalg.sqrtm`, independently of :mod:`nhqm.matkit`."""
    S = sqrtm(np.asarray(G, dtype=complex))
    psi = np.asarray(psi, dtype=complex)
    value = np.vdot(psi, S @ A @ np.linalg.solve(S, psi))
    return complex(value / np.vdot(psi, psi).real)


def _metric_dependence():
    A = metric_dependent_operator(0.25)
    psi = np.asarray([1, 0])
    exact = {(1, 1): 0.5,
             (1, 2): (10 + 6 * np.sqrt(2)) / (16 + 15 * np.sqrt(2))}
    values = []
    for (r_plus, r_minus), value in exact.items():
        G = example_metric(0.25, r_plus, r_minus)
        computed = expect(A, MetricOp.from_matrix(G), psi)
        yield (f'oracle ({r_plus}, {r_minus})',
               abs(computed - metric_dependence_oracle(A, G, psi)), 1e-10)
        yield f'closed form ({r_plus}, {r_minus})', abs(computed - value), \
            1e-10
        values.append(computed)
    yield 'threshold / difference', 1e-3 / abs(values[0] - values[1]), 1.0


def _random_para_hermitian(dim, rng):
    noise = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    V = np.eye(dim) + 0.5 * noise / np.sqrt(dim)
    w = np.sort(rng.uniform(-1, 1, dim))
    return V @ np.diag(w) @ np.linalg.inv(V)


def _random_state(dim, rng):
    return rng.normal(size=dim) + 1j * rng.normal(size=dim)


def _probabilities(pairs=15):
    rng = np.random.default_rng(0)
    worst = 0.0
    for k in range(pairs):
        dim = 2 + k % 15
        sys = eig_general(_random_para_hermitian(dim, rng))
        psi = _random_state(dim, rng)
        G = expect_discrete(sys, psi).context
        # Sum before renormalization
        amplitudes = sys.left.conj().T @ (G.inv_sqrt @ psi)
        total = np.sum(np.abs(amplitudes) ** 2) / np.vdot(psi, psi).real
        worst = max(worst, abs(total - 1))
    yield 'sum of probabilities', worst, 1e-10


def _biorthogonal(instances=7):
    rng = np.random.default_rng(1)
    worst = 0.0
    for k in range(instances):
        dim = 2 + k % 7
        T = _random_para_hermitian(dim, rng)
        sys = eig_general(T)
        G = metric_from_eigensystem(sys)
        psi = _random_state(dim, rng)
        worst = max(worst, abs(biorthogonal_expect(T, sys, psi)
                               - expect(T, G, G.sqrt @ psi)))
    yield 'expectation', worst, 1e-9


def _stone(instances=0):
    times = [0.1, 0.5, 1.3, 2.9]
    report = stone_check(deformed_pauli(0.4)[0], times)
    yield 'group law', report.group_law_defect, 1e-10
    yield 'norm bound', report.norm_bound_defect, 1e-9
    yield 'generator recovery rate', abs(report.rate - 1), 0.1
    rng = np.random.default_rng(2)
    group_law = norm_bound = rate = 0.0
    for _ in range(instances):
        report = stone_check(
            _random_para_hermitian(int(rng.integers(2, 9)), rng), times)
        group_law = max(group_law, report.group_law_defect)
        norm_bound = max(norm_bound, report.norm_bound_defect)
        rate = max(rate, abs(report.rate - 1))
    if instances:
        yield 'group law, random generators', group_law, 1e-10
        yield 'norm bound, random generators', norm_bound, 1e-9
        yield 'generator recovery rate, random generators', rate, 0.1


def transfer_grid():
    """The 200 Hamiltonian parameters :math:`(r, \\theta, \\gamma)` of the
    full brachistochrone check, all in the unbroken regime."""
    return list(itertools.product(
        (0.2, 0.5, 0.8, 1.1, 1.4), -np.pi + 2 * np.pi * np.arange(8) / 8,
        (1.6, 2, 2.5, 3, 4)))


def _brachistochrone(grid=((0.9, -np.pi / 2, 1), (0.5, 0.3, 1.2),
                           (1.5, 2.0, 2.0)), gap_angles=5):
    hermitian = brachistochrone(0, 0, 1, simulate=False)
    yield 'Hermitian bound', \
        abs(hermitian.t_transfer - hermitian.hermitian_bound), 1e-9
    worst = 0.0
    for r, theta, gamma in grid:
        result = brachistochrone(r, theta, gamma)
        worst = max(worst, abs(result.t_simulated - result.t_transfer))
    yield 'simulated transfer time', worst, 1e-6
    times = [brachistochrone(*parameters_for_gap(1.0, phi),
                             simulate=False).t_transfer
             for phi in np.linspace(0, -1.5, gap_angles)]
    yield 'increase at fixed gap', max(0.0, float(np.max(np.diff(times)))), \
        0.0


def qubit_phases(omega, phi):
    """Closed-form observable-geometric phases of the qubit driven by
    :math:`h = -\\sigma^\\omega_z` starting from
    :func:`~nhqm.paraops.bloch_observable` at angle `phi`.

    Returns
    -------
    beta : numpy.ndarray
        The phases of the eigenstates for eigenvalues -1 and +1, in that
        order.

    Examples
    --------
    >>> beta = qubit_phases(0, 0)
    >>> np.allclose(beta, [0, 2 * np.pi])
    True

    """
    ratio = np.cos(phi) / np.cos(omega)
    imag = np.sin(omega) * np.sin(phi) / np.cos(omega)
    return np.pi * np.asarray([1 - ratio - 1j * imag, 1 + ratio + 1j * imag])


def _qubit_cycle(omega, phi, steps=4000):
    h = -deformed_pauli(omega)[2]
    P = propagator(lambda t: h, 4.0, steps)
    return detect_cycle(heisenberg_evolve(bloch_observable(phi), P), P)


def _geometric_phases(steps=4000):
    period = phases = holonomies = 0.0
    for omega in (0.3, 0.6):
        for phi in (0.4, 0.9):
            C = _qubit_cycle(omega, phi, steps)
            report = geometric_phases(C)
            period = max(period, abs(C.tau - np.pi))
            phases = max(phases, phase_deviation(report.beta,
                                                 qubit_phases(omega, phi)))
            V0 = C.X0_system.right
            lift = horizontal_lift(C.propagator, Decomposition.standard(2),
                                   V0, start=C.start)
            diagonal = holonomy_diagonal(holonomy(lift, C), V0,
                                         lift.reference)
            holonomies = max(holonomies, float(np.max(np.abs(
                diagonal - np.exp(1j * report.beta)))))
    yield 'period', period, 1e-8
    yield 'phases', phases, 1e-6
    yield 'holonomy', holonomies, 1e-8


def _loop_formula():
    C = _qubit_cycle(0.3, 0.4, steps=40000)
    alphas = [lambda t, n=n: C.theta[n] * t / C.tau for n in range(C.dim)]
    yield 'phases', phase_deviation(geometric_phases(C).beta,
                                    geometric_phases_loop(C, alphas).beta), \
        1e-6


def _invariance(trials=3):
    report = invariance_suite(_qubit_cycle(0.3, 0.4), trials=trials, seed=0)
    yield 'reparameterization', report.reparameterization, 1e-6
    yield 'gauge', report.gauge, 1e-6
    yield 'measurement point', report.measurement_point, 1e-6


def _checks(pairs=15, instances=7, generators=0, grid=None, gap_angles=5,
            steps=4000, trials=3):
    brachistochrone_args = {'gap_angles': gap_angles}
    if grid is not None:
        brachistochrone_args['grid'] = grid
    return [
        Check('born-rule', 'Born rule with a metric: <A> = 0, naive <A> = '
              '3i/2, G^1/2 A G^-1/2 = 2 sigma_x', _born_rule),
        Check('deformed-pauli', 'Deformed Pauli algebra, Hermitian images '
              'and Bloch expectations', _deformed_pauli),
        Check('metric-dependence', 'Expectations depend on the choice of '
              'metric', _metric_dependence),
        Check('probabilities', f'Outcome probabilities sum to one over '
              f'{pairs} random pairs', partial(_probabilities, pairs)),
        Check('biorthogonal', f'Biorthogonal expectation equals the metric '
              f'expectation of G^1/2 psi over {instances} random operators',
              partial(_biorthogonal, instances)),
        Check('stone', 'Group law, norm bound and first-order generator '
              'recovery of exp(-itH)', partial(_stone, generators)),
        Check('brachistochrone', 'Analytic and simulated transfer times; '
              'Hermitian bound at r = 0; decrease at fixed gap',
              partial(_brachistochrone, **brachistochrone_args)),
        Check('qubit-phases', 'Observable-geometric phases, period and '
              'holonomy of the driven qubit', partial(_geometric_phases,
                                                      steps)),
        Check('loop-formula', 'Loop-integral and dynamical forms of the '
              'phases agree', _loop_formula),
        Check('invariance', 'Phases are invariant under reparameterization, '
              'gauge and measurement point', partial(_invariance, trials)),
    ]


FULL_CHECKS = _checks(pairs=1000, instances=500, generators=100,
                      grid=transfer_grid(), gap_angles=50, steps=20000,
                      trials=20)
"""Checks run by ``nhqm verify``: 1000 random Born pairs of dimension up to
16, 500 biorthogonal instances, 100 random generators, 200 brachistochrone
Hamiltonians and 20 invariance trials."""

EXAMPLE_CHECKS = _checks()
"""The same checks on a few instances each, run by
``nhqm verify --suite quick``."""

SUITES = {'paper': FULL_CHECKS, 'quick': EXAMPLE_CHECKS}


def _ratio(deviation, tolerance):
    with np.errstate(divide='ignore', invalid='ignore'):
        return np.float64(deviation) / tolerance


def run_checks(checks=EXAMPLE_CHECKS, progress=False):
    """Run regression checks.

    Returns
    -------
    astropy.table.Table
        One row per check. The quantity with the largest ratio of deviation
        to tolerance is reported; the check passes if every quantity is
        within its tolerance.
    """
    rows = []
    for check in tqdm(checks, disable=not progress):
        log.info('running check %s', check.name)
        try:
            results = [(quantity, float(deviation), tolerance)
                       for quantity, deviation, tolerance in check.compute()]
        except NHQMError as e:
            log.warning('check %s raised %s: %s', check.name, e.code, e)
            results = [(e.code, np.inf, 0.0)]
        quantity, deviation, tolerance = max(
            results, key=lambda result: _ratio(*result[1:]))
        passed = all(d <= t for _, d, t in results)
        if not passed:
            log.warning('check %s failed: %s deviates by %g > %g',
                        check.name, quantity, deviation, tolerance)
        rows.append((check.name, check.description, quantity, deviation,
                     tolerance, passed))
    names = ('name', 'description', 'quantity', 'deviation', 'tolerance',
             'passed')
    table = Table(rows=rows or None, names=names,
                  dtype=None if rows else (str, str, str, float, float, bool))
    table['quantity'].description = 'Quantity closest to its tolerance'
    table['deviation'].description = 'Deviation from the closed-form value'
    table['tolerance'].description = 'Largest deviation that passes'
    return table
