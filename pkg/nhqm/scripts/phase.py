#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Observable-geometric phases of a cyclic evolution."""
import sys

from ligo.skymap.tool import ArgumentParser

from ..cli import add_common_arguments, dispatch
from .evolve import add_hamiltonian_arguments


def parser():
    p = ArgumentParser(prog='nhqm phase')
    add_hamiltonian_arguments(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--x0', metavar='MATRIX.json',
                       help='Initial observable')
    group.add_argument('--bloch-phi', type=float, metavar='PHI',
                       help='Use cos(PHI) sigma_z + sin(PHI) sigma_x as the '
                       'initial observable')
    p.add_argument('--horizon', type=float, default=10.0,
                   help='Time up to which a period is searched for '
                   '[default: %(default)s]')
    p.add_argument('--trials', type=int, default=5,
                   help='Draws of each kind in the invariance suite; 0 to '
                   'skip it [default: %(default)s]')
    p.add_argument('--seed', type=int, help='Random seed')

    group = p.add_argument_group('sweep options')
    group.add_argument('--sweep', action='append', default=[],
                       metavar='NAME=START:STOP:STEP|NAME=V1,V2',
                       help='Sweep a builder parameter, or phi with '
                       '--bloch-phi, and write a table of phases. May be '
                       'repeated.')
    group.add_argument('-j', '--jobs', type=int, default=1, const=None,
                       nargs='?', help='Number of worker processes')
    return add_common_arguments(p, formats=('json', 'csv', 'ecsv'))


def with_parameters(spec, **params):
    """Builder specification `spec` with some parameters replaced.

    Examples
    --------
    >>> with_parameters('minus-sigma-z:omega=0.3', omega=0.5)
    'minus-sigma-z:omega=0.5'

    """
    name, _, given = spec.partition(':')
    merged = dict(item.split('=', 1)
                  for item in filter(None, (s.strip()
                                            for s in given.split(','))))
    merged.update({key: repr(float(value)) for key, value in params.items()})
    return ':'.join(
        (name, ','.join(f'{key}={value}' for key, value in merged.items())))


def cycle(H, X0, horizon, steps=None, order=None):
    """Cyclic evolution of `X0` under the constant Hamiltonian `H`."""
    # Late imports
    from ..evolve import propagator
    from ..geophase import detect_cycle, heisenberg_evolve

    P = propagator(lambda t: H, horizon, steps=steps, order=order)
    return detect_cycle(heisenberg_evolve(X0, P), P)


def phases_at(builder, horizon, steps=None, order=None, phi=None,
              **params):
    """One row of the sweep table."""
    # Late imports
    from ..geophase import geometric_phases
    from ..paraops import bloch_observable, build

    H = build(with_parameters(builder, **params))
    C = cycle(H, bloch_observable(phi), horizon, steps, order)
    report = geometric_phases(C)
    row = {'tau': C.tau}
    for n, beta in enumerate(report.beta):
        row[f'beta_{n}_re'] = beta.real
        row[f'beta_{n}_im'] = beta.imag
    return row


def _sweep(config):
    # Late imports
    from ..errors import InputError
    from ..sweep import parse_grid, sweep

    o = config.options
    if o['builder'] is None or o['bloch_phi'] is None:
        raise InputError('sweeps need --builder and --bloch-phi')
    grids = [parse_grid(spec) for spec in o['sweep']]
    columns = [name for name, _ in grids] + ['tau']
    for n in range(2):
        columns += [f'beta_{n}_re', f'beta_{n}_im']
    fixed = {'builder': o['builder'], 'horizon': o['horizon'],
             'steps': o['steps'], 'order': o['order'], 'phi': o['bloch_phi']}
    return sweep(phases_at, grids, columns, fixed=fixed, jobs=o['jobs'],
                 descriptions={'tau': 'Period of the observable'})


def execute(config):
    # Late imports
    import numpy as np

    from ..errors import InputError
    from ..geophase import (Decomposition, geometric_phases, holonomy,
                            holonomy_diagonal, horizontal_lift,
                            invariance_suite)
    from ..paraops import bloch_observable
    from .evolve import hamiltonian

    o = config.options
    if o['sweep']:
        return _sweep(config)
    if config.format != 'json':
        raise InputError('tables are written for sweeps only; '
                         'use --format json')

    H = hamiltonian(config)
    if 'x0' in config.inputs:
        X0 = config.matrix('x0')
    else:
        X0 = bloch_observable(o['bloch_phi'])
    C = cycle(H, X0, o['horizon'], o['steps'], o['order'])
    report = geometric_phases(C)
    doc = report.to_dict()
    doc['cycle_defect'] = C.defect

    V0 = np.array(C.X0_system.right)
    lift = horizontal_lift(C.propagator, Decomposition.standard(C.dim), V0,
                           start=C.start)
    diagonal = holonomy_diagonal(holonomy(lift, C), V0, lift.reference)
    doc['holonomy'] = {
        'deviation': float(np.max(np.abs(diagonal - report.holonomy_diag))),
        'transport_defect': lift.transport_defect,
        'ode_agreement': lift.ode_agreement}

    if o['trials'] > 0:
        doc['invariance'] = invariance_suite(
            C, trials=o['trials'], seed=o['seed']).to_dict()
    return doc


def main(args=None):
    args = parser().parse_args(args)
    return dispatch('phase', args, inputs=('ham', 'x0'))


if __name__ == '__main__':
    sys.exit(main())
