#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Time-optimal transfer between orthogonal states of a two-level
para-Hermitian Hamiltonian, at one point or over a parameter grid."""
import sys

from ligo.skymap.tool import ArgumentParser

from ..cli import add_common_arguments, dispatch

COLUMNS = ('r', 'theta', 'gamma', 'omega', 'phi', 't_analytic',
           't_simulated', 'hermitian_bound')

DESCRIPTIONS = {
    'omega': 'Eigenvalue gap',
    'phi': 'Angle with sin(phi) = (r / gamma) sin(theta)',
    't_analytic': 'Transfer time (2 phi + pi) / omega',
    't_simulated': 'Transfer time found by evolving the state',
    'hermitian_bound': 'Transfer time pi / omega of a Hermitian '
                       'Hamiltonian with the same gap'}

SWEEPABLE = ('r', 'theta', 'gamma', 'phi')


def parser():
    p = ArgumentParser(prog='nhqm brachistochrone')
    p.add_argument('--r', type=float, default=0.0,
                   help='Modulus of the diagonal [default: %(default)s]')
    p.add_argument('--theta', type=float, default=0.0,
                   help='Phase of the diagonal [default: %(default)s]')
    p.add_argument('--gamma', type=float, default=1.0,
                   help='Off-diagonal coupling [default: %(default)s]')
    p.add_argument('--gap', type=float, metavar='OMEGA',
                   help='Fix the eigenvalue gap and sweep phi instead of '
                   'r, theta and gamma')
    p.add_argument('--phi', type=float, default=0.0,
                   help='Angle phi of the fixed-gap family, used with --gap '
                   '[default: %(default)s]')
    p.add_argument('--no-simulate', dest='simulate', action='store_false',
                   help='Skip the numerical confirmation')

    group = p.add_argument_group('sweep options')
    group.add_argument('--sweep', action='append', default=[],
                       metavar='NAME=START:STOP:STEP|NAME=V1,V2',
                       help='Sweep a parameter: one of r, theta, gamma, or '
                       'phi with --gap. May be repeated.')
    group.add_argument('-j', '--jobs', type=int, default=1, const=None,
                       nargs='?', help='Number of worker processes')
    return add_common_arguments(p, formats=('csv', 'ecsv'))


def transfer(r=0.0, theta=0.0, gamma=1.0, phi=0.0, gap=None,
             simulate=True):
    """One row of the output table."""
    # Late imports
    import numpy as np

    from ..evolve import brachistochrone, parameters_for_gap

    if gap is not None:
        r, theta, gamma = parameters_for_gap(gap, phi)
    row = brachistochrone(r, theta, gamma, simulate=simulate).to_dict()
    if row['t_simulated'] is None:
        row['t_simulated'] = np.nan
    return row


def execute(config):
    # Late imports
    from ..errors import GridParseError
    from ..sweep import parse_grid, sweep

    o = config.options
    grids = [parse_grid(spec) for spec in o['sweep']]
    for name, _ in grids:
        if name not in SWEEPABLE or (name == 'phi') != (o['gap'] is not None):
            raise GridParseError(
                f'cannot sweep {name!r}; sweep r, theta, gamma, or phi '
                f'with --gap')
    fixed = {'simulate': o['simulate']}
    if o['gap'] is None:
        fixed.update(r=o['r'], theta=o['theta'], gamma=o['gamma'])
    else:
        fixed.update(gap=o['gap'], phi=o['phi'])
    return sweep(transfer, grids, COLUMNS, fixed=fixed, jobs=o['jobs'],
                 descriptions=DESCRIPTIONS)


def main(args=None):
    args = parser().parse_args(args)
    return dispatch('brachistochrone', args)


if __name__ == '__main__':
    sys.exit(main())
