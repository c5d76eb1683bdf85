#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Write an example operator, metric, or state as a JSON document."""
import sys

from ligo.skymap.tool import ArgumentParser

from ..cli import add_common_arguments, dispatch

KINDS = ('pauli', 'pauli-metric', 'twolevel', 'bloch', 'metric35',
         'metric35-metric', 'jordan', 'builder')


def parser():
    p = ArgumentParser(prog='nhqm make')
    p.add_argument('kind', choices=KINDS, help='What to write')

    group = p.add_argument_group(
        'deformed Pauli matrices', 'Options for pauli and pauli-metric')
    group.add_argument('--omega', type=float, default=0.0,
                       help='Deformation angle [default: %(default)s]')
    group.add_argument('--axis', choices=('x', 'y', 'z'), default='z',
                       help='Pauli matrix [default: %(default)s]')

    group = p.add_argument_group('two-level Hamiltonian')
    group.add_argument('--r', type=float, default=1.0,
                       help='Modulus of the diagonal [default: %(default)s]')
    group.add_argument('--theta', type=float, default=0.0,
                       help='Phase of the diagonal, or polar angle of the '
                       'Bloch state [default: %(default)s]')
    group.add_argument('--gamma', type=float, default=1.0,
                       help='Off-diagonal coupling [default: %(default)s]')

    group = p.add_argument_group('Bloch state')
    group.add_argument('--phi', type=float, default=0.0,
                       help='Azimuthal angle [default: %(default)s]')

    group = p.add_argument_group(
        'metric-dependent operator', 'Options for metric35 and '
        'metric35-metric')
    group.add_argument('--delta', type=float, default=0.25,
                       help='Spectral parameter [default: %(default)s]')
    group.add_argument('--r-plus', type=float, default=1.0,
                       help='Weight of the first metric component '
                       '[default: %(default)s]')
    group.add_argument('--r-minus', type=float, default=1.0,
                       help='Weight of the second metric component '
                       '[default: %(default)s]')

    group = p.add_argument_group('other')
    group.add_argument('--dim', type=int, default=2,
                       help='Dimension of the Jordan block '
                       '[default: %(default)s]')
    group.add_argument('--spec', default='born-a',
                       help='Builder specification such as '
                       '"pauli-x:omega=0.3" [default: %(default)s]')
    return add_common_arguments(p)


def execute(config):
    # Late imports
    from .. import paraops
    from ..errors import InputError
    from ..io import to_document

    o = config.options
    kind = o['kind']
    if kind == 'pauli':
        value = paraops.deformed_pauli(o['omega'])['xyz'.index(o['axis'])]
    elif kind == 'pauli-metric':
        value = paraops.deformed_pauli_metric(o['omega'])
    elif kind == 'twolevel':
        value = paraops.two_level_hamiltonian(o['r'], o['theta'], o['gamma'])
    elif kind == 'bloch':
        value = paraops.bloch_state(o['theta'], o['phi'])
    elif kind == 'metric35':
        value = paraops.metric_dependent_operator(o['delta'])
    elif kind == 'metric35-metric':
        value = paraops.example_metric(o['delta'], o['r_plus'],
                                       o['r_minus'])
    elif kind == 'jordan':
        if o['dim'] < 1:
            raise InputError('dimension must be positive', dim=o['dim'])
        value = paraops.jordan_block(o['dim'])
    elif kind == 'builder':
        value = paraops.build(o['spec'])
    else:
        raise AssertionError('this code should not be reached')
    return to_document(value)


def main(args=None):
    args = parser().parse_args(args)
    return dispatch('make', args)


if __name__ == '__main__':
    sys.exit(main())
