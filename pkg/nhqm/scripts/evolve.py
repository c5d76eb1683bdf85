#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Evolve a state under a constant para-Hermitian Hamiltonian."""
import sys

from ligo.skymap.tool import ArgumentParser

from ..cli import add_common_arguments, dispatch


def add_hamiltonian_arguments(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--ham', metavar='MATRIX.json',
                       help='Hamiltonian file')
    group.add_argument('--builder', metavar='SPEC',
                       help='Hamiltonian builder such as '
                       '"minus-sigma-z:omega=0.3"')
    group = p.add_argument_group('integration options')
    group.add_argument('--steps', type=int,
                       help='Number of propagator steps [default: 1000 per '
                       'unit time]')
    group.add_argument('--order', type=int, choices=(2, 4),
                       help='Order of the Magnus integrator [default: 2]')
    return p


def hamiltonian(config):
    """The Hamiltonian of a run, from a file or a builder."""
    # Late imports
    from ..paraops import build

    if 'ham' in config.inputs:
        return config.matrix('ham')
    return build(config.options['builder'])


def parser():
    p = ArgumentParser(prog='nhqm evolve')
    add_hamiltonian_arguments(p)
    p.add_argument('--t', type=float, required=True, metavar='T',
                   help='Final time')
    p.add_argument('--state', metavar='VECTOR.json',
                   help='Initial state [default: first basis vector]')
    return add_common_arguments(p, formats=('csv', 'ecsv'))


def execute(config):
    # Late imports
    from astropy.table import Table
    import numpy as np

    from ..evolve import evolve_state, propagator

    H = hamiltonian(config)
    if 'state' in config.inputs:
        psi0 = config.vector('state')
    else:
        psi0 = np.eye(len(H))[0]
    P = propagator(lambda t: H, config.options['t'],
                   steps=config.options.get('steps'),
                   order=config.options.get('order'))
    psi = evolve_state(P, psi0)

    table = Table({'t': P.grid})
    table['t'].description = 'Time'
    for n in range(P.dim):
        table[f're_{n}'] = psi[:, n].real
        table[f'im_{n}'] = psi[:, n].imag
        table[f're_{n}'].description = f'Real part of amplitude {n}'
        table[f'im_{n}'].description = f'Imaginary part of amplitude {n}'
    table['norm'] = np.linalg.norm(psi, axis=1)
    table['norm'].description = 'Euclidean norm of the state'
    composition, invertibility = P.defects()
    table.meta['order'] = P.order
    table.meta['composition_defect'] = composition
    table.meta['invertibility_defect'] = invertibility
    return table


def main(args=None):
    args = parser().parse_args(args)
    return dispatch('evolve', args, inputs=('ham', 'state'))


if __name__ == '__main__':
    sys.exit(main())
