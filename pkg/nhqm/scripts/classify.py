#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Classify an operator as Hermitian, para-Hermitian, (para-)unitary, or
neither."""
import sys

from ligo.skymap.tool import ArgumentParser

from ..cli import add_common_arguments, dispatch


def parser():
    p = ArgumentParser(prog='nhqm classify')
    p.add_argument('--input', '-i', metavar='MATRIX.json', required=True,
                   help='Operator to classify')
    p.add_argument('--evolution', action='store_true',
                   help='Treat the operator as an evolution operator and '
                   'test the unit circle instead of the real axis')
    return add_common_arguments(p)


def execute(config):
    # Late imports
    from ..errors import NonDiagonalizable
    from ..paraops import Kind, classify

    result = classify(config.matrix('input'),
                      evolution=config.options['evolution'])
    doc = result.to_dict()
    if result.kind is Kind.NON_DIAGONALIZABLE:
        e = NonDiagonalizable('operator is not diagonalizable',
                              kind=result.kind.value,
                              kappa=result.diagnostics['kappa'])
        e.artifact = doc
        raise e
    return doc


def main(args=None):
    args = parser().parse_args(args)
    return dispatch('classify', args, inputs=('input',))


if __name__ == '__main__':
    sys.exit(main())
