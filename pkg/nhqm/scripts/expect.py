#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Expectation of an observable in a measurement context."""
import logging
import sys

from ligo.skymap.tool import ArgumentParser

from ..cli import add_common_arguments, dispatch

log = logging.getLogger(__name__)


def parser():
    p = ArgumentParser(prog='nhqm expect')
    p.add_argument('--obs', metavar='MATRIX.json', required=True,
                   help='Observable')
    p.add_argument('--metric', metavar='METRIC.json', default='auto',
                   help='Metric operator file, "auto" for the canonical '
                   'metric of the observable, or "identity" '
                   '[default: %(default)s]')
    p.add_argument('--state', metavar='VECTOR.json', required=True,
                   help='State; need not be normalized')
    return add_common_arguments(p, formats=('json', 'csv'))


def execute(config):
    # Late imports
    from astropy.table import Table

    from ..born import expect, expect_discrete, naive_expect
    from ..io import complex_pair
    from ..paraops import MetricOp, is_metric_for, para_hermitian_system

    A = config.matrix('obs')
    psi = config.vector('state')
    doc = {}
    metric = config.options.get('metric')
    if 'metric' in config.inputs:
        G = MetricOp.from_matrix(config.matrix('metric'))
        if not is_metric_for(G, A):
            log.warning('metric does not make the observable Hermitian; '
                        'the expectation may be complex')
    elif metric in (None, 'auto'):
        outcome = expect_discrete(para_hermitian_system(A, 'observable'), psi)
        G = outcome.context
        doc.update(outcome.to_dict())
    else:
        G = MetricOp.identity(len(A))
    doc['expectation'] = complex_pair(expect(A, G, psi))
    doc['naive'] = complex_pair(naive_expect(A, psi))

    if config.format == 'csv':
        names = ('expectation', 'naive')
        return Table({'quantity': names,
                      're': [doc[name][0] for name in names],
                      'im': [doc[name][1] for name in names]})
    return doc


def main(args=None):
    args = parser().parse_args(args)
    return dispatch('expect', args, inputs=('obs', 'metric', 'state'))


if __name__ == '__main__':
    sys.exit(main())
