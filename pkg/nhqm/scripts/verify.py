#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Run the regression suite against closed-form results.

The exit code is 0 if every check passes and 2 otherwise; the table of
results is written in either case.
"""
import sys

from ligo.skymap.tool import ArgumentParser

from ..cli import add_common_arguments, dispatch


def parser():
    # Late imports
    from ..regression import SUITES

    p = ArgumentParser(prog='nhqm verify')
    p.add_argument('--suite', choices=sorted(SUITES), default='paper',
                   help='Suite of checks [default: %(default)s]')
    p.add_argument('--check', action='append', default=[], metavar='NAME',
                   help='Run only this check. May be repeated.')
    p.add_argument('--progress', action='store_true',
                   help='Show a progress bar')
    return add_common_arguments(p, formats=('text', 'csv', 'ecsv'))


def execute(config):
    # Late imports
    from ..errors import InputError, RegressionFailure
    from ..regression import SUITES, run_checks

    o = config.options
    checks = SUITES[o['suite']]
    if o['check']:
        known = {check.name: check for check in checks}
        unknown = sorted(set(o['check']) - set(known))
        if unknown:
            raise InputError(f'unknown checks: {", ".join(unknown)}',
                             choices=', '.join(known))
        checks = [known[name] for name in o['check']]

    table = run_checks(checks, progress=o['progress'])
    failed = [row['name'] for row in table if not row['passed']]
    if failed:
        e = RegressionFailure(f'{len(failed)} of {len(table)} checks failed',
                              failed=', '.join(failed))
        e.artifact = table
        raise e
    return table


def main(args=None):
    args = parser().parse_args(args)
    return dispatch('verify', args)


if __name__ == '__main__':
    sys.exit(main())
