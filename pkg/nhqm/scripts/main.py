#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Numerical toolkit for non-Hermitian quantum mechanics."""
from argparse import REMAINDER
from importlib import import_module
import sys

from ligo.skymap.tool import ArgumentParser

from ..cli import COMMANDS


def parser():
    p = ArgumentParser(prog='nhqm')
    p.add_argument('command', choices=COMMANDS,
                   help='Sub-command; run nhqm COMMAND --help for its options')
    p.add_argument('arguments', nargs=REMAINDER,
                   help='Arguments of the sub-command')
    return p


def main(args=None):
    if args is None:
        args = sys.argv[1:]
    args = list(args)
    if not args or args[0] not in COMMANDS:
        # Prints help, or exits with a usage error.
        args = parser().parse_args(args)
        args = [args.command, *args.arguments]
    module = import_module(f'{__package__}.{args[0]}')
    return module.main(args[1:])


if __name__ == '__main__':
    sys.exit(main())
