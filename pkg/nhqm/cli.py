#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Plumbing shared by the command-line tools.

Every tool parses its arguments into a :class:`RunConfig` and hands it to
:func:`run`, which executes the command, writes its output, and turns
failures into exit codes:

==== =================================================================
Code Meaning
==== =================================================================
0    Success; outputs written.
1    A file, option, or grid could not be read or parsed.
2    A domain or numerical error, such as a broken regime or a
     degenerate spectrum.
==== =================================================================

On failure, a JSON envelope ``{"code", "message", "diagnostics"}`` is
written to standard error.
"""
from dataclasses import dataclass, field
from importlib import import_module
import json
import logging
import os
import sys
from typing import Any, Mapping, Optional, Tuple

from astropy.table import Table
from ligo.skymap.tool import FileType

from . import config as _config
from . import io
from .errors import InputError, NHQMError
from .utils import record_run

__all__ = ('COMMANDS', 'FORMATS', 'RunConfig', 'add_common_arguments',
           'dispatch', 'run')

log = logging.getLogger(__name__)

COMMANDS = ('make', 'classify', 'expect', 'evolve', 'brachistochrone',
            'phase', 'verify')
"""Sub-commands of ``nhqm``."""

FORMATS = {'json': None, 'csv': 'ascii.csv', 'ecsv': 'ascii.ecsv',
           'text': 'ascii.fixed_width_two_line'}
"""Output formats and the :mod:`astropy.io.ascii` writers of tables."""

_SPECIAL_INPUTS = ('auto', 'identity')


def add_common_arguments(parser, formats=('json',)):
    """Add the output, format and tolerance options shared by every tool."""
    group = parser.add_argument_group('output options')
    group.add_argument(
        '-o', '--output', metavar='OUTPUT', type=FileType('w'), default='-',
        help='Output filename [default: stdout]')
    group.add_argument(
        '--format', choices=formats, default=formats[0],
        help='Output format [default: %(default)s]')
    group = parser.add_argument_group('numerical options')
    group.add_argument(
        '--tol', type=float, metavar='TOL',
        help='General residual tolerance; overrides NHQM_DEFAULT_TOL')
    return parser


@dataclass(frozen=True)
class RunConfig:
    """Everything a command needs to run."""

    command: str
    """One of :data:`COMMANDS`."""

    output: Any = None
    """Writable file object; standard output if None."""

    format: str = 'json'
    """Key of :data:`FORMATS`."""

    inputs: Mapping[str, str] = field(default_factory=dict)
    """Input file paths by option name; ``-`` means standard input."""

    options: Mapping[str, Any] = field(default_factory=dict)
    """Remaining command-specific options."""

    tolerances: Optional[_config.Tolerances] = None
    """Tolerances in effect during the run; the defaults if None."""

    argv: Tuple[str, ...] = ()
    """Command line recorded in table metadata."""

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f'unknown command {self.command!r}',
                             choices=', '.join(COMMANDS))
        if self.format not in FORMATS:
            raise InputError(f'unknown output format {self.format!r}')
        steps = self.options.get('steps')
        if steps is not None and steps < 1:
            raise InputError('number of steps must be positive', steps=steps)
        order = self.options.get('order')
        if order is not None and order not in (2, 4):
            raise InputError('order must be 2 or 4', order=order)
        for name, path in self.inputs.items():
            if path != '-' and not os.path.isfile(path):
                raise InputError(f'no such file for --{name}: {path!r}')

    @classmethod
    def from_args(cls, command, args, inputs=()):
        """Build a configuration from parsed command-line arguments.

        Parameters
        ----------
        command : str
            Sub-command name.
        args : argparse.Namespace
            Parsed arguments.
        inputs : sequence
            Names of the arguments that are input files. Those that are
            unset, or set to ``auto`` or ``identity``, are left out.
        """
        values = dict(vars(args))
        output = values.pop('output', None)
        fmt = values.pop('format', 'json')
        tol = values.pop('tol', None)
        values.pop('loglevel', None)
        paths = {}
        for name in inputs:
            path = values.pop(name, None)
            if path is not None and path not in _SPECIAL_INPUTS:
                paths[name] = path
            elif path is not None:
                values[name] = path
        tolerances = _config.current()
        if tol is not None:
            tolerances = tolerances.with_tol(tol)
        return cls(command, output, fmt, paths, values, tolerances,
                   tuple(sys.argv))

    def _open(self, name):
        path = self.inputs[name]
        return sys.stdin if path == '-' else path

    def matrix(self, name):
        """Read the matrix given for input `name`."""
        return io.load_matrix(self._open(name))

    def vector(self, name):
        """Read the vector given for input `name`."""
        return io.load_vector(self._open(name))


def _write(artifact, config, stopwatch):
    output = sys.stdout if config.output is None else config.output
    if isinstance(artifact, Table):
        record_run(artifact.meta, stopwatch, config.argv)
        artifact.write(output, format=FORMATS[config.format] or 'ascii.csv')
    else:
        io.dump_json(artifact, output)
    output.flush()


def _report(error):
    print(json.dumps(error), file=sys.stderr)


def run(config):
    """Run a command.

    The command is looked up in :mod:`nhqm.scripts` and its ``execute``
    function called with `config`; it returns a table or a JSON document,
    which is written to the output.

    Returns
    -------
    int
        Exit code.
    """
    # Late imports
    from ligo.skymap.util import Stopwatch

    execute = import_module(f'{__package__}.scripts.{config.command}').execute
    stopwatch = Stopwatch()
    stopwatch.start()
    try:
        tolerances = config.tolerances or _config.current()
        with _config.override(tolerances):
            artifact = execute(config)
    except NHQMError as e:
        stopwatch.stop()
        log.debug('%s failed', config.command, exc_info=True)
        if e.artifact is not None:
            _write(e.artifact, config, stopwatch)
        _report(e.to_dict())
        return e.exit_code
    except OSError as e:
        stopwatch.stop()
        _report({'code': 'IOError', 'message': str(e), 'diagnostics': {}})
        return 1
    stopwatch.stop()
    log.info('%s finished in %.3f s', config.command, stopwatch.real)
    try:
        _write(artifact, config, stopwatch)
    except OSError as e:
        _report({'code': 'IOError', 'message': str(e), 'diagnostics': {}})
        return 1
    return 0


def dispatch(command, args, inputs=()):
    """Configure and run a command from parsed arguments.

    Returns
    -------
    int
        Exit code; 1 if the arguments do not make a valid configuration.
    """
    try:
        config = RunConfig.from_args(command, args, inputs)
    except NHQMError as e:
        _report(e.to_dict())
        return e.exit_code
    return run(config)
