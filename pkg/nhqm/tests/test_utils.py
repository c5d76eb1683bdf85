#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
from types import SimpleNamespace

from .. import utils


def test_record_run():
    """Test that the command line is stored shell-quoted."""
    meta = {}
    stopwatch = SimpleNamespace(real=2.0, user=1.5, sys=0.25)
    utils.record_run(meta, stopwatch,
                     ['nhqm', 'phase', '--sweep', 'theta=0.5,-1'])
    assert meta == {'cmdline': "nhqm phase --sweep theta=0.5,-1",
                    'real': 2.0, 'user': 1.5, 'sys': 0.25}
    utils.record_run(meta, stopwatch, ['nhqm', 'a b'])
    assert meta['cmdline'] == "nhqm 'a b'"
    assert not hasattr(utils, 'shlex_join')
