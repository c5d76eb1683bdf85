#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Time evolution under para-Hermitian generators.

States evolve by the Schrödinger equation :math:`i\\psi'(t) = h(t)\\psi(t)`
with :math:`\\hbar = 1`, so that a constant generator :math:`H` gives
:math:`U(t) = e^{-itH}`. Statements about :math:`e^{+itH}` follow by
:math:`t \\to -t`. A para-Hermitian generator yields a bounded group of
para-unitary operators that are unitary in the inner product of any of its
metrics, although not in the standard one.

One-parameter groups
~~~~~~~~~~~~~~~~~~~~
.. autosummary::
    group
    stone_check
    StoneReport

Time-dependent generators
~~~~~~~~~~~~~~~~~~~~~~~~~
.. autosummary::
    propagator
    Propagator
    evolve_state

Brachistochrone
~~~~~~~~~~~~~~~
.. autosummary::
    brachistochrone
    BrachistochroneResult
    parameters_for_gap
    first_passage

Example
-------
>>> import numpy as np
>>> from nhqm import evolve
>>> result = evolve.brachistochrone(0.9, -np.pi / 2, 1)
>>> result.t_transfer < result.hermitian_bound
True

"""
from ._brachistochrone import (BrachistochroneResult, brachistochrone,
                               first_passage, parameters_for_gap)
from ._group import StoneReport, group, stone_check
from ._propagator import Propagator, evolve_state, propagator

__all__ = ('BrachistochroneResult', 'Propagator', 'StoneReport',
           'brachistochrone', 'evolve_state', 'first_passage', 'group',
           'parameters_for_gap', 'propagator', 'stone_check')
