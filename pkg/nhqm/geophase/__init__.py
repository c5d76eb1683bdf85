#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Observable-geometric phases of cyclic non-Hermitian evolutions.

Under a propagator :math:`U(t, s)`, an observable evolves in the Heisenberg
picture as :math:`X(t) = U(0, t)X_0U(t, 0)`. If it returns to :math:`X_0`
after a period :math:`\\tau`, each eigenstate :math:`\\psi_n` of
:math:`X_0` picks up a total phase, :math:`U(0, \\tau)\\psi_n =
e^{i\\theta_n}\\psi_n`. Removing the dynamical part leaves the
observable-geometric phase

.. math::

    \\beta_n = \\theta_n - \\int_0^\\tau
    \\langle\\psi^*_n|h(t)|\\psi_n\\rangle dt,

which is complex in general and defined modulo :math:`2\\pi`. The same
phases appear as the holonomy of the canonical connection on the bundle of
frames over the space of complete decompositions of the identity, and they
do not depend on how the path is parameterized, on the starting frame, or on
the measurement point.

Cyclic evolutions and phases
~~~~~~~~~~~~~~~~~~~~~~~~~~~~
.. autosummary::
    heisenberg_evolve
    detect_cycle
    cyclic_evolution
    CyclicEvolution
    geometric_phases
    geometric_phases_loop
    PhaseReport

Bundle geometry
~~~~~~~~~~~~~~~
.. autosummary::
    Decomposition
    GaugeElem
    hausdorff_distance
    canonical_connection
    transported_connection
    horizontal_lift
    HorizontalLift
    holonomy
    holonomy_diagonal

Invariance
~~~~~~~~~~
.. autosummary::
    invariance_suite
    InvarianceReport
    phase_deviation

Example
-------
>>> import numpy as np
>>> from nhqm import geophase
>>> from nhqm.evolve import propagator
>>> from nhqm.paraops import bloch_observable, deformed_pauli
>>> omega, phi = 0.3, 0.4
>>> h = -deformed_pauli(omega)[2]
>>> P = propagator(lambda t: h, 4.0, 4000)
>>> X0 = bloch_observable(phi)
>>> C = geophase.detect_cycle(geophase.heisenberg_evolve(X0, P), P)
>>> report = geophase.geometric_phases(C)
>>> expected = np.pi * (1 + np.cos(phi) / np.cos(omega)) \\
...     + 1j * np.pi * np.sin(omega) * np.sin(phi) / np.cos(omega)
>>> geophase.phase_deviation(report.beta[1:], [expected]) < 1e-8
True

"""
from ._connection import (HorizontalLift, canonical_connection, holonomy,
                          holonomy_diagonal, horizontal_lift,
                          transported_connection)
from ._decomposition import Decomposition, GaugeElem, hausdorff_distance
from ._invariance import InvarianceReport, invariance_suite, phase_deviation
from ._phases import (CyclicEvolution, PhaseReport, cyclic_evolution,
                      detect_cycle, geometric_phases, geometric_phases_loop,
                      heisenberg_evolve)

__all__ = ('CyclicEvolution', 'Decomposition', 'GaugeElem', 'HorizontalLift',
           'InvarianceReport', 'PhaseReport', 'canonical_connection',
           'cyclic_evolution', 'detect_cycle', 'geometric_phases',
           'geometric_phases_loop', 'hausdorff_distance', 'heisenberg_evolve',
           'holonomy', 'holonomy_diagonal', 'horizontal_lift',
           'invariance_suite', 'phase_deviation', 'transported_connection')
