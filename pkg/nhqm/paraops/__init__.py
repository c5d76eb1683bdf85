#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
"""Para-Hermitian and para-unitary operators and their metrics.

An operator is *para-Hermitian* if it is diagonalizable with a real
spectrum, and *para-unitary* if it is diagonalizable with its spectrum on
the unit circle. A para-Hermitian :math:`T` is Hermitian with respect to the
inner product :math:`\\langle u, Gv\\rangle` of a *metric operator* :math:`G`:
the similarity transform :math:`G^{1/2} T G^{-1/2}` is Hermitian. The metric
is not unique; :func:`metric_from_eigensystem` builds the canonical one from
the dual eigenvectors and, given explicit scalars, any other member of the
family.

Classification and metrics
~~~~~~~~~~~~~~~~~~~~~~~~~~
.. autosummary::
    classify
    Classification
    Kind
    MetricOp
    metric_from_eigensystem
    hermitianize
    is_metric_for
    is_pseudo_hermitian
    func_calc

Example operators
~~~~~~~~~~~~~~~~~
.. autosummary::
    pauli
    deformed_pauli
    deformed_pauli_metric
    two_level_hamiltonian
    two_level_spectrum
    bloch_state
    bloch_observable
    metric_dependent_operator
    example_metric
    build

Example
-------
>>> from nhqm import paraops
>>> A = [[0, 1], [4, 0]]
>>> result = paraops.classify(A)
>>> result.kind.value
'ParaHermitianNonHermitian'
>>> paraops.is_metric_for(result.witness_metric, A)
True

"""
from ._builders import (BUILDERS, TwoLevel, bloch_observable, bloch_state,
                        build, deformed_pauli, deformed_pauli_metric,
                        example_metric, jordan_block,
                        metric_dependent_operator, pauli,
                        two_level_hamiltonian, two_level_spectrum)
from ._classify import Classification, Kind, classify, para_hermitian_system
from ._metric import (MetricOp, func_calc, hermitianize, is_metric_for,
                      is_pseudo_hermitian, metric_from_eigensystem)

__all__ = ('BUILDERS', 'Classification', 'Kind', 'MetricOp', 'TwoLevel',
           'bloch_observable', 'bloch_state', 'build', 'classify',
           'deformed_pauli', 'deformed_pauli_metric', 'example_metric',
           'func_calc', 'hermitianize', 'is_metric_for', 'is_pseudo_hermitian',
           'jordan_block', 'metric_dependent_operator',
           'metric_from_eigensystem', 'para_hermitian_system', 'pauli',
           'two_level_hamiltonian', 'two_level_spectrum')
