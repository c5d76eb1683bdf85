#
# Copyright © 2026 The nhqm developers.
#
# SPDX-License-Identifier: BSD-3-Clause
#
import json

from astropy.table import Table
import numpy as np
import pytest

from .. import io
from ..geophase import phase_deviation
from ..paraops import deformed_pauli, example_metric, metric_dependent_operator
from ..regression import qubit_phases
from ..scripts import verify
from ..scripts.main import main


def write_matrix(path, A):
    with open(path, 'w') as f:
        io.dump_matrix(A, f)
    return str(path)


def write_vector(path, psi):
    with open(path, 'w') as f:
        io.dump_vector(psi, f)
    return str(path)


def run(capsys, *args):
    """Run a command; return its exit code, output, and error document."""
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, json.loads(err) if err.strip() else None


@pytest.fixture
def born_files(tmp_path):
    return (write_matrix(tmp_path / 'a.json', [[0, 1], [4, 0]]),
            write_matrix(tmp_path / 'g.json', np.diag([1, 0.25])),
            write_vector(tmp_path / 'psi.json', np.asarray([1, -1j])
                         / np.sqrt(2)))


def test_make(capsys):
    code, out, _ = run(capsys, 'make', 'pauli', '--omega', '0.3',
                       '--axis', 'x')
    assert code == 0
    np.testing.assert_allclose(io.from_document(json.loads(out)),
                               deformed_pauli(0.3)[0])


def test_make_then_classify(capsys, tmp_path):
    path = str(tmp_path / 'sx.json')
    code, out, _ = run(capsys, 'make', 'pauli', '--omega', '0.3',
                       '--axis', 'x', '-o', path)
    assert code == 0
    assert out == ''
    code, out, _ = run(capsys, 'classify', '-i', path)
    assert code == 0
    assert json.loads(out)['kind'] == 'ParaHermitianNonHermitian'


def test_make_domain_error(capsys):
    code, out, error = run(capsys, 'make', 'pauli', '--omega', '2')
    assert code == 2
    assert out == ''
    assert error['code'] == 'DomainError'


def test_classify_non_diagonalizable(capsys, tmp_path):
    """Test that the classification is written before the failure."""
    path = write_matrix(tmp_path / 'jordan.json', np.eye(2, k=1))
    code, out, error = run(capsys, 'classify', '--input', path)
    assert code == 2
    assert json.loads(out)['kind'] == 'NonDiagonalizable'
    assert error['code'] == 'NonDiagonalizable'
    assert set(error) == {'code', 'message', 'diagnostics'}


def test_classify_evolution(capsys, tmp_path):
    path = write_matrix(tmp_path / 'u.json', np.diag([1j, -1j]))
    code, out, _ = run(capsys, 'classify', '-i', path, '--evolution')
    assert code == 0
    assert json.loads(out)['kind'] == 'Unitary'


def test_missing_file(capsys, tmp_path):
    code, out, error = run(capsys, 'classify', '-i',
                           str(tmp_path / 'missing.json'))
    assert code == 1
    assert out == ''
    assert error['code'] == 'InputError'


def test_malformed_file(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{"dim": 2, "data": [[1, 0]]}')
    code, _, error = run(capsys, 'classify', '-i', str(path))
    assert code == 1
    assert error['code'] == 'MatrixFormatError'


def test_expect(capsys, born_files):
    """Test the Born rule with an explicit metric."""
    A, G, psi = born_files
    code, out, _ = run(capsys, 'expect', '--obs', A, '--metric', G,
                       '--state', psi)
    assert code == 0
    doc = json.loads(out)
    np.testing.assert_allclose(doc['expectation'], [0, 0], atol=1e-12)
    np.testing.assert_allclose(doc['naive'], [0, 1.5], atol=1e-12)


def test_expect_auto(capsys, born_files):
    A, _, psi = born_files
    code, out, _ = run(capsys, 'expect', '--obs', A, '--state', psi)
    assert code == 0
    doc = json.loads(out)
    assert sum(doc['probabilities']) == pytest.approx(1)
    np.testing.assert_allclose(doc['eigenvalues'], [-2, 2])


def test_expect_identity_csv(capsys, born_files):
    A, _, psi = born_files
    code, out, _ = run(capsys, 'expect', '--obs', A, '--metric', 'identity',
                       '--state', psi, '--format', 'csv')
    assert code == 0
    table = Table.read(out, format='ascii.csv')
    assert table['quantity'].tolist() == ['expectation', 'naive']
    np.testing.assert_allclose(table['im'], [1.5, 1.5], atol=1e-12)


def test_metric_dependence(capsys, tmp_path):
    """Test that two metrics give different expectations."""
    A = write_matrix(tmp_path / 'a.json', metric_dependent_operator(0.25))
    psi = write_vector(tmp_path / 'psi.json', [1, 0])
    values = []
    for r_minus in (1, 2):
        G = write_matrix(tmp_path / f'g{r_minus}.json',
                         example_metric(0.25, 1, r_minus))
        code, out, _ = run(capsys, 'expect', '--obs', A, '--metric', G,
                           '--state', psi)
        assert code == 0
        values.append(json.loads(out)['expectation'][0])
    assert values[0] == pytest.approx(0.5, abs=1e-10)
    assert abs(values[0] - values[1]) > 1e-3


def test_zero_state(capsys, born_files, tmp_path):
    A, G, _ = born_files
    psi = write_vector(tmp_path / 'zero.json', [0, 0])
    code, _, error = run(capsys, 'expect', '--obs', A, '--metric', G,
                         '--state', psi)
    assert code == 2
    assert error['code'] == 'ZeroState'


def test_evolve(capsys, tmp_path):
    code, out, _ = run(capsys, 'evolve', '--builder',
                       'minus-sigma-z:omega=0.3', '--t', '3.141592653589793',
                       '--steps', '1000', '--format', 'ecsv')
    assert code == 0
    table = Table.read(out, format='ascii.ecsv')
    assert table.colnames == ['t', 're_0', 'im_0', 're_1', 'im_1', 'norm']
    assert len(table) == 1001
    assert table.meta['order'] == 2
    assert table.meta['invertibility_defect'] < 1e-10
    np.testing.assert_allclose(
        [table['re_0'][-1], table['im_0'][-1]], [-1, 0], atol=1e-10)


def test_evolve_state_file(capsys, tmp_path):
    H = write_matrix(tmp_path / 'h.json', deformed_pauli(0.3)[0])
    psi = write_vector(tmp_path / 'psi.json', [0, 2])
    code, out, _ = run(capsys, 'evolve', '--ham', H, '--state', psi,
                       '--t', '1', '--steps', '10', '--order', '4')
    assert code == 0
    table = Table.read(out, format='ascii.csv')
    assert table['norm'][0] == pytest.approx(2)


def test_evolve_bad_steps(capsys):
    code, _, error = run(capsys, 'evolve', '--builder', 'pauli-z',
                         '--t', '1', '--steps', '0')
    assert code == 1
    assert error['code'] == 'InputError'


def test_brachistochrone(capsys):
    code, out, _ = run(capsys, 'brachistochrone', '--r', '0.5',
                       '--theta', '0.3', '--gamma', '1.2')
    assert code == 0
    table = Table.read(out, format='ascii.csv')
    assert len(table) == 1
    assert table['t_simulated'][0] == pytest.approx(
        table['t_analytic'][0], abs=1e-6)


def test_brachistochrone_gap_sweep(capsys):
    """Test that the transfer time falls below the Hermitian bound at fixed
    gap."""
    code, out, _ = run(capsys, 'brachistochrone', '--gap', '2',
                       '--sweep', 'phi=-1.2:0:0.4', '--no-simulate')
    assert code == 0
    table = Table.read(out, format='ascii.csv')
    np.testing.assert_allclose(table['phi'], [-1.2, -0.8, -0.4, 0],
                               atol=1e-12)
    np.testing.assert_allclose(table['omega'], 2)
    t = np.asarray(table['t_analytic'])
    assert np.all(np.diff(t) > 0)
    assert t[-1] == pytest.approx(np.pi / 2)


def test_brachistochrone_broken_rows(capsys):
    code, out, _ = run(capsys, 'brachistochrone', '--r', '1',
                       '--theta', '1.5707963267948966',
                       '--sweep', 'gamma=0.5:1.5:0.5', '--no-simulate')
    assert code == 0
    table = Table.read(out, format='ascii.csv')
    t = np.asarray(table['t_analytic'], dtype=float)
    assert np.isnan(t[0]) and np.isnan(t[1])
    assert np.isfinite(t[2])


@pytest.mark.parametrize('sweep', ['omega=0:1:0.5', 'phi=0:1:0.5',
                                   'r=0:1'])
def test_brachistochrone_bad_sweep(capsys, sweep):
    code, _, error = run(capsys, 'brachistochrone', '--sweep', sweep)
    assert code == 1
    assert error['code'] == 'GridParseError'


def test_phase(capsys):
    """Test the observable-geometric phases of the driven qubit."""
    code, out, _ = run(capsys, 'phase', '--builder',
                       'minus-sigma-z:omega=0.3', '--bloch-phi', '0.4',
                       '--horizon', '4', '--steps', '4000', '--trials', '0')
    assert code == 0
    doc = json.loads(out)
    assert doc['tau'] == pytest.approx(np.pi, abs=1e-8)
    beta = [re + 1j * im for re, im in doc['beta']]
    assert phase_deviation(beta, qubit_phases(0.3, 0.4)) < 1e-6
    assert doc['holonomy']['deviation'] < 1e-8
    assert 'invariance' not in doc


def test_phase_sweep(capsys):
    code, out, _ = run(capsys, 'phase', '--builder', 'minus-sigma-z',
                       '--bloch-phi', '0.4', '--horizon', '4',
                       '--steps', '4000', '--sweep', 'omega=0.2:0.4:0.2',
                       '--format', 'csv')
    assert code == 0
    table = Table.read(out, format='ascii.csv')
    np.testing.assert_allclose(table['omega'], [0.2, 0.4])
    np.testing.assert_allclose(table['tau'], np.pi, atol=1e-8)
    for row in table:
        beta = [row['beta_0_re'] + 1j * row['beta_0_im'],
                row['beta_1_re'] + 1j * row['beta_1_im']]
        assert phase_deviation(beta, qubit_phases(row['omega'], 0.4)) < 1e-6


def test_phase_no_cycle(capsys):
    code, _, error = run(capsys, 'phase', '--builder',
                         'minus-sigma-z:omega=0.3', '--bloch-phi', '0.4',
                         '--horizon', '1', '--trials', '0')
    assert code == 2
    assert error['code'] == 'NoCycleFound'


def test_verify(capsys):
    code, out, _ = run(capsys, 'verify', '--check', 'born-rule',
                       '--check', 'metric-dependence')
    assert code == 0
    assert 'born-rule' in out
    assert 'metric-dependence' in out


def test_verify_unknown_check(capsys):
    code, _, error = run(capsys, 'verify', '--check', 'nonsense')
    assert code == 1
    assert error['code'] == 'InputError'


def test_bad_tolerance(capsys, born_files):
    A, _, _ = born_files
    code, _, error = run(capsys, 'classify', '-i', A, '--tol', '0')
    assert code == 1
    assert error['code'] == 'InputError'


def test_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main(['nonsense'])
    assert excinfo.value.code == 2


def test_verify_suites(capsys):
    code, out, _ = run(capsys, 'verify', '--suite', 'paper',
                       '--check', 'born-rule')
    assert code == 0
    assert 'born-rule' in out
    code, out, _ = run(capsys, 'verify', '--suite', 'quick',
                       '--check', 'born-rule')
    assert code == 0


def test_verify_default_suite():
    args = verify.parser().parse_args([])
    assert args.suite == 'paper'


def test_malformed_environment(capsys, monkeypatch):
    monkeypatch.setenv('NHQM_DEFAULT_TOL', 'small')
    code, _, error = run(capsys, 'verify', '--check', 'born-rule')
    assert code == 1
    assert error['code'] == 'InputError'
    assert 'NHQM_DEFAULT_TOL' in error['message']
