import csv
import io
import json

import pytest

from main.app import EXIT_CONFIG, EXIT_OK, main
from src import settings


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_dougall(capsys):
    code, out, _ = _run(capsys, 'eval', 'dougall', '--upper=0.1;0,0.2', '--lower=1.3;1.4,-0.2')
    records = json.loads(out)
    assert code == EXIT_OK
    assert len(records) == 1
    assert records[0]['status'] == 'converged'
    assert records[0]['abs_error'] < 1e-10


def test_eval_empty_grid(capsys):
    code, out, _ = _run(capsys, 'eval', 'phi', '--x-grid=0,0,0')
    assert code == EXIT_OK
    assert json.loads(out) == []


def test_integer_label_difference_is_rejected(capsys):
    code, out, err = _run(capsys, 'eval', 'r', '--sigma-im', '0.5', '--t=0.1,0', '--s=1.1,0')
    assert code == EXIT_CONFIG
    assert out == ''
    assert 's − t ∉ ℤ' in err


def test_table_phi(capsys):
    code, out, _ = _run(capsys, 'table', 'phi', '--x-grid=-5,5,101', '--format', 'csv')
    rows = list(csv.reader(io.StringIO(out)))
    assert code == EXIT_OK
    assert len(rows) == 102
    assert rows[0][:3] == ['x', 'value_re', 'value_im']


def test_table_r(capsys):
    code, out, _ = _run(capsys, 'table', 'r', '--nu-grid=0.1,10,100', '--format', 'csv')
    rows = list(csv.reader(io.StringIO(out)))
    assert code == EXIT_OK
    assert len(rows) == 101
    assert rows[0] == ['nu', 'm11_re', 'm11_im', 'm12_re', 'm12_im', 'm21_re', 'm21_im', 'm22_re', 'm22_im']
    assert float(rows[1][0]) == pytest.approx(0.1)


def test_verify_gram(capsys):
    code, out, _ = _run(capsys, 'verify', 'gram')
    records = json.loads(out)
    assert code == EXIT_OK
    assert {r['suite'] for r in records} == {'gram'}
    assert all(r['passed'] for r in records)


def test_verify_is_deterministic(capsys):
    first = _run(capsys, 'verify', 'gamma', '--seed', '7', '--format', 'csv')
    second = _run(capsys, 'verify', 'gamma', '--seed', '7', '--format', 'csv')
    assert first[0] == EXIT_OK
    assert first[1] == second[1]


def test_unknown_suite(capsys):
    code, _, err = _run(capsys, 'verify', 'nonsense')
    assert code == EXIT_CONFIG
    assert 'Unsupported suite type' in err


@pytest.mark.parametrize("override", ['quad_abs_tol=-1', 'no_such_setting=1e-8'])
def test_bad_tolerance(capsys, override):
    code, _, _ = _run(capsys, 'eval', 'delta', '--tol', override)
    assert code == EXIT_CONFIG


def test_missing_quantity(capsys):
    code, _, _ = _run(capsys, 'eval')
    assert code == EXIT_CONFIG


def test_flags_override_config_file(capsys, tmp_path):
    config = tmp_path / 'run.json'
    config.write_text(json.dumps({"params": {"alpha": 0.9, "beta": 0.7}, "sigma_im": 0.4}))
    _, from_file, _ = _run(capsys, 'eval', 'delta', '--config', str(config), '--alpha', '0.3')
    _, from_flags, _ = _run(capsys, 'eval', 'delta', '--alpha', '0.3', '--beta', '0.7', '--sigma-im', '0.4')
    assert from_file == from_flags


def test_key_value_config_file(capsys, tmp_path):
    config = tmp_path / 'run.cfg'
    config.write_text("# delta at sigma = 0.4i\nalpha = 0.3\nbeta = 0.7\nsigma-im = 0.4\n")
    _, from_file, _ = _run(capsys, 'eval', 'delta', '--config', str(config))
    _, from_flags, _ = _run(capsys, 'eval', 'delta', '--alpha', '0.3', '--beta', '0.7', '--sigma-im', '0.4')
    assert from_file == from_flags


def test_output_file(capsys, tmp_path):
    target = tmp_path / 'delta.csv'
    code, out, _ = _run(capsys, 'eval', 'delta', '--format', 'csv', '--out', str(target))
    assert code == EXIT_OK
    assert out == ''
    assert target.read_text().startswith('sigma_re,sigma_im,m11_re')


@pytest.mark.parametrize("text", [
    '{"params": 5}',
    '{"params": [1, 2]}',
    '{"params": {"alpha": "x", "beta": 0.7}}',
    '{"params": {"alpha": -1, "beta": 0.7}}',
    '{"sigma_im": {}}',
    '{"sigma_im": [0.4]}',
    '{"upper": 5}',
    '{"x_grid": "1,2"}',
    '{"x_grid": "a,b,c"}',
    '{"tolerances": "abc"}',
    '{"tolerances": "quad_abs_tol=zero"}',
    '{"nu_max": -1}',
    '{"seed": "seven"}',
    '{"alpha": 0.3,',
    '[1, 2]',
    'alpha 0.3',
])
def test_malformed_config_file(capsys, tmp_path, text):
    config = tmp_path / 'run.cfg'
    config.write_text(text)
    code, out, err = _run(capsys, 'eval', 'delta', '--config', str(config))
    assert code in (2, 3)
    assert out == ''
    assert 'Traceback' not in err


@pytest.mark.parametrize("argv", [
    ['transform', '--function', 'hat', '--nu-max', '0.0005'],
    ['transform', '--function', 'hat', '--nu-max', '-1'],
    ['eval', 'phi', '--x-grid=1,2'],
    ['eval', 'phi', '--x-grid=0,1,2,3'],
    ['eval', 'phi', '--x-grid=a,b,c'],
    ['table', 'r', '--nu-grid=0.1,10'],
    ['eval', 'delta', '--tol', 'quad_abs_tol'],
    ['eval', 'delta', '--sigma', '1,2,3'],
])
def test_bad_flags_exit_cleanly(capsys, argv):
    code, out, _ = _run(capsys, *argv)
    assert code in (2, 3)
    assert out == ''


def test_spectral_cutoff_below_minimum(capsys):
    code, _, err = _run(capsys, 'transform', '--function', 'hat', '--nu-max', '0.0005')
    assert code == EXIT_CONFIG
    assert 'nu_min < nu_max' in err


def test_tolerance_override_is_scoped(capsys):
    argv = ['eval', 'dougall', '--upper=0.1;0,0.2', '--lower=1.3;1.4,-0.2']
    before = settings.SERIES_TOL
    _, baseline, _ = _run(capsys, *argv)
    code, _, _ = _run(capsys, *argv, '--tol', 'series_tol=0.5')
    assert code == EXIT_OK
    assert settings.SERIES_TOL == before
    _, again, _ = _run(capsys, *argv)
    assert again == baseline
