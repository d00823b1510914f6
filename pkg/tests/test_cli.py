import json
from pathlib import Path

import pytest
from conftest import DATA

from holopade.cli import _attach_values, main
from holopade.errors import ConfigError
from holopade.utils.config import load_config
from holopade.utils.serialization import load

CONFIGS = Path(__file__).parent.parent / 'configs'


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


def test_attach_values():
    assert _attach_values(['--b', '-2z', '--n', '1']) == ['--b=-2z', '--n', '1']
    assert _attach_values(['--alpha', '3']) == ['--alpha', '3']


#region commands
def test_table_markdown(capsys):
    assert main(['table', '--format', 'markdown']) == 0
    assert capsys.readouterr().out == (DATA / 'threshold_table.md').read_text()


def test_table_json(capsys):
    code, report = run_json(capsys, ['table', '--u', '2..3'])
    assert code == 0
    assert report['schema_version'] == 1
    assert report['command'] == 'table'
    rows = report['result']['rows']
    assert [(r['u'], r['threshold']) for r in rows] == [(2, '3.78'), (3, '4.44')]
    assert report['config']['us'] == '2..3'


def test_construct(capsys):
    code, report = run_json(capsys, ['construct', '--family', 'chebyshev', '--u', '2', '--n', '2'])
    assert code == 0
    system = report['result']['system']
    assert system['P'] == ['-3/2', '0', '3']
    assert system['degree_P'] == 2
    assert system['verification']['verified'] is True


def test_verify(capsys):
    code, report = run_json(capsys, ['verify', '--family', 'chebyshev', '--u', '2', '--n', '1..2'])
    assert code == 0
    result = report['result']
    assert result['all_verified'] is True
    assert [(c['n'], c['h']) for c in result['checks']] == [(1, 0), (1, 1), (2, 0), (2, 1)]
    assert all(c['kernel_dimension'] >= 1 for c in result['checks'])


def test_det(capsys):
    argv = ['det', '--family', 'hermite', '--gamma', '1', '--delta', '0', '--delta', '1']
    code, report = run_json(capsys, argv + ['--n', '1', '--dump-matrix'])
    assert code == 0
    r = report['result']['reports'][0]
    assert r['delta'] == '1'
    assert r['match'] is True
    assert len(r['matrix']) == 3


def test_criterion(capsys):
    code, report = run_json(capsys, ['criterion', '--u', '2', '--alpha', '64'])
    assert code == 0
    result = report['result']
    assert result['applicable'] is True
    assert result['place'] == 'inf'
    assert float(result['V']) == pytest.approx(0.386294, abs=1e-6)


def test_gop_negative_roots(capsys):
    code, report = run_json(capsys, ['gop', '--alpha', '1', '--alpha', '-1', '--beta', '0'])
    assert code == 0
    assert report['result']['g_operator'] is True
    assert report['result']['residues'] == ['1/2', '1/2']


def test_growth(capsys):
    code, report = run_json(capsys, ['growth', '--u', '2', '--n-max', '20'])
    assert code == 0
    assert report['result']['u'] == 2
    assert len(report['result']['ratios']) == 20


def test_out_file(tmp_path, capsys):
    path = tmp_path / 'reports' / 'criterion.json'
    assert main(['criterion', '--u', '2', '--alpha', '64', '--out', str(path)]) == 0
    assert capsys.readouterr().out == ''
    assert load(path)['command'] == 'criterion'
#endregion


#region exit codes
@pytest.mark.parametrize('argv,code', [
    (['construct', '--family', 'custom', '--a', 'z^2', '--b', '-2z'], 2),
    (['construct', '--family', 'hermite', '--gamma', '1', '--delta', '0', '--delta', '0'], 3),
    (['criterion', '--u', '2', '--alpha', '2'], 3),
    (['construct', '--bogus'], 5),
    (['construct', '--u', '2'], 5),
    (['construct', '--family', 'chebyshev', '--u', '2', '--n', '1..3'], 5),
    (['construct', '--family', 'chebyshev', '--u', '2', '--format', 'markdown'], 5),
    (['criterion', '--u', '2', '--alpha', '64', '--place', '4'], 5),
    (['table', '--precision', '8'], 5),
    (['decay', '--u', '2', '--alpha', '10', '--place', '(2, 1+i)'], 3),
    (['det', '--family', 'hermite', '--gamma', 'x', '--delta', '0'], 5),
], ids=['degenerate', 'hypothesis', 'small-alpha', 'bad-flag', 'no-family', 'range-n', 'markdown',
        'bad-place', 'low-precision', 'number-field', 'bad-rational'])
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code
    assert capsys.readouterr().out == ''
#endregion


#region configuration
def test_defaults():
    cfg = load_config({'command': 'table'})
    assert cfg.precision == 64
    assert cfg.format == 'json'
    assert cfg.us == '2..15'
    assert cfg.digits == 16


def test_toml_layers(tmp_path):
    path = tmp_path / 'run.toml'
    path.write_text('command = "det"\nfamily = "hermite"\ngamma = ["1"]\nn = "1..2"\n')
    cfg = load_config({'command': 'det', 'n': '3'}, path)
    assert cfg.family == 'hermite'
    assert cfg.gamma == ('1', )
    # flags win over the run file
    assert cfg.n == '3'


def test_config_errors(tmp_path):
    bad = tmp_path / 'bad.toml'
    bad.write_text('command = "table"\ncolour = "blue"\n')
    with pytest.raises(ConfigError):
        load_config(None, bad)
    with pytest.raises(ConfigError):
        load_config(None, tmp_path / 'missing.toml')
    with pytest.raises(ConfigError):
        load_config({'command': 'table', 'workers': 0})
    with pytest.raises(ConfigError):
        load_config({'command': 'table', 'log_level': 'LOUD'})


def test_shipped_run_file(capsys):
    code, report = run_json(capsys, ['criterion', '--config', str(CONFIGS / 'criterion_u2.toml')])
    assert code == 0
    assert report['config']['precision'] == 96
    assert report['result']['precision_bits'] == 96
#endregion
