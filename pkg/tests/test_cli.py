##
## command-line runs, exit codes and report determinism
##

import json

import pytest

import main


def run(capsys, *argv):
    code = main.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bicharacters(capsys):
    code, out, _ = run(capsys, 'bicharacters')
    assert code == 0
    assert out.startswith('# command: bicharacters\n# version: ')
    assert '# seeds: [11, 23, 37]' in out

def test_axioms(capsys):
    assert run(capsys, 'axioms', '--algebra', 'L', '--cocycle', 'canonical')[0] == 0
    code, out, _ = run(capsys, 'axioms', '--algebra', 'L', '--cocycle', 'literal', '--format', 'json')
    assert code == 1
    rep = json.loads(out)
    assert rep['result']['violations'] > 0
    assert 'note' in rep['result']
    assert run(capsys, 'axioms', '--algebra', 'sl2')[0] == 0

def test_iso_check(capsys):
    assert run(capsys, 'iso-check', '--cocycle', 'canonical')[0] == 0
    assert run(capsys, 'iso-check', '--cocycle', 'trivial')[0] == 1

def test_killing_and_simplicity(capsys):
    assert run(capsys, 'killing', '--algebra', 'sl2')[0] == 0
    assert run(capsys, 'killing', '--algebra', 'abelian2')[0] == 1
    assert run(capsys, 'simple-check', '--algebra', 'sl2')[0] == 0
    assert run(capsys, 'simple-check', '--algebra', 'sl2+sl2')[0] == 1

def test_codim_json(capsys):
    code, out, _ = run(capsys, 'codim', '--algebra', 'sl2', '--kind', 'lie', '--n', '3', '--format', 'json')
    assert code == 0
    rep = json.loads(out)
    assert rep['result']['value'] == 2
    assert rep['result']['status'] == 'exact'
    assert rep['version'] == main.VERSION
    assert rep['config']['n'] == 3

def test_graded_codim(capsys):
    code, out, _ = run(capsys, 'graded-codim', '--algebra', 'L', '--n', '2', '--format', 'json')
    assert code == 0
    rep = json.loads(out)['result']
    assert rep['value'] == 16
    assert rep['expected'] == 16
    assert rep['identity_holds']
    assert len(rep['components']) == 10
    code, out, _ = run(capsys, 'graded-codim', '--algebra', 'L', '--key', '0,1,1,0', '--format', 'json')
    assert json.loads(out)['result']['value'] == 1

def test_randomized_runs_are_reproducible(capsys):
    argv = ['codim', '--algebra', 'sl2', '--kind', 'lie', '--n', '3', '--mode', 'randomized',
            '--seed', '5', '--prime', '1000003', '--format', 'json']
    code, first, _ = run(capsys, *argv)
    assert code == 0
    _, second, _ = run(capsys, *argv)
    assert first == second
    rep = json.loads(first)
    assert rep['seeds'] == [5, 6, 7]
    assert rep['primes'] == [1000003]
    assert rep['result']['status'] == 'lower-bound-whp'

def test_trend_and_tableaux(capsys):
    assert run(capsys, 'trend', '--algebra', 'sl2', '--kind', 'lie', '--n-max', '3')[0] == 0
    code, out, _ = run(capsys, 'tableaux', '--shape', '3,3,3', '--format', 'json')
    assert code == 0
    rep = json.loads(out)['result']
    assert rep['hook_dim'] == rep['standard_count'] == 42

def test_witness_file_round_trip(capsys, tmp_path):
    path = str(tmp_path / 'witness.json')
    assert run(capsys, 'search-witness', '--algebra', 'sl2', '--format', 'json', '--out', path)[0] == 0
    assert run(capsys, 'lemmas', '--algebra', 'sl2', '--which', 'bracket', '--witness', path)[0] == 0

def test_config_file(capsys, tmp_path):
    cfg = tmp_path / 'run.json'
    cfg.write_text(json.dumps({'algebra': 'sl2', 'kind': 'lie', 'n': 2, 'format': 'json'}))
    code, out, err = run(capsys, 'codim', '--config', str(cfg), '--verbose')
    assert code == 0
    assert json.loads(out)['result']['value'] == 1
    assert 'ColorCodim' in err
    assert "'mode' not in the config file" in err
    # flags win over the file
    code, out, _ = run(capsys, 'codim', '--config', str(cfg), '--n', '3')
    assert json.loads(out)['result']['value'] == 2

@pytest.mark.parametrize('argv', [
    ['codim', '--algebra', 'so5'],
    ['codim', '--algebra', 'sl3', '--kind', 'lie', '--n', '7'],
    ['codim', '--config', '/nonexistent/run.json'],
    ['codim', '--algebra', 'L', '--kind', 'lie', '--n', '2'],
    ['codim', '--mode', 'fast'],
    ['unknown-command'],
    ['graded-codim', '--key', '1,x'],
])
def test_input_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2

@pytest.mark.parametrize('name, spec', [
    ('struct_int_entry', {'name': 'x', 'dim': 1, 'degrees': [0], 'struct': [5]}),
    ('struct_not_list', {'name': 'x', 'dim': 1, 'degrees': [0], 'struct': 5}),
    ('degree_out_of_range', {'name': 'x', 'dim': 1, 'degrees': [7], 'struct': []}),
    ('negative_degree', {'name': 'x', 'dim': 1, 'degrees': [-1], 'struct': []}),
    ('float_index', {'name': 'x', 'dim': 1, 'degrees': [0], 'struct': [[0.5, 0, 0, '1']]}),
])
def test_malformed_algebra_file_exits_2(capsys, tmp_path, name, spec):
    path = tmp_path / (name + '.json')
    path.write_text(json.dumps(spec))
    code, _, err = run(capsys, 'axioms', '--algebra', str(path))
    assert code == 2
    assert err.startswith('error: ')

def test_hdf5_output(capsys, tmp_path):
    import h5py
    out = str(tmp_path / 'trend.hdf5')
    assert run(capsys, 'trend', '--algebra', 'sl2', '--kind', 'lie', '--n-max', '2',
               '--format', 'hdf5', '--out', out)[0] == 0
    with h5py.File(out, 'r') as f5:
        assert list(f5['trend']['c_n'][:]) == [1, 1]
        assert f5.attrs['version'] == main.VERSION
        assert list(f5.attrs['seeds']) == [11, 23, 37]
        assert list(f5.attrs['primes']) == [1000003, 1000033]
        assert f5.attrs['seed'] == 20100
    assert run(capsys, 'trend', '--algebra', 'sl2', '--n-max', '2', '--format', 'hdf5')[0] == 2
