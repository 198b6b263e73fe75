import json

import pytest

from gias3.chevalley.tools.chevalley_cli import (
    EXIT_FAILED, EXIT_HYPOTHESIS, EXIT_NOT_INTEGRAL, EXIT_OK, EXIT_PARSE, main,
)

SL2_WORD = [
    {'gen': 'chi', 'root': [1], 't': '1/2'},
    {'gen': 'h', 'i': 1, 't': '1/2'},
    {'gen': 'chi', 'root': [-1], 't': '1/2'},
]


@pytest.fixture
def word_file(tmp_path):
    def write(data, name='word.json'):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data))
        return str(path)
    return write


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_roots_json(capsys):
    assert main(['roots', '-t', 'A1', '--json']) == EXIT_OK
    data = _json(capsys)
    assert data['rank'] == 1
    assert len(data['positive_roots']) == 1
    assert data['fundamental_group'] == [2]

    assert main(['roots', '-t', 'D4', '--json']) == EXIT_OK
    assert _json(capsys)['fundamental_group'] == [2, 2]


def test_roots_document_layout(capsys):
    assert main(['roots', '-t', 'G2', '--json']) == EXIT_OK
    data = _json(capsys)
    assert {'type', 'cartan_matrix', 'positive_roots', 'root_lengths'} <= set(data)
    assert data['type'] == 'G2'
    assert data['positive_roots'] == [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]]
    assert data['root_lengths'] == [1, 3, 1, 1, 3, 3]
    assert data['heights'] == [1, 1, 2, 3, 4, 5]


def test_roots_with_constants(capsys):
    assert main(['roots', '-t', 'G2', '--constants', '--json']) == EXIT_OK
    data = _json(capsys)
    assert data['cartan_matrix'] == [[2, -3], [-1, 2]]
    table = data['structure_constants']['table']
    assert {'alpha': [1, 0], 'beta': [0, 1], 'n': 1} in table


def test_roots_text(capsys):
    assert main(['roots', '-t', 'B2']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'positive roots (4):' in out


@pytest.mark.parametrize('name', ['X9', 'B1', 'H3', 'A'])
def test_bad_types(name):
    assert main(['roots', '-t', name]) == EXIT_PARSE


def test_argparse_errors():
    with pytest.raises(SystemExit) as e:
        main(['roots'])
    assert e.value.code == 2
    with pytest.raises(SystemExit):
        main(['nonsense', '-t', 'A2'])


def test_module(capsys):
    assert main(['module', '-t', 'A2', '--json']) == EXIT_OK
    data = _json(capsys)
    assert data['dim'] == 14
    assert data['fundamental_weights_hypothesis'] == {'holds': True, 'missing': []}
    assert data['weight_lattice']['form'] == ['simply_connected']
    assert data['lattice'][0] == {'summand': 1, 'mu': [1, 1], 'basis': [['1']]}

    assert main(['module', '-t', 'A2', '-m', 'adjoint', '--json']) == EXIT_OK
    data = _json(capsys)
    assert data['dim'] == 8
    assert data['fundamental_weights_hypothesis']['missing'] == [1, 2]


@pytest.mark.parametrize('spec', ['1,-1', '1', '1,x', ';'])
def test_bad_module_specs(spec):
    assert main(['module', '-t', 'A2', '-m', spec]) == EXIT_PARSE


def test_large_types_need_a_flag():
    assert main(['module', '-t', 'E8']) == EXIT_PARSE


def test_decide(capsys, word_file):
    path = word_file(SL2_WORD)
    assert main(['decide', '-t', 'A1', '-m', '1', '-i', path, '--json']) == EXIT_OK
    data = _json(capsys)
    assert data['verdict'] == 'in_GZ'

    path = word_file([{'gen': 'chi', 'root': [1], 't': '1/2'}], 'rational.json')
    assert main(['decide', '-t', 'A1', '-i', path, '--json']) == EXIT_NOT_INTEGRAL
    data = _json(capsys)
    assert data['witness']['image'] == ['1/2', '1']


def test_decide_input_errors(word_file):
    assert main(['decide', '-t', 'A1']) == EXIT_PARSE
    assert main(['decide', '-t', 'A1', '-i', word_file('[{"gen": "chi"')]) == EXIT_PARSE
    assert main(['decide', '-t', 'A1', '-i', word_file([{'gen': 'chi', 'root': [2], 't': 1}])]) == EXIT_PARSE
    assert main(['decide', '-t', 'A1', '-i', word_file([{'gen': 'h', 'i': 2, 't': 1}])]) == EXIT_PARSE
    path = word_file([{'gen': 'h', 'coweight': ['1/2', '0'], 't': 2}])
    assert main(['decide', '-t', 'A2', '-m', 'fundamental', '-i', path]) == EXIT_PARSE


def test_decide_hypotheses(word_file):
    path = word_file([{'gen': 'chi', 'root': [1, 0], 't': '1/2'}])
    assert main(['decide', '-t', 'A2', '-m', 'adjoint', '-i', path]) == EXIT_HYPOTHESIS
    assert main(['decide', '-t', 'A2', '-m', 'adjoint', '-i', path, '--force']) == EXIT_NOT_INTEGRAL


def test_iwasawa(capsys, word_file):
    path = word_file(SL2_WORD)
    assert main(['iwasawa', '-t', 'A1', '-i', path, '--json']) == EXIT_OK
    data = _json(capsys)
    assert data['exact'] is True
    assert set(data) == {'gamma', 'u', 'h', 'exact'}

    path = word_file([{'gen': 'chi', 'root': [1, 1], 't': '1/3'}, {'gen': 'chi', 'root': [0, -1], 't': 2}])
    assert main(['iwasawa', '-t', 'A2', '-i', path, '--json']) == EXIT_OK
    assert _json(capsys)['exact'] is True


def test_factorize(capsys, word_file):
    path = word_file([{'gen': 'chi', 'root': [1, 0], 't': 3}, {'gen': 'chi', 'root': [0, 1], 't': '1/2'}])
    assert main(['factorize', '-t', 'A2', '-i', path, '--json']) == EXIT_OK
    data = _json(capsys)
    assert data['kind'] == 'unipotent'
    assert data['coords'] == [
        {'root': [1, 0], 't': '3'}, {'root': [0, 1], 't': '1/2'}, {'root': [1, 1], 't': '0'},
    ]

    path = word_file([{'gen': 'h', 'i': 2, 't': '-2/3'}])
    assert main(['factorize', '-t', 'A2', '-i', path, '--json']) == EXIT_OK
    data = _json(capsys)
    assert data['kind'] == 'torus'
    assert data['h'] == [{'i': 1, 't': '1'}, {'i': 2, 't': '-2/3'}]

    path = word_file([{'gen': 'chi', 'root': [-1, 0], 't': 1}])
    assert main(['factorize', '-t', 'A2', '-i', path]) == EXIT_FAILED


def test_evaluate_to_file(tmp_path, word_file):
    out = tmp_path / 'out.json'
    assert main(['evaluate', '-t', 'A1', '-i', word_file(SL2_WORD), '--json', '-o', str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data['matrix'] == [['1', '1'], ['1', '2']]
    assert data['stabilizes_lattice'] is True


def test_verify_algebra(capsys):
    assert main(['verify', 'algebra', '-t', 'A2', '--json']) == EXIT_OK
    data = _json(capsys)
    assert data['passed']
    assert [s['type'] for s in data['suites']] == ['A2']


def test_verify_everything_on_a1(capsys):
    assert main(['verify', 'all', '-t', 'A1', '--cases', '3', '-s', '42']) == EXIT_OK
    assert 'all checks passed' in capsys.readouterr().out


def test_verify_rejects_large_types():
    assert main(['verify', 'module', '-t', 'E8']) == EXIT_PARSE
