import json
import math

import pytest

from interfaces.i_report_writer import CSV_COLUMNS, SCHEMA
from main import main

SANOV = '[[[1, 2], [0, 1]], [[1, 0], [2, 1]]]'


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestScalarCommands:

    def test_classify(self, capsys):
        code, out, _ = _run(capsys, 'classify', '--matrix', '[[1, 1], [0, 1]]')
        assert code == 0
        assert out == 'Parabolic\n'

    def test_length_of_parabolic(self, capsys):
        code, out, _ = _run(capsys, 'length', '--matrix', '[[1, 1], [0, 1]]')
        assert code == 0
        assert out == '0.0\n'

    def test_mu_json(self, capsys):
        code, out, _ = _run(capsys, 'mu', '--matrix', '[[1, 3], [0, 1]]', '--json')
        assert code == 0
        document = json.loads(out)
        assert document['schema'] == SCHEMA
        assert document['kind'] == 'mu'
        assert document['result']['mu'] == pytest.approx(math.acosh(5.5), abs=1e-12)

    def test_dist(self, capsys):
        code, out, _ = _run(capsys, 'dist', '--p', '[0, 1]', '--q', '[0, 2]')
        assert code == 0
        assert float(out) == pytest.approx(math.log(2), abs=1e-15)

    def test_dist_in_half_space(self, capsys):
        code, out, _ = _run(capsys, 'dist', '--p', '[0, 0, 1]', '--q', '[0, 0, 3]')
        assert code == 0
        assert float(out) == pytest.approx(math.log(3), abs=1e-15)

    def test_dist_to_line(self, capsys):
        code, out, _ = _run(capsys, 'dist', '--p', '{"u": 0, "v": 2}', '--line', '[{"x": -1}, {"x": 1}]')
        assert code == 0
        assert float(out) == pytest.approx(math.log(2), abs=1e-12)
        code, out, _ = _run(capsys, 'dist', '--p', '[3, 1]', '--line', '[{"x": 0}, "inf"]')
        assert code == 0
        assert float(out) == pytest.approx(math.asinh(3.0), abs=1e-12)

    def test_dist_to_line_needs_half_plane(self, capsys):
        code, _, err = _run(capsys, 'dist', '--p', '[0, 0, 1]', '--line', '[{"x": 0}, "inf"]')
        assert code == 1
        assert 'Error' in err


class TestValidation:

    @pytest.mark.parametrize("matrix", ['[[1, 2], [3]]', '[[1, 2', '[[1, 2], [2, 4]]', '[[true, 0], [0, 1]]'])
    def test_bad_matrix_exits_one(self, capsys, matrix):
        code, out, err = _run(capsys, 'length', '--matrix', matrix)
        assert code == 1
        assert out == ''
        assert err.startswith('Error')

    def test_missing_argument(self, capsys):
        code, _, err = _run(capsys, 'dist', '--p', '[0, 1]')
        assert code == 1
        assert 'Error' in err

    def test_workers_must_be_positive(self, capsys):
        code, _, _ = _run(capsys, 'ratio-sup', '--j', SANOV, '--rho', SANOV, '--workers', '0')
        assert code == 1

    def test_csv_only_for_tables(self, capsys):
        code, _, _ = _run(capsys, 'length', '--matrix', '[[2, 0], [0, 0.5]]', '--csv')
        assert code == 1

    def test_scenario_cap(self, capsys):
        code, _, err = _run(capsys, 'scenario', 'ex98', '--k-values', '[8]')
        assert code == 1
        assert 'classification band' in err

    def test_scenario_k_values_payload(self, capsys):
        code, _, _ = _run(capsys, 'scenario', 'ex98', '--k-values', 'abc')
        assert code == 1


class TestSpectrumCommands:

    def test_ratio_sup_csv(self, capsys):
        code, out, _ = _run(capsys, 'ratio-sup', '--j', SANOV, '--rho', SANOV, '--length', '3', '--csv')
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == ','.join(CSV_COLUMNS)
        assert len(lines) > 1
        ratio = lines[1].split(',')[CSV_COLUMNS.index('ratio')]
        assert float(ratio) == pytest.approx(1.0, abs=1e-9)

    def test_drift_json(self, capsys):
        code, out, _ = _run(capsys, 'drift', '--j', SANOV, '--rho', SANOV, '--length', '3', '--json')
        assert code == 0
        result = json.loads(out)['result']
        assert result['min_drift'] == pytest.approx(0.0, abs=1e-9)

    def test_workers_do_not_change_output(self, capsys):
        _, serial, _ = _run(capsys, 'ratio-sup', '--j', SANOV, '--rho', SANOV, '--length', '4', '--json')
        _, parallel, _ = _run(capsys, 'ratio-sup', '--j', SANOV, '--rho', SANOV, '--length', '4', '--json',
                              '--workers', '2')
        assert serial == parallel


class TestGeometryCommands:

    def test_barycenter(self, capsys):
        code, out, _ = _run(capsys, 'barycenter', '--points', '[[0, 1], [0, 4]]')
        assert code == 0
        u, v = (float(x) for x in out.split())
        assert u == pytest.approx(0.0, abs=1e-12)
        assert v == pytest.approx(2.0, abs=1e-12)

    def test_barycenter_rejects_bad_weights(self, capsys):
        code, _, _ = _run(capsys, 'barycenter', '--points', '[[0, 1], [0, 4]]', '--weights', '[0.5, 0.6]')
        assert code == 1

    def test_extend(self, capsys):
        code, out, _ = _run(capsys, 'extend', '--sources', f'[[0, 1], [0, {math.exp(2)!r}]]',
                            '--images', f'[[0, 1], [0, {math.exp(2)!r}]]', '--p', f'[0, {math.e!r}]')
        assert code == 0
        first = out.splitlines()[0]
        assert first.startswith('C = ')
        assert float(first[4:]) == pytest.approx(1.0, abs=1e-6)

    def test_delaunay_with_off(self, capsys, tmp_path):
        mesh = tmp_path / 'mesh' / 'sites.off'
        code, out, _ = _run(capsys, 'delaunay', '--random', '12', '--seed', '5', '--off', str(mesh))
        assert code == 0
        lines = mesh.read_text(encoding='utf-8').splitlines()
        assert lines[0] == 'OFF'
        vertices, faces, edges = (int(x) for x in lines[1].split())
        assert (vertices, edges) == (12, 0)
        assert faces == len(out.splitlines())

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / 'length.txt'
        code, out, _ = _run(capsys, 'length', '--matrix', '[[2, 0], [0, 0.5]]', '--out', str(target))
        assert code == 0
        assert out == ''
        assert float(target.read_text(encoding='utf-8')) == pytest.approx(2 * math.log(2), abs=1e-12)


class TestScenarioCommand:

    def test_ex97_json(self, capsys):
        code, out, _ = _run(capsys, 'scenario', 'ex97', '--kmax', '3', '--json')
        assert code == 0
        document = json.loads(out)
        assert document['kind'] == 'ex97'
        assert document['result']['passed'] is True
        assert [row['trace'] for row in document['result']['data']['rows']] == [7, 142, 1294]

    def test_text_report(self, capsys):
        code, out, _ = _run(capsys, 'scenario', 'ex81', '--t', '2', '--T', '1')
        assert code == 0
        assert out.startswith('ex81: PASS')
        assert 'extension_constant' in out
