import json
import math

import pytest

from interfaces.i_report_writer import CSV_COLUMNS, SCHEMA
from models.errors import PayloadError
from models.isometry import Isometry, IsometryClass
from models.points import GeodesicLine, HPoint
from models.triangulation import PointSet2
from geometry.moebius import classify


class TestPayloadReader:

    def test_real_matrix(self, reader):
        assert reader.matrix('[[1, 2], [0, 1]]') == Isometry.of(1, 2, 0, 1)

    def test_complex_entries(self, reader):
        g = reader.matrix('[[1, "1i"], [[0, 0], "1+0i"]]')
        assert g.b == pytest.approx(1j)
        assert classify(g) == IsometryClass.PARABOLIC

    @pytest.mark.parametrize("text", ['[[1, 2], [0]]', '[1, 2, 3, 4]', '[[1, "x"], [0, 1]]', '[[false, 0], [0, 1]]'])
    def test_bad_matrices(self, reader, text):
        with pytest.raises(PayloadError):
            reader.matrix(text)

    def test_parse_error_names_the_column(self, reader):
        with pytest.raises(PayloadError, match='column'):
            reader.matrix('[[1, 2], [0, 1]')

    def test_matrix_list(self, reader):
        assert len(reader.matrices('[[[1, 2], [0, 1]], [[1, 0], [2, 1]]]')) == 2
        with pytest.raises(PayloadError):
            reader.matrices('[]')

    def test_points(self, reader):
        assert reader.point('[0.5, 2]') == HPoint.plane(0.5, 2.0)
        assert reader.point('[1, -1, 3]') == HPoint.space(1 - 1j, 3.0)
        with pytest.raises(PayloadError):
            reader.point('[1]')
        with pytest.raises(PayloadError):
            reader.points('{"u": 1}')

    def test_points_below_the_boundary(self, reader):
        with pytest.raises(ValueError):
            reader.point('[0, -1]')

    def test_line_with_infinite_end(self, reader):
        line = reader.line('[0, null]')
        assert line == GeodesicLine.between(0.0, None)

    def test_object_entries(self, reader):
        g = reader.matrix('[[1, {"re": 0, "im": 1}], [0, {"re": 1, "im": 0}]]')
        assert g.b == pytest.approx(1j)
        assert classify(g) == IsometryClass.PARABOLIC
        with pytest.raises(PayloadError):
            reader.matrix('[[1, {"re": 0}], [0, 1]]')

    def test_object_points(self, reader):
        assert reader.point('{"u": 0.5, "v": 2}') == HPoint.plane(0.5, 2.0)
        assert reader.point('{"a_re": 1, "a_im": -1, "b": 3}') == HPoint.space(1 - 1j, 3.0)
        assert reader.points('[{"u": 0, "v": 1}, [1, 1]]') == [HPoint.plane(0.0, 1.0), HPoint.plane(1.0, 1.0)]
        with pytest.raises(PayloadError):
            reader.point('{"u": 1, "w": 2}')
        with pytest.raises(PayloadError):
            reader.point('{"a_re": 1, "b": 3}')

    def test_boundary_point_forms(self, reader):
        assert reader.line('[{"x": 0}, "inf"]') == GeodesicLine.between(0.0, None)
        assert reader.line('["inf", {"x": -1.5}]') == GeodesicLine.between(None, -1.5)
        assert reader.line('[{"x": {"re": 0, "im": 1}}, null]') == GeodesicLine.between(1j, None)
        with pytest.raises(PayloadError):
            reader.line('[{"y": 0}, "inf"]')

    def test_weights(self, reader):
        assert reader.weights(None, 4) == [0.25] * 4
        assert reader.weights('[0.5, 0.5]', 2) == [0.5, 0.5]
        with pytest.raises(PayloadError):
            reader.weights('[1.0]', 2)


class TestReportWriter:

    def test_json_document(self, writer):
        text = writer.render_json('barycenter', {'point': HPoint.plane(0.0, 2.0), 'norm': math.inf})
        document = json.loads(text)
        assert document == {'schema': SCHEMA, 'kind': 'barycenter',
                            'result': {'point': [0.0, 2.0], 'norm': 'inf'}}

    def test_json_isometry_and_complex(self, writer):
        document = json.loads(writer.render_json('m', Isometry.of(1, 1j, 0, 1)))
        assert document['result'] == [[[1.0, 0.0], [0.0, 1.0]], [[0.0, 0.0], [1.0, 0.0]]]

    def test_csv_has_fixed_columns(self, writer):
        text = writer.render_csv([{'word': 'aB', 'mu_j': 0.5, 'drift': 0.25, 'len': 2, 'extra': 'x'}])
        header, row = text.splitlines()
        assert header == ','.join(CSV_COLUMNS)
        assert row == 'aB,,,,0.5,,0.25,2'

    def test_off_mesh(self, writer, triangulator):
        sites = [HPoint.plane(0.0, 1.0), HPoint.plane(1.0, 1.0), HPoint.plane(0.0, 2.0)]
        triangulation = triangulator.delaunay(PointSet2(sites))
        lines = writer.render_off(triangulation).splitlines()
        assert lines[:2] == ['OFF', '3 1 0']
        assert lines[2] == '0.0 0.0 0.0'
        assert lines[-1].startswith('3 ')

    def test_write_creates_parents(self, writer, tmp_path):
        path = tmp_path / 'a' / 'b.json'
        writer.write('{}\n', str(path))
        assert path.read_text(encoding='utf-8') == '{}\n'
