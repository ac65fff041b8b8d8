"""JSON payload parsing with diagnostics.

Object forms ({re, im}, {u, v}, {a_re, a_im, b}, {x}, "inf") are the
documented interchange format; the array forms are accepted as shorthand.
"""
import json
from typing import Any, List, Optional

from interfaces.i_payload_reader import IPayloadReader
from models.errors import PayloadError
from models.isometry import Isometry
from models.points import BoundaryPoint, GeodesicLine, HPoint

INFINITY_TOKENS = ('inf', 'infinity', '∞')


def _load(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise PayloadError(f"Cannot parse {what} {text!r}: {e.msg} at column {e.colno}") from e


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _fields(data: dict, names, what: str) -> List[float]:
    if set(data) != set(names):
        raise PayloadError(f"{what}: expected keys {{{', '.join(names)}}}, got {sorted(data)}")
    return [_real(data[name], f"{what}.{name}") for name in names]


def _scalar(value: Any, what: str):
    if _is_number(value):
        return value
    if isinstance(value, dict):
        re, im = _fields(value, ('re', 'im'), what)
        return complex(re, im)
    if isinstance(value, list) and len(value) == 2 and all(_is_number(x) for x in value):
        return complex(value[0], value[1])
    if isinstance(value, str):
        try:
            return complex(value.replace(' ', '').replace('i', 'j'))
        except ValueError:
            pass
    raise PayloadError(f"{what}: expected a number, {{re, im}}, [re, im] or a complex string, got {value!r}")


def _real(value: Any, what: str) -> float:
    if not _is_number(value):
        raise PayloadError(f"{what}: expected a real number, got {value!r}")
    return float(value)


def _boundary(value: Any, what: str) -> BoundaryPoint:
    if value is None or (isinstance(value, str) and value.strip().lower() in INFINITY_TOKENS):
        return BoundaryPoint(None)
    if isinstance(value, dict) and set(value) == {'x'}:
        value = value['x']
    return BoundaryPoint(_scalar(value, what))


class PayloadReader(IPayloadReader):

    def matrix(self, text: str) -> Isometry:
        """Parse one matrix payload."""
        return self._matrix(_load(text, 'matrix'), 'matrix')

    def matrices(self, text: str) -> List[Isometry]:
        """Parse a non-empty list of matrices."""
        data = _load(text, 'matrix list')
        if not isinstance(data, list) or not data:
            raise PayloadError("Expected a non-empty JSON list of matrices")
        return [self._matrix(m, f'matrix {i}') for i, m in enumerate(data)]

    def _matrix(self, data: Any, what: str) -> Isometry:
        if not (isinstance(data, list) and len(data) == 2
                and all(isinstance(row, list) and len(row) == 2 for row in data)):
            raise PayloadError(f"{what}: expected [[a, b], [c, d]], got {data!r}")
        (a, b), (c, d) = data
        return Isometry.of(*(_scalar(x, what) for x in (a, b, c, d)))

    def point(self, text: str) -> HPoint:
        """Parse one point payload."""
        return self._point(_load(text, 'point'), 'point')

    def points(self, text: str) -> List[HPoint]:
        """Parse a non-empty list of points."""
        data = _load(text, 'point list')
        if not isinstance(data, list) or not data:
            raise PayloadError("Expected a non-empty JSON list of points")
        return [self._point(p, f'point {i}') for i, p in enumerate(data)]

    def _point(self, data: Any, what: str) -> HPoint:
        if isinstance(data, dict):
            if 'u' in data:
                return HPoint.plane(*_fields(data, ('u', 'v'), what))
            a_re, a_im, b = _fields(data, ('a_re', 'a_im', 'b'), what)
            return HPoint.space(complex(a_re, a_im), b)
        if not isinstance(data, list) or len(data) not in (2, 3):
            raise PayloadError(f"{what}: expected {{u, v}}, {{a_re, a_im, b}}, [u, v] or [x, y, h], got {data!r}")
        coords = [_real(x, what) for x in data]
        if len(coords) == 2:
            return HPoint.plane(*coords)
        return HPoint.space(complex(coords[0], coords[1]), coords[2])

    def line(self, text: str) -> GeodesicLine:
        """Parse a geodesic given by its two boundary points."""
        data = _load(text, 'line')
        if not isinstance(data, list) or len(data) != 2:
            raise PayloadError(f"line: expected [start, end], got {data!r}")
        return GeodesicLine(*(_boundary(x, f'line endpoint {i}') for i, x in enumerate(data)))

    def weights(self, text: Optional[str], count: int) -> List[float]:
        """Parse weights, defaulting to uniform."""
        if text is None:
            return [1.0 / count] * count
        data = _load(text, 'weights')
        if not isinstance(data, list) or len(data) != count:
            raise PayloadError(f"Expected {count} weights, got {data!r}")
        return [_real(w, 'weight') for w in data]
