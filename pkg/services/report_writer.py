"""JSON, CSV and OFF rendering."""
import csv
import dataclasses
import io
import json
import math
import sys
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from geometry import hyperboloid
from interfaces.i_report_writer import CSV_COLUMNS, SCHEMA, IReportWriter
from models.isometry import Isometry
from models.points import BoundaryPoint, GeodesicLine, HPoint
from models.triangulation import Triangulation


def _plain(value: Any) -> Any:
    """Convert results to JSON-compatible values."""
    if isinstance(value, HPoint):
        if value.dim == 2:
            return [value.u, value.v]
        return [value.a.real, value.a.imag, value.b]
    if isinstance(value, Isometry):
        return [[_plain(x) for x in row] for row in value.rows()]
    if isinstance(value, BoundaryPoint):
        return None if value.is_infinite else _plain(value.x)
    if isinstance(value, GeodesicLine):
        return [_plain(value.start), _plain(value.end)]
    if isinstance(value, Enum):
        return value.value
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        result = {f.name: _plain(getattr(value, f.name)) for f in dataclasses.fields(value)}
        if hasattr(type(value), 'passed'):
            result['passed'] = value.passed
        return result
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        return _plain(value.item())
    if isinstance(value, complex):
        return [_plain(value.real), _plain(value.imag)]
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


class ReportWriter(IReportWriter):

    def render_json(self, kind: str, payload: Any) -> str:
        """
        Versioned JSON document for one result.

        Args:
            kind: Subcommand or scenario name
            payload: Result object; dataclasses, isometries, points and complex
                numbers are converted

        Returns:
            JSON text
        """
        document = {'schema': SCHEMA, 'kind': kind, 'result': _plain(payload)}
        return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + '\n'

    def render_csv(self, rows: List[Dict[str, Any]]) -> str:
        """Table with the fixed CSV_COLUMNS header; missing cells are empty."""
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, restval='', extrasaction='ignore',
                                lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in row.items()})
        return buffer.getvalue()

    def render_off(self, triangulation: Triangulation) -> str:
        """OFF mesh of a triangulation, vertices in Klein disc coordinates with z = 0."""
        lines = ['OFF', f'{len(triangulation.vertices)} {len(triangulation.triangles)} 0']
        for p in triangulation.vertices:
            x, y = (float(c) for c in hyperboloid.klein_coords(hyperboloid.to_coords(p)))
            lines.append(f'{x!r} {y!r} 0.0')
        for a, b, c in triangulation.triangles:
            lines.append(f'3 {a} {b} {c}')
        return '\n'.join(lines) + '\n'

    def write(self, text: str, path: Optional[str] = None) -> None:
        """Write to ``path``, creating parent directories, or to stdout when path is None."""
        if path is None:
            sys.stdout.write(text)
            return
        output = Path(path)
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text, encoding='utf-8')
