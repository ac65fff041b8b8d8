"""Interface for machine-readable output."""
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from models.triangulation import Triangulation

SCHEMA = 'hyperstretch/1'
CSV_COLUMNS = ('word', 'lambda_j', 'lambda_rho', 'ratio', 'mu_j', 'mu_rho', 'drift', 'len')


class IReportWriter(ABC):
    """Protocol for JSON, CSV and OFF renderings."""

    @abstractmethod
    def render_json(self, kind: str, payload: Any) -> str:
        """
        Versioned JSON document.

        Args:
            kind: Subcommand or scenario id
            payload: Result object (dataclasses, points, isometries, numbers)

        Returns:
            JSON text with sorted keys and a top-level "schema"
        """
        pass

    @abstractmethod
    def render_csv(self, rows: List[Dict[str, Any]]) -> str:
        """
        Per-word table with the fixed CSV_COLUMNS; missing cells are empty.

        Args:
            rows: Dicts keyed by column name

        Returns:
            CSV text with a header line
        """
        pass

    @abstractmethod
    def render_off(self, triangulation: Triangulation) -> str:
        """
        OFF mesh of a triangulation in Klein coordinates.

        Args:
            triangulation: Delaunay triangulation

        Returns:
            OFF text
        """
        pass

    @abstractmethod
    def write(self, text: str, path: Optional[str] = None) -> None:
        """
        Write text to a file, or to stdout when ``path`` is None.

        Args:
            text: Rendered output
            path: Destination file
        """
        pass
