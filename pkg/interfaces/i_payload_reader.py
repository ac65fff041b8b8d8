"""Interface for parsing JSON payloads given on the command line."""
from abc import ABC, abstractmethod
from typing import List, Optional

from models.isometry import Isometry
from models.points import GeodesicLine, HPoint


class IPayloadReader(ABC):
    """Protocol for turning JSON text into domain objects."""

    @abstractmethod
    def matrix(self, text: str) -> Isometry:
        """
        Parse [[a, b], [c, d]].

        Entries are numbers, {re, im} objects, [re, im] pairs or strings
        such as "1+2j".

        Args:
            text: JSON text

        Returns:
            Normalized isometry
        """
        pass

    @abstractmethod
    def matrices(self, text: str) -> List[Isometry]:
        """
        Parse a JSON list of matrices.

        Args:
            text: JSON text

        Returns:
            Isometries in order
        """
        pass

    @abstractmethod
    def point(self, text: str) -> HPoint:
        """
        Parse {u, v} or [u, v] (half-plane), {a_re, a_im, b} or [x, y, h] (half-space).

        Args:
            text: JSON text

        Returns:
            HPoint
        """
        pass

    @abstractmethod
    def points(self, text: str) -> List[HPoint]:
        """
        Parse a JSON list of points.

        Args:
            text: JSON text

        Returns:
            Points in order
        """
        pass

    @abstractmethod
    def line(self, text: str) -> GeodesicLine:
        """
        Parse [start, end].

        Each endpoint is {x}, a bare coordinate, or "inf" (null also
        stands for ∞).

        Args:
            text: JSON text

        Returns:
            Oriented geodesic
        """
        pass

    @abstractmethod
    def weights(self, text: Optional[str], count: int) -> List[float]:
        """
        Parse a JSON list of weights, uniform when ``text`` is None.

        Args:
            text: JSON text or None
            count: Expected number of weights

        Returns:
            Weights
        """
        pass
