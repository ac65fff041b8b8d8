"""Interface for optimal one-point Lipschitz extensions."""
from abc import ABC, abstractmethod
from typing import Optional, Sequence

from models.points import HPoint
from models.stretch import ExtensionResult, FiniteMapData


class ILipschitzExtender(ABC):
    """Protocol for extending a Lipschitz map on a finite set by one point."""

    @abstractmethod
    def finite_map(self, sources: Sequence[HPoint], images: Sequence[HPoint],
                   lipschitz: Optional[float] = None) -> FiniteMapData:
        """
        Build validated finite map data.

        Args:
            sources: The finite set K
            images: φ(k) for each k in K
            lipschitz: Declared constant; computed from the pairs when omitted

        Returns:
            FiniteMapData whose declared constant bounds every pair ratio
        """
        pass

    @abstractmethod
    def one_point_extension(self, data: FiniteMapData, p: HPoint) -> ExtensionResult:
        """
        Minimize C(q) = max_k d(q, φ(k)) / d(p, k) over q.

        Args:
            data: Finite map φ on K
            p: New point, not in K

        Returns:
            Minimizer q and the optimal constant C
        """
        pass
