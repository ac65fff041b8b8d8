"""Interface for weighted barycenters and barycentric averaging of maps."""
from abc import ABC, abstractmethod
from typing import Callable, Sequence

from models.points import HPoint
from models.weighted import WeightedPointSet

PointMap = Callable[[HPoint], HPoint]
Bump = Callable[[HPoint], float]


class IBarycenterSolver(ABC):
    """Protocol for Fréchet barycenters in H² and H³."""

    @abstractmethod
    def barycenter(self, weighted: WeightedPointSet) -> HPoint:
        """
        Minimize Φ(x) = Σ αᵢ d(x, pᵢ)².

        Args:
            weighted: Points and normalized weights

        Returns:
            The unique minimizer
        """
        pass

    @abstractmethod
    def gradient_norm(self, weighted: WeightedPointSet, x: HPoint) -> float:
        """
        Norm of the gradient of Φ at x.

        Args:
            weighted: Points and normalized weights
            x: Evaluation point

        Returns:
            ‖grad Φ(x)‖
        """
        pass

    @abstractmethod
    def average_maps(self, maps: Sequence[PointMap], weights: Sequence[float], x: HPoint) -> HPoint:
        """
        Evaluate the barycentric average f = Σ αᵢ fᵢ at x.

        Args:
            maps: Point maps fᵢ
            weights: Constant weights αᵢ
            x: Evaluation point

        Returns:
            Barycenter of the images fᵢ(x)
        """
        pass

    @abstractmethod
    def blend_with_partition(self, maps: Sequence[PointMap], partition: Sequence[Bump], x: HPoint) -> HPoint:
        """
        Evaluate the blend of maps by a partition of unity at x.

        Args:
            maps: Point maps fᵢ
            partition: Bump functions ψᵢ with Σ ψᵢ(x) = 1
            x: Evaluation point

        Returns:
            Barycenter of the fᵢ(x) with weights ψᵢ(x)
        """
        pass

    @abstractmethod
    def leibniz_bound(self, maps: Sequence[PointMap], partition: Sequence[Bump],
                      map_lipschitz: Sequence[float], partition_lipschitz: Sequence[float],
                      x: HPoint) -> float:
        """
        Upper bound on the local Lipschitz constant of the blend at x.

        Args:
            maps: Point maps fᵢ
            partition: Bump functions ψᵢ
            map_lipschitz: Lipschitz constants of the fᵢ
            partition_lipschitz: Lipschitz constants of the ψᵢ
            x: Evaluation point

        Returns:
            Σ (Lip(ψᵢ)·R_x + ψᵢ(x)·Lip(fᵢ)), R_x the diameter of {fᵢ(x)}
        """
        pass
