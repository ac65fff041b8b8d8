"""Interface for sampled Lipschitz constants of point maps."""
from abc import ABC, abstractmethod
from typing import Callable, Optional, Sequence

import numpy as np

from interfaces.i_barycenter_solver import PointMap
from models.points import HPoint
from models.stretch import LipschitzEstimate

Sampler = Callable[[np.random.Generator], HPoint]


class ILipschitzEstimator(ABC):
    """Protocol for lower-bound estimates of Lipschitz constants."""

    @abstractmethod
    def local_lip_estimate(self, f: PointMap, p: HPoint,
                           radii: Optional[Sequence[float]] = None) -> LipschitzEstimate:
        """
        Estimate Lip_p(f) from a ring of samples around p.

        Args:
            f: Map on H²; points where it raises DomainError are skipped
            p: Centre of the sampling rings
            radii: Ring radii; the smallest one gives the reported value

        Returns:
            Estimate with the value of each scale
        """
        pass

    @abstractmethod
    def global_lip_estimate(self, f: PointMap, sampler: Sampler, pairs: int,
                            seed: Optional[int] = None) -> LipschitzEstimate:
        """
        Estimate Lip(f) as the largest ratio over random pairs.

        Args:
            f: Map on Hⁿ
            sampler: Draws a point from a numpy Generator
            pairs: Number of pairs
            seed: Seed for numpy's default_rng

        Returns:
            Estimate over the sampled pairs
        """
        pass
