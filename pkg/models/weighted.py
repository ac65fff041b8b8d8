"""Weighted point sets, the input of the barycenter solver."""
import math
from dataclasses import dataclass
from typing import List, Sequence

from models.errors import HyperstretchError, InvalidWeightsError
from models.points import HPoint

WEIGHT_SUM_TOLERANCE = 1e-12


def check_weights(weights: Sequence[float], tolerance: float = WEIGHT_SUM_TOLERANCE) -> None:
    """Raise InvalidWeightsError unless the weights are nonnegative and sum to one."""
    if not weights:
        raise InvalidWeightsError("Empty weight list")
    if any(not math.isfinite(w) or w < 0 for w in weights):
        raise InvalidWeightsError(f"Weights must be finite and nonnegative: {list(weights)}")
    total = math.fsum(weights)
    if abs(total - 1.0) > tolerance:
        raise InvalidWeightsError(f"Weights sum to {total!r}, expected 1")


@dataclass(frozen=True)
class WeightedPointSet:
    """Finitely many points with nonnegative weights summing to one."""
    points: List[HPoint]
    weights: List[float]

    def __post_init__(self):
        if not self.points:
            raise HyperstretchError("Weighted point set is empty")
        if len(self.points) != len(self.weights):
            raise HyperstretchError(
                f"{len(self.points)} points but {len(self.weights)} weights"
            )
        dims = {p.dim for p in self.points}
        if len(dims) != 1:
            raise HyperstretchError(f"Points of mixed dimensions {sorted(dims)}")
        check_weights(self.weights)

    @classmethod
    def uniform(cls, points: Sequence[HPoint]) -> 'WeightedPointSet':
        k = len(points)
        return cls(list(points), [1.0 / k] * k if k else [])

    @property
    def dim(self) -> int:
        return self.points[0].dim

    def __len__(self) -> int:
        return len(self.points)
