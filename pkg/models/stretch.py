"""Stretch maps, finite map data and Lipschitz estimates."""
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from models.errors import DomainError, HyperstretchError
from models.points import FermiFrame, HPoint

LINEAR = 'linear'
EXACT_BISECT = 'exact_bisect'


@dataclass(frozen=True)
class FermiStretchMap:
    """(h, v) -> (C₀ h, Ψ(v)) from the source frame to the target frame.

    The linear profile is Ψ(v) = C₀ v; the exact-bisect profile keeps the
    ray at angle Â from the origin on the ray at angle Â from the image origin.
    """
    source: FermiFrame
    target: FermiFrame
    factor: float
    profile: str = LINEAR
    angle: Optional[float] = None

    def __post_init__(self):
        if not 0 < self.factor < 1:
            raise DomainError(f"Stretch factor must lie in (0, 1), got {self.factor}")
        if self.profile not in (LINEAR, EXACT_BISECT):
            raise HyperstretchError(f"Unknown profile {self.profile!r}")
        if self.profile == EXACT_BISECT:
            if self.angle is None or not 0 < self.angle < math.pi / 2:
                raise DomainError(f"Exact-bisect profile needs an angle in (0, π/2), got {self.angle}")


@dataclass(frozen=True)
class FiniteMapData:
    """Map φ: K -> Hⁿ on a finite set with a declared Lipschitz constant."""
    sources: Tuple[HPoint, ...]
    images: Tuple[HPoint, ...]
    lipschitz: float

    def __post_init__(self):
        if not self.sources:
            raise HyperstretchError("The finite set K is empty")
        if len(self.sources) != len(self.images):
            raise HyperstretchError(f"{len(self.sources)} sources but {len(self.images)} images")
        object.__setattr__(self, 'sources', tuple(self.sources))
        object.__setattr__(self, 'images', tuple(self.images))


@dataclass
class ExtensionResult:
    point: HPoint
    constant: float
    lipschitz: float
    iterations: int
    # constraints within 1e-9 of the maximum at the returned point
    active: List[int] = field(default_factory=list)


@dataclass
class LipschitzEstimate:
    """Sampled Lipschitz constant; always a lower bound of the true value."""
    value: float
    per_scale: List[Tuple[float, float]] = field(default_factory=list)
    samples: int = 0
    lower_bound: bool = True
