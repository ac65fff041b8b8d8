"""Finite point sets in H², their Delaunay triangulations and empty-ball certificates."""
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Tuple

from models.errors import DegenerateInputError, HyperstretchError
from models.points import HPoint

BALL = 'ball'
HOROBALL = 'horoball'
HYPERBALL = 'hyperball'

# Minimal hyperbolic separation between sites
MIN_SEPARATION = 1e-8

Triangle = Tuple[int, int, int]
Edge = Tuple[int, int]


@dataclass(frozen=True)
class PointSet2:
    """At least three distinct sites in H².

    ``general_position`` is the caller's claim that no four sites share a
    circle, horocycle or hypercycle; the triangulator rejects violations.
    """
    points: Tuple[HPoint, ...]
    general_position: bool = True

    def __post_init__(self):
        object.__setattr__(self, 'points', tuple(self.points))
        if len(self.points) < 3:
            raise HyperstretchError(f"Need at least 3 sites, got {len(self.points)}")
        if any(p.dim != 2 for p in self.points):
            raise HyperstretchError("Delaunay triangulations are computed in H²")

    def check_separation(self, distance) -> None:
        """Raise on two sites closer than MIN_SEPARATION under ``distance``."""
        for i, j in combinations(range(len(self.points)), 2):
            if distance(self.points[i], self.points[j]) < MIN_SEPARATION:
                raise DegenerateInputError(f"Sites {i} and {j} coincide", (i, j))

    def __len__(self) -> int:
        return len(self.points)


@dataclass
class Triangulation:
    vertices: Tuple[HPoint, ...]
    triangles: List[Triangle]
    boundary: List[Edge] = field(default_factory=list)

    @property
    def edges(self) -> List[Edge]:
        seen = set()
        for a, b, c in self.triangles:
            for u, v in ((a, b), (b, c), (c, a)):
                seen.add((min(u, v), max(u, v)))
        return sorted(seen)

    def edge_counts(self) -> Counter:
        return Counter((min(u, v), max(u, v)) for a, b, c in self.triangles for u, v in ((a, b), (b, c), (c, a)))

    @property
    def euler_characteristic(self) -> int:
        used = {i for t in self.triangles for i in t}
        return len(used) - len(self.edges) + len(self.triangles)


@dataclass
class Certificate:
    """Supporting plane ⟨m, x⟩ = offset of one triangle, m in Lorentz form."""
    triangle: Triangle
    kind: str
    normal: Tuple[float, float, float]
    offset: float
    margin: float      # smallest normalized distance of another site beyond the plane
    empty: bool


@dataclass
class CertificateReport:
    certificates: List[Certificate]
    all_empty: bool
    min_margin: float
    euler_characteristic: int
