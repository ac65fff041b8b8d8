"""Points, ideal points, geodesic lines and frames of the upper half-space models."""
import cmath
import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from models.errors import DomainError, HyperstretchError

# Residual allowed in x₁² + … + x_n² − x_{n+1}² + 1, relative to max(1, x_{n+1}²)
FORM_TOLERANCE = 1e-10


@dataclass(frozen=True)
class HPoint:
    """Point a + b·j of the upper half-space.

    For the half-plane (dim 2) the horizontal coordinate is real and the
    point is u + iv with u = a, v = b.
    """
    a: complex
    b: float
    dim: int = 2

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise HyperstretchError(f"Unsupported dimension: {self.dim}")
        if not (cmath.isfinite(complex(self.a)) and math.isfinite(self.b)):
            raise DomainError(f"Non-finite point coordinates ({self.a}, {self.b})")
        if self.b <= 0:
            raise DomainError(f"Point height must be positive, got {self.b}")
        if self.dim == 2 and complex(self.a).imag != 0:
            raise DomainError(f"Half-plane point with complex abscissa {self.a}")
        object.__setattr__(self, 'a', complex(self.a))
        object.__setattr__(self, 'b', float(self.b))

    @classmethod
    def plane(cls, u: float, v: float) -> 'HPoint':
        return cls(complex(u), v, 2)

    @classmethod
    def from_complex(cls, z: complex) -> 'HPoint':
        return cls(complex(z.real), z.imag, 2)

    @classmethod
    def space(cls, a: complex, b: float) -> 'HPoint':
        return cls(complex(a), b, 3)

    @property
    def u(self) -> float:
        return self.a.real

    @property
    def v(self) -> float:
        return self.b

    @property
    def z(self) -> complex:
        """u + iv; only meaningful in the half-plane."""
        return complex(self.a.real, self.b)


BASEPOINT_2 = HPoint.plane(0.0, 1.0)
BASEPOINT_3 = HPoint.space(0.0, 1.0)


def basepoint(dim: int) -> HPoint:
    return BASEPOINT_2 if dim == 2 else BASEPOINT_3


@dataclass(frozen=True)
class BoundaryPoint:
    """Ideal point: a finite coordinate, or the point at infinity when x is None."""
    x: Optional[Union[float, complex]] = None

    def __post_init__(self):
        if self.x is not None:
            x = complex(self.x)
            if not cmath.isfinite(x):
                raise DomainError("Use BoundaryPoint.infinity() for the point at infinity")
            object.__setattr__(self, 'x', x.real if x.imag == 0 else x)

    @classmethod
    def finite(cls, x: Union[float, complex]) -> 'BoundaryPoint':
        return cls(x)

    @classmethod
    def infinity(cls) -> 'BoundaryPoint':
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.x is None

    @property
    def is_real(self) -> bool:
        return self.x is None or not isinstance(self.x, complex)

    def __repr__(self) -> str:
        return "BoundaryPoint(inf)" if self.x is None else f"BoundaryPoint({self.x})"


INFINITY = BoundaryPoint.infinity()


def _same_boundary(p: BoundaryPoint, q: BoundaryPoint, tol: float = 1e-12) -> bool:
    if p.is_infinite or q.is_infinite:
        return p.is_infinite and q.is_infinite
    return abs(complex(p.x) - complex(q.x)) <= tol * max(1.0, abs(p.x), abs(q.x))


@dataclass(frozen=True)
class GeodesicLine:
    """Oriented geodesic from ``start`` to ``end``."""
    start: BoundaryPoint
    end: BoundaryPoint

    def __post_init__(self):
        if _same_boundary(self.start, self.end):
            raise HyperstretchError(f"Geodesic endpoints coincide: {self.start}")

    @classmethod
    def between(cls, start: Optional[Union[float, complex]], end: Optional[Union[float, complex]]) -> 'GeodesicLine':
        """Shorthand taking raw coordinates, None standing for infinity."""
        return cls(BoundaryPoint(start), BoundaryPoint(end))

    @property
    def is_real(self) -> bool:
        return self.start.is_real and self.end.is_real

    def reversed(self) -> 'GeodesicLine':
        return GeodesicLine(self.end, self.start)


@dataclass(frozen=True)
class FermiFrame:
    """Base line plus an origin on it; build with ``geometry.hgeom.fermi_frame``.

    The positive side of the signed distance v is the left of the
    oriented base line.
    """
    line: GeodesicLine
    origin: HPoint


@dataclass(frozen=True, eq=False)
class HyperboloidPoint:
    """Point of the upper sheet x₁² + … + x_n² − x_{n+1}² = −1.

    The form residual may be at most FORM_TOLERANCE times max(1, x_{n+1}²).
    """
    coords: np.ndarray = field(repr=True)

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=float)
        if coords.ndim != 1 or len(coords) not in (3, 4):
            raise HyperstretchError(f"Hyperboloid point needs 3 or 4 coordinates, got {coords.shape}")
        if not np.all(np.isfinite(coords)):
            raise DomainError(f"Non-finite hyperboloid coordinates {coords}")
        object.__setattr__(self, "coords", coords)
        if coords[-1] <= 0:
            raise DomainError("Point lies on the lower sheet")
        if self.form_residual > FORM_TOLERANCE * max(1.0, float(coords[-1]) ** 2):
            raise DomainError(f"Point is off the hyperboloid (residual {self.form_residual:.3e})")

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    @property
    def form_residual(self) -> float:
        x = self.coords
        return abs(float(np.dot(x[:-1], x[:-1]) - x[-1] ** 2 + 1.0))


DISJOINT = 'disjoint'
INTERSECTING = 'intersecting'
ASYMPTOTIC = 'asymptotic'


@dataclass(frozen=True)
class LineSeparation:
    """Distance between two geodesics and how they sit relative to each other."""
    distance: float
    kind: str  # disjoint | intersecting | asymptotic
    # Common perpendicular oriented from the first line to the second (disjoint only)
    perpendicular: Optional[GeodesicLine] = None
