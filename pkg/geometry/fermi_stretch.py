"""Fermi-coordinate stretch maps (h, v) -> (C₀ h, Ψ(v))."""
import math

from geometry.hgeom import fermi_to_point, point_to_fermi
from models.errors import DomainError
from models.points import HPoint
from models.stretch import EXACT_BISECT, FermiStretchMap

# v may be this far below the base line before the point counts as off the half-plane
HALF_PLANE_SLACK = 1e-12


def ray_height(v: float, angle: float) -> float:
    """σ(v) = asinh(tanh v / tan Â): arclength h at which the ray at angle Â reaches height v."""
    return math.asinh(math.tanh(v) / math.tan(angle))


def ray_offset(h: float, angle: float) -> float:
    """σ⁻¹(h) = atanh(tan Â sinh h), defined while tan Â sinh h < 1."""
    t = math.tan(angle) * math.sinh(h)
    if abs(t) >= 1:
        raise DomainError(f"The ray at angle {angle} stays below height reached at arclength {h}")
    return math.atanh(t)


def profile(stretch: FermiStretchMap, v: float) -> float:
    """Ψ(v); the exact-bisect profile is σ⁻¹(C₀ σ(v))."""
    if stretch.profile == EXACT_BISECT:
        return ray_offset(stretch.factor * ray_height(v, stretch.angle), stretch.angle)
    return stretch.factor * v


def fermi_stretch(stretch: FermiStretchMap, p: HPoint) -> HPoint:
    """Image of p, which must lie in the closed half-plane to the left of the source base line."""
    h, v = point_to_fermi(stretch.source, p)
    if v < -HALF_PLANE_SLACK:
        raise DomainError(f"{p} lies on the wrong side of the base line (v = {v:.3e})")
    v = max(v, 0.0)
    return fermi_to_point(stretch.target, stretch.factor * h, profile(stretch, v))
