"""Closed-form hyperbolic trigonometry on the half-plane and half-space models."""
import math
from typing import Sequence

import numpy as np

from geometry import hyperboloid
from geometry.moebius import (apply, apply_boundary, cartan_mu, classify, common_perpendicular, compose,
                              frame, inverse, point_frame, rotation_about, translation,
                              translation_length)
from models.errors import DomainError, HyperstretchError, PreconditionError
from models.isometry import Isometry, IsometryClass
from models.points import BoundaryPoint, FermiFrame, GeodesicLine, HPoint, LineSeparation
from models.trigonometry import ClosingReport, HoroDecay, TriangleSides, TwoSpikes

# Frozen bound on |λ − 2 log D| for the spike translation, D ≥ 2
SPIKE_GAP_BOUND = 1.4


def dist(p: HPoint, q: HPoint) -> float:
    """
    Hyperbolic distance.

    Moves p to the basepoint with the affine map z -> (z − a_p)/b_p, so that
    q becomes u' + v'·j, then evaluates d(p₀, u' + v'j) = arccosh((|u'|² + v'² + 1)/(2v'))
    in the form 2 arcsinh(√(|u'|² + (v' − 1)²) / (2√v')).

    Args:
        p: First point
        q: Second point, same dimension

    Returns:
        Distance
    """
    if p.dim != q.dim:
        raise HyperstretchError(f"Dimension mismatch: H{p.dim} and H{q.dim}")
    u = (q.a - p.a) / p.b
    v = q.b / p.b
    num = math.sqrt(abs(u) ** 2 + (v - 1) ** 2)
    return 2 * math.asinh(num / (2 * math.sqrt(v)))


def displacement(g: Isometry, p: HPoint) -> float:
    return dist(p, apply(g, p))


def midpoint(p: HPoint, q: HPoint) -> HPoint:
    return geodesic_interpolate(p, q, 0.5)


def geodesic_interpolate(p: HPoint, q: HPoint, s: float) -> HPoint:
    """Point at fraction s of the way from p to q."""
    x, y = hyperboloid.to_coords(p), hyperboloid.to_coords(q)
    return hyperboloid.from_coords(hyperboloid.exp_map(x, s * hyperboloid.log_map(x, y)))


def horo_vs_hyperbolic(horocyclic: float) -> float:
    """Hyperbolic distance between two points L apart along a common horocycle: 2 arcsinh(L/2)."""
    if horocyclic < 0:
        raise DomainError(f"Horocyclic length must be nonnegative, got {horocyclic}")
    return 2 * math.asinh(horocyclic / 2)


def hyperbolic_vs_horo(distance: float) -> float:
    """Inverse of ``horo_vs_hyperbolic``: 2 sinh(d/2)."""
    if distance < 0:
        raise DomainError(f"Distance must be nonnegative, got {distance}")
    return 2 * math.sinh(distance / 2)


def horo_decay(initial: float, depth: float) -> HoroDecay:
    """
    Push two points on a horocycle a depth t towards its centre.

    The horocyclic length becomes e^{-t} L₀. Since arcsinh is concave and
    below the identity, e^{-t} d ≤ d_t ≤ D e^{-t} d with D = L₀ / (2 arcsinh(L₀/2)),
    which only depends on the initial distance.

    Args:
        initial: Horocyclic length L₀ at depth 0
        depth: t ≥ 0

    Returns:
        HoroDecay record
    """
    if depth < 0:
        raise DomainError(f"Depth must be nonnegative, got {depth}")
    if initial < 0:
        raise DomainError(f"Horocyclic length must be nonnegative, got {initial}")
    horocyclic = math.exp(-depth) * initial
    d0 = horo_vs_hyperbolic(initial)
    bound = initial / d0 if d0 > 0 else 1.0
    return HoroDecay(horocyclic, horo_vs_hyperbolic(horocyclic), d0, bound)


def cross_ratio(x1: BoundaryPoint, x2: BoundaryPoint, x3: BoundaryPoint, x4: BoundaryPoint) -> complex:
    """
    [ξ₁:ξ₂:ξ₃:ξ₄] = (ξ₁ − ξ₃)(ξ₂ − ξ₄) / ((ξ₁ − ξ₄)(ξ₂ − ξ₃)), so that [∞:0:1:ξ] = ξ.

    Factors involving ∞ cancel in pairs and are dropped. Real inputs give a float.
    """
    points = (x1, x2, x3, x4)
    finite = [p.x for p in points if not p.is_infinite]
    if len(finite) < 3 or len(set(complex(x) for x in finite)) != len(finite):
        raise HyperstretchError("Cross-ratio needs four distinct boundary points")

    def factor(i: int, j: int):
        if points[i].is_infinite or points[j].is_infinite:
            return 1
        return points[i].x - points[j].x

    value = factor(0, 2) * factor(1, 3) / (factor(0, 3) * factor(1, 2))
    if isinstance(value, complex) and value.imag == 0:
        return value.real
    return value


def line_distance(first: GeodesicLine, second: GeodesicLine) -> LineSeparation:
    """Distance between geodesics; intersecting or asymptotic lines give 0 with a flag."""
    return common_perpendicular(first, second)


def prism_distance(length: float, angle: float, s: float, t: float) -> float:
    """cosh d = cosh ℓ cosh s cosh t − cos θ sinh s sinh t."""
    c = (math.cosh(length) * math.cosh(s) * math.cosh(t)
         - math.cos(angle) * math.sinh(s) * math.sinh(t))
    return math.acosh(max(1.0, c))


def right_triangle_solve(angle_a: float, angle_c: float) -> TriangleSides:
    """
    Sides of the triangle with angles Â, π/2, Ĉ.

    cosh c = cos Ĉ / sin Â, cosh a = cos Â / sin Ĉ and cosh b = cot Â cot Ĉ.

    Args:
        angle_a: Â in radians
        angle_c: Ĉ in radians

    Returns:
        TriangleSides
    """
    if angle_a <= 0 or angle_c <= 0:
        raise DomainError("Triangle angles must be positive")
    if angle_a + angle_c >= math.pi / 2:
        raise DomainError(
            f"Angles {angle_a} + {angle_c} must sum below π/2 for a hyperbolic right triangle"
        )
    c = math.acosh(math.cos(angle_c) / math.sin(angle_a))
    a = math.acosh(math.cos(angle_a) / math.sin(angle_c))
    b = math.acosh(1.0 / (math.tan(angle_a) * math.tan(angle_c)))
    return TriangleSides(a, b, c)


def triangle_residuals(angle_a: float, sides: TriangleSides) -> dict:
    """Residuals of tan Â = tanh a / sinh c, cos Â = tanh c / tanh b, sin Â = sinh a / sinh b
    and cosh b = cosh a cosh c."""
    a, b, c = sides.a, sides.b, sides.c
    return {
        'tan': abs(math.tan(angle_a) - math.tanh(a) / math.sinh(c)),
        'cos': abs(math.cos(angle_a) - math.tanh(c) / math.tanh(b)),
        'sin': abs(math.sin(angle_a) - math.sinh(a) / math.sinh(b)),
        'pythagoras': abs(math.cosh(b) - math.cosh(a) * math.cosh(c)) / math.cosh(b),
    }


def circle_chord(radius: float, angle: float) -> float:
    """Distance between two points of a circle of radius r seen at angle θ from the centre."""
    return 2 * math.asinh(math.sinh(radius) * abs(math.sin(angle / 2)))


def circle_arc(radius: float, angle: float) -> float:
    return angle * math.sinh(radius)


def equidistant_separation(offset: float, length: float) -> float:
    """Distance between points at signed distance s from a line whose feet are ℓ apart."""
    return prism_distance(length, 0.0, offset, offset)


def equidistant_arc(offset: float, length: float) -> float:
    """Length ℓ cosh s of the equidistant curve above a base segment of length ℓ."""
    return length * math.cosh(offset)


def two_spikes_distance(length: float, xi: float, eta: float) -> TwoSpikes:
    """
    Distance between x and y in two adjacent ideal spikes.

    x' and y' are L apart on the shared side; x (resp. y) is at horocyclic
    distance ξ (resp. η) from x' (resp. y'). Then
    cosh d = ½‖(1 0; ξ 1) T_L (1 −η; 0 1)‖².
    """
    if xi < 0 or eta < 0:
        raise DomainError("Horocyclic offsets must be nonnegative")
    g = compose(compose(Isometry.of(1.0, 0.0, xi, 1.0), translation(length)),
                Isometry.of(1.0, -eta, 0.0, 1.0))
    d = cartan_mu(g)
    asymptotic = length + xi * xi + eta * eta
    return TwoSpikes(d, asymptotic, d - asymptotic)


def spike_translation(separation: float) -> Isometry:
    """z -> D − 1/z: sends 0 to ∞ and ∞ to D, and the unit half-circle at 0 to the one at D."""
    if separation < 2:
        raise DomainError(f"Unit half-circles need centres at least 2 apart, got {separation}")
    return Isometry.of(separation, -1.0, 1.0, 0.0)


def spike_length_gap(separation: float) -> float:
    """|λ − 2 log D| for the spike translation; at most SPIKE_GAP_BOUND."""
    return abs(translation_length(spike_translation(separation)) - 2 * math.log(separation))


def fermi_frame(line: GeodesicLine, origin: HPoint) -> FermiFrame:
    """Validated Fermi frame: the origin must lie on the base line."""
    if not line.is_real or origin.dim != 2:
        raise PreconditionError("Fermi frames are defined in H²")
    w = apply(inverse(frame(line)), origin)
    if abs(w.u) > 1e-10 * w.v:
        raise DomainError(f"Frame origin {origin} is not on the base line")
    return FermiFrame(line, origin)


def _frame_isometry(f: FermiFrame) -> Isometry:
    """Maps the standard frame (line(0, ∞), i) onto ``f``."""
    h = frame(f.line)
    t = apply(inverse(h), f.origin).v
    return compose(h, translation(math.log(t)))


def fermi_to_point(f: FermiFrame, h: float, v: float) -> HPoint:
    """Point with arclength h along the base line and signed distance v (positive on the left)."""
    z = complex(-math.tanh(v), 1 / math.cosh(v)) * math.exp(h)
    return apply(_frame_isometry(f), HPoint.from_complex(z))


def point_to_fermi(f: FermiFrame, p: HPoint):
    """Inverse of ``fermi_to_point``: returns (h, v)."""
    w = apply(inverse(_frame_isometry(f)), p)
    h = 0.5 * math.log(w.u * w.u + w.v * w.v)
    v = math.asinh(-w.u / w.v)
    return h, v


def geodesic_through(p: HPoint, q: HPoint) -> GeodesicLine:
    """Oriented geodesic through p then q (H²)."""
    if p.dim != 2 or q.dim != 2:
        raise PreconditionError("geodesic_through is defined in H²")
    if p == q:
        raise HyperstretchError("Points coincide; the geodesic is undetermined")
    # work from p = i so the separation test is scale free
    h = point_frame(p)
    w = apply(inverse(h), q)
    if abs(w.u) <= 1e-14 * max(1.0, w.v):
        normal = GeodesicLine.between(0.0, None) if w.v > 1 else GeodesicLine.between(None, 0.0)
    else:
        centre = (w.u * w.u + w.v * w.v - 1) / (2 * w.u)
        radius = math.hypot(centre, 1.0)
        if w.u > 0:
            normal = GeodesicLine.between(centre - radius, centre + radius)
        else:
            normal = GeodesicLine.between(centre + radius, centre - radius)
    return GeodesicLine(apply_boundary(h, normal.start), apply_boundary(h, normal.end))


def geodesic_point(p: HPoint, angle: float, distance: float) -> HPoint:
    """Point at distance r from p, leaving p in the Euclidean direction θ."""
    start = HPoint.plane(0.0, math.exp(distance))
    turned = apply(rotation_about(HPoint.plane(0.0, 1.0), angle - math.pi / 2), start)
    return apply(point_frame(p), turned)


def project_to_line(x: HPoint, line: GeodesicLine) -> HPoint:
    h = frame(line)
    w = apply(inverse(h), x)
    return apply(h, HPoint.plane(0.0, abs(w.z)))


def project_to_segment(x: HPoint, p: HPoint, q: HPoint) -> HPoint:
    """Closest point to x on the segment [p, q]."""
    if p == q:
        return p
    h = frame(geodesic_through(p, q))
    h_inv = inverse(h)
    lo, hi = sorted((apply(h_inv, p).v, apply(h_inv, q).v))
    height = abs(apply(h_inv, x).z)
    return apply(h, HPoint.plane(0.0, min(max(height, lo), hi)))


def _klein(p: HPoint) -> np.ndarray:
    return hyperboloid.klein_coords(hyperboloid.to_coords(p))


def _cross(o: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    return float((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]))


def in_triangle(x: HPoint, a: HPoint, b: HPoint, c: HPoint, slack: float = 0.0) -> bool:
    """Geodesics are straight in the Klein chart, so the test is a Euclidean one."""
    kx, ka, kb, kc = (_klein(p) for p in (x, a, b, c))
    s1, s2, s3 = _cross(ka, kb, kx), _cross(kb, kc, kx), _cross(kc, ka, kx)
    return (s1 >= -slack and s2 >= -slack and s3 >= -slack) or \
        (s1 <= slack and s2 <= slack and s3 <= slack)


def project_to_triangle(x: HPoint, a: HPoint, b: HPoint, c: HPoint) -> HPoint:
    """Closest point to x in the filled triangle abc."""
    if in_triangle(x, a, b, c):
        return x
    candidates = [project_to_segment(x, a, b), project_to_segment(x, b, c), project_to_segment(x, c, a)]
    return min(candidates, key=lambda y: dist(x, y))


def _angle_at(p: HPoint, q: HPoint, r: HPoint) -> float:
    """Angle at q of the triangle pqr, from the hyperbolic law of cosines."""
    a, b, c = dist(q, p), dist(q, r), dist(p, r)
    if a == 0 or b == 0:
        return math.pi
    cos_q = (math.cosh(a) * math.cosh(b) - math.cosh(c)) / (math.sinh(a) * math.sinh(b))
    return math.acos(max(-1.0, min(1.0, cos_q)))


def closing_lemma_check(points: Sequence[HPoint], g: Isometry, period: int, tolerance: float) -> ClosingReport:
    """
    Compare λ(g) with the length of one period of a g-invariant broken line.

    Args:
        points: p₀ … p_{m−1}; the line continues with p_{i+m} = g·p_i
        g: Hyperbolic isometry
        period: m
        tolerance: δ; the report flags a violation when the discrepancy exceeds m·δ

    Returns:
        ClosingReport
    """
    if classify(g) != IsometryClass.HYPERBOLIC:
        raise PreconditionError("closing_lemma_check needs a hyperbolic isometry")
    if period < 1 or len(points) < period:
        raise HyperstretchError(f"Need at least {period} points for period {period}")
    chain = list(points[:period]) + [apply(g, points[0])]
    before = apply(inverse(g), points[period - 1])
    segments = [dist(chain[i], chain[i + 1]) for i in range(period)]
    angles = []
    for i in range(period):
        prev = before if i == 0 else chain[i - 1]
        angles.append(_angle_at(prev, chain[i], chain[i + 1]))
    lam = translation_length(g)
    total = sum(segments)
    discrepancy = abs(total - lam)
    return ClosingReport(
        translation_length=lam,
        period_length=total,
        discrepancy=discrepancy,
        tolerance=period * tolerance,
        violation=discrepancy > period * tolerance,
        min_segment=min(segments),
        min_angle=min(angles),
        segment_lengths=segments,
    )


def leaf_pair_predicate(separation: float, angle: float, stretch: float) -> bool:
    """((cosh η + cos θ)/2)^C + ((cosh η − cos θ)/2)^C ≥ 1, with 1e-12 slack."""
    if stretch <= 1:
        raise DomainError(f"Stretch factor must exceed 1, got {stretch}")
    if separation < 0 or not (0 <= angle <= math.pi):
        raise DomainError("Need η ≥ 0 and θ in [0, π]")
    ch, co = math.cosh(separation), math.cos(angle)
    first = max(0.0, (ch + co) / 2) ** stretch
    second = max(0.0, (ch - co) / 2) ** stretch
    return first + second >= 1 - 1e-12
