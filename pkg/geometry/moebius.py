"""Möbius algebra: composition, classification, lengths, fixed points and standard isometries."""
import cmath
import math
from typing import Tuple

from models.errors import PreconditionError
from models.isometry import COMPLEX, REAL, Isometry, IsometryClass
from models.points import (ASYMPTOTIC, DISJOINT, INFINITY, INTERSECTING, BoundaryPoint,
                           GeodesicLine, HPoint, LineSeparation)

# Classification band, relative to max(1, Frobenius norm)
CLASSIFY_EPS = 1e-9


def _field_of(*gs: Isometry) -> str:
    return COMPLEX if any(g.field == COMPLEX for g in gs) else REAL


def _scale(g: Isometry) -> float:
    return max(1.0, math.sqrt(float(g.frobenius_sq)))


def _band(g: Isometry, eps: float) -> float:
    return eps * _scale(g)


def compose(g: Isometry, h: Isometry) -> Isometry:
    """g ∘ h. Orientation-reversing real maps compose by plain matrix product."""
    a1, b1, c1, d1 = g.entries
    a2, b2, c2, d2 = h.entries
    return Isometry.product(
        a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2, c1 * b2 + d1 * d2,
        field=_field_of(g, h), sign=g.orientation * h.orientation,
    )


def inverse(g: Isometry) -> Isometry:
    a, b, c, d = g.entries
    return Isometry.product(d, -b, -c, a, field=g.field, sign=g.orientation)


def conjugate(h: Isometry, g: Isometry) -> Isometry:
    """h g h⁻¹."""
    return compose(compose(h, g), inverse(h))


def power(g: Isometry, n: int) -> Isometry:
    """gⁿ by binary exponentiation; integer matrices stay exact."""
    if n < 0:
        return power(inverse(g), -n)
    result = Isometry.identity(g.field)
    base = g
    while n:
        if n & 1:
            result = compose(result, base)
        base = compose(base, base)
        n >>= 1
    return result


def translation(length: complex) -> Isometry:
    """T_ℓ = diag(e^{ℓ/2}, e^{-ℓ/2}), translating along line(0, ∞) towards ∞.

    A complex ℓ gives a loxodromic of H³ with translation length Re ℓ.
    """
    if isinstance(length, complex) and length.imag != 0:
        e = cmath.exp(length / 2)
        return Isometry.of(e, 0j, 0j, 1 / e, field=COMPLEX)
    e = math.exp(float(length.real if isinstance(length, complex) else length) / 2)
    return Isometry.of(e, 0.0, 0.0, 1 / e)


def rotation(theta: float) -> Isometry:
    """R_θ: counterclockwise rotation of angle θ about i."""
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return Isometry.of(c, s, -s, c)


def classify(g: Isometry, eps: float = CLASSIFY_EPS) -> IsometryClass:
    """
    Classify an isometry.

    Args:
        g: Normalized isometry
        eps: Trace band, scaled by max(1, Frobenius norm)

    Returns:
        IsometryClass tag; the identity gets its own tag
    """
    if g.is_exact:
        if g.orientation == 1 and (g.a, g.b, g.c, g.d) == (1, 0, 0, 1):
            return IsometryClass.IDENTITY
    elif g.is_identity(eps):
        return IsometryClass.IDENTITY

    if g.orientation == -1:
        if compose(g, g).is_identity(eps):
            return IsometryClass.REFLECTION
        return IsometryClass.GLIDE_REFLECTION

    band = _band(g, eps)
    tr = g.trace
    if g.field == REAL:
        t = abs(tr)
        if g.is_exact:
            if t < 2:
                return IsometryClass.ELLIPTIC
            return IsometryClass.PARABOLIC if t == 2 else IsometryClass.HYPERBOLIC
        if t < 2 - band:
            return IsometryClass.ELLIPTIC
        if t <= 2 + band:
            return IsometryClass.PARABOLIC
        return IsometryClass.HYPERBOLIC

    if abs(tr - 2) <= band or abs(tr + 2) <= band:
        return IsometryClass.PARABOLIC
    if abs(cmath.acosh(tr / 2).real) > band:
        return IsometryClass.HYPERBOLIC
    return IsometryClass.ELLIPTIC


def translation_length(g: Isometry, eps: float = CLASSIFY_EPS) -> float:
    """Minimal displacement λ(g).

    tr(T_ℓ) = 2 cosh(ℓ/2) and the trace is a conjugacy invariant, so a real
    hyperbolic g has λ = 2 arccosh(|tr|/2). For PSL(2, ℂ) the same identity
    holds with the complex length, whose real part is λ. Glide reflections
    get half the length of their square.
    """
    kind = classify(g, eps)
    if kind == IsometryClass.GLIDE_REFLECTION:
        return translation_length(compose(g, g), eps) / 2
    if kind != IsometryClass.HYPERBOLIC:
        return 0.0
    if g.field == REAL:
        return 2 * math.acosh(abs(float(g.trace)) / 2)
    return 2 * abs(cmath.acosh(g.trace / 2).real)


def frobenius_excess(g: Isometry) -> float:
    """Frobenius norm² minus 2, computed without cancellation.

    For det = 1: |a − d̄|² + |b + c̄|²; for det = −1: (a + d)² + (b − c)².
    """
    a, b, c, d = g.entries
    if g.is_exact:
        if g.orientation == 1:
            return float((a - d) ** 2 + (b + c) ** 2)
        return float((a + d) ** 2 + (b - c) ** 2)
    if g.orientation == -1:
        return (a + d) ** 2 + (b - c) ** 2
    if g.field == REAL:
        return (a - d) ** 2 + (b + c) ** 2
    return abs(a - d.conjugate()) ** 2 + abs(b + c.conjugate()) ** 2


def cartan_mu(g: Isometry) -> float:
    """μ(g) = d(p₀, g·p₀) = arccosh(Frobenius²/2), in the cancellation-free form
    2 arcsinh(√(Frobenius² − 2)/2)."""
    return 2 * math.asinh(math.sqrt(max(0.0, frobenius_excess(g))) / 2)


def _quadratic_roots(a, b, c, d):
    """Roots of c z² + (d − a) z − b = 0 for c ≠ 0, avoiding cancellation."""
    big_b = d - a
    disc = big_b * big_b + 4 * b * c
    if isinstance(disc, complex) or disc < 0:
        root = cmath.sqrt(disc)
    else:
        root = math.sqrt(disc)
    if abs(big_b + root) < abs(big_b - root):
        root = -root
    q = -(big_b + root) / 2
    if q == 0:
        return [-big_b / (2 * c)]
    return [q / c, -b / q]


def fixed_boundary_points(g: Isometry, eps: float = CLASSIFY_EPS) -> Tuple[BoundaryPoint, ...]:
    """Ideal fixed points: none (identity, elliptic of H²), one (parabolic) or two."""
    kind = classify(g, eps)
    if kind == IsometryClass.IDENTITY:
        return ()
    if kind == IsometryClass.ELLIPTIC and g.field == REAL:
        return ()

    a, b, c, d = g.entries
    band = _band(g, eps)
    if kind == IsometryClass.PARABOLIC:
        if abs(c) <= band:
            return (INFINITY,)
        return (BoundaryPoint((a - d) / (2 * c)),)
    if abs(c) <= band:
        return (INFINITY, BoundaryPoint(b / (d - a)))
    z1, z2 = _quadratic_roots(a, b, c, d)
    return (BoundaryPoint(z1), BoundaryPoint(z2))


def fixed_point(g: Isometry, eps: float = CLASSIFY_EPS) -> HPoint:
    """Centre of an elliptic isometry of H²."""
    if g.field != REAL or classify(g, eps) != IsometryClass.ELLIPTIC:
        raise PreconditionError("fixed_point() needs an elliptic isometry of H²")
    a, b, c, d = (float(x) for x in g.entries)
    roots = _quadratic_roots(a, b, c, d)
    z = max((complex(r) for r in roots), key=lambda w: w.imag)
    return HPoint.plane(z.real, z.imag)


def _derivative_modulus(g: Isometry, xi: BoundaryPoint) -> float:
    a, b, c, d = g.entries
    if xi.is_infinite:
        # near ∞, g acts like z -> (a/d) z when c = 0
        return abs(a / d)
    return 1.0 / abs(c * xi.x + d) ** 2


def axis(g: Isometry, eps: float = CLASSIFY_EPS) -> GeodesicLine:
    """Translation axis, oriented from the repelling to the attracting fixed point."""
    kind = classify(g, eps)
    if kind not in (IsometryClass.HYPERBOLIC, IsometryClass.GLIDE_REFLECTION):
        raise PreconditionError(f"axis() needs a hyperbolic isometry, got {kind.value}")
    p, q = fixed_boundary_points(g, eps)
    if q.is_infinite:
        p, q = q, p
    # p may be ∞; q is finite
    attracting_q = _derivative_modulus(g, q) < 1.0
    return GeodesicLine(p, q) if attracting_q else GeodesicLine(q, p)


def apply(g: Isometry, p: HPoint) -> HPoint:
    """Möbius action on a point of H² or H³."""
    if p.dim == 2:
        if g.field != REAL:
            raise PreconditionError("A complex isometry does not preserve the half-plane; lift the point to H³")
        a, b, c, d = (float(x) for x in g.entries)
        z = p.z if g.orientation == 1 else p.z.conjugate()
        den = c * z + d
        w = (a * z + b) / den
        return HPoint.plane(w.real, p.v / abs(den) ** 2)

    alpha, beta, gamma, delta = (complex(x) for x in g.entries)
    a = p.a
    if g.orientation == -1:
        # i·M has det 1 and acts on the mirrored point
        alpha, beta, gamma, delta = (1j * x for x in (alpha, beta, gamma, delta))
        a = a.conjugate()
    b = p.b
    lower = gamma * a + delta
    den = abs(lower) ** 2 + abs(gamma) ** 2 * b * b
    new_a = ((alpha * a + beta) * lower.conjugate() + alpha * gamma.conjugate() * b * b) / den
    return HPoint.space(new_a, b / den)


def apply_boundary(g: Isometry, xi: BoundaryPoint) -> BoundaryPoint:
    """Möbius action on ideal points, ∞ handled through the c = 0 case."""
    a, b, c, d = g.entries
    if xi.is_infinite:
        if c == 0 or abs(c) <= 1e-15 * _scale(g):
            return INFINITY
        return BoundaryPoint(a / c)
    x = xi.x
    if g.orientation == -1 and isinstance(x, complex):
        x = x.conjugate()
    den = c * x + d
    if den == 0 or abs(den) <= 1e-15 * max(1.0, abs(c * x), abs(d)):
        return INFINITY
    return BoundaryPoint((a * x + b) / den)


def frame(line: GeodesicLine) -> Isometry:
    """Unit-determinant map sending line(0, ∞) onto ``line``, 0 to start and ∞ to end."""
    s, e = line.start, line.end
    field = REAL if line.is_real else COMPLEX
    if s.is_infinite:
        return Isometry.of(e.x, -1, 1, 0, field=field)
    if e.is_infinite:
        return Isometry.of(1, s.x, 0, 1, field=field)
    k = e.x - s.x
    return Isometry.of(e.x, s.x / k, 1, 1 / k, field=field)


def point_frame(p: HPoint) -> Isometry:
    """Affine map u + v·z taking i to p (half-plane)."""
    if p.dim != 2:
        raise PreconditionError("point_frame is defined for half-plane points")
    r = math.sqrt(p.v)
    return Isometry.of(r, p.u / r, 0.0, 1 / r)


def translation_along(line: GeodesicLine, length: complex) -> Isometry:
    """Translation by ℓ along ``line`` in its direction of orientation."""
    h = frame(line)
    return conjugate(h, translation(length))


def reflection_in(line: GeodesicLine) -> Isometry:
    """Reflection of H² in ``line`` (determinant −1)."""
    if not line.is_real:
        raise PreconditionError("reflection_in needs a geodesic of H² (real endpoints)")
    h = frame(line)
    return conjugate(h, Isometry.of(-1, 0, 0, 1))


def rotation_about(p: HPoint, theta: float) -> Isometry:
    """Counterclockwise rotation of angle θ about a point of H²."""
    return conjugate(point_frame(p), rotation(theta))


def common_perpendicular(first: GeodesicLine, second: GeodesicLine) -> LineSeparation:
    """
    Distance between two geodesics and their common perpendicular.

    Maps ``first`` to line(0, ∞); ``second`` becomes line(x, y). The lines are
    disjoint when x/y is real positive (H²), the perpendicular being the half
    circle through ±√(xy), and tanh²(Δ/2) = min(|x|, |y|)/max(|x|, |y|).
    For lines of H³ the complex distance δ = 2 artanh(√(x/y)) is used and
    Δ = |Re δ|.

    Args:
        first: First oriented geodesic
        second: Second oriented geodesic

    Returns:
        LineSeparation with kind disjoint, intersecting or asymptotic
    """
    h = frame(first)
    h_inv = inverse(h)
    x = apply_boundary(h_inv, second.start)
    y = apply_boundary(h_inv, second.end)

    def touches(xi: BoundaryPoint) -> bool:
        return xi.is_infinite or abs(xi.x) <= 1e-14

    if touches(x) or touches(y):
        return LineSeparation(0.0, ASYMPTOTIC)

    xv, yv = x.x, y.x
    if first.is_real and second.is_real:
        if xv * yv < 0:
            return LineSeparation(0.0, INTERSECTING)
        lo, hi = sorted((abs(xv), abs(yv)))
        distance = 2 * math.atanh(math.sqrt(lo / hi))
        r = math.sqrt(xv * yv)
        sign = 1.0 if xv > 0 else -1.0
        normal = GeodesicLine.between(-sign * r, sign * r)
    else:
        q = complex(xv) / complex(yv)
        if abs(q) > 1:
            q = 1 / q
        distance = abs((2 * cmath.atanh(cmath.sqrt(q))).real)
        if distance <= 1e-14:
            return LineSeparation(0.0, INTERSECTING)
        r = cmath.sqrt(complex(xv) * complex(yv))
        # orient towards the second line: the endpoint on its side of the axis
        mid = (complex(xv) + complex(yv)) / 2
        sign = 1.0 if (mid * r.conjugate()).real > 0 else -1.0
        normal = GeodesicLine.between(-sign * r, sign * r)

    perpendicular = GeodesicLine(apply_boundary(h, normal.start), apply_boundary(h, normal.end))
    return LineSeparation(distance, DISJOINT, perpendicular)


def shortest_translation_between(first: GeodesicLine, second: GeodesicLine) -> Isometry:
    """Translation along the common perpendicular taking ``first`` onto ``second``."""
    separation = common_perpendicular(first, second)
    if separation.kind != DISJOINT:
        raise PreconditionError(f"Lines are {separation.kind}; no common perpendicular")
    if not (first.is_real and second.is_real):
        raise PreconditionError("shortest_translation_between is defined for geodesics of H²")
    return translation_along(separation.perpendicular, separation.distance)
