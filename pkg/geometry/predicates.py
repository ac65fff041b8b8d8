"""Orientation predicates: a floating-point filter with an exact rational fallback."""
import math
from fractions import Fraction
from typing import Sequence

Point3 = Sequence[float]
Point2 = Sequence[float]

# Floats whose determinant magnitude falls below this fraction of the permanent are re-evaluated exactly
PROMOTION = 1e-10


def _sign(x) -> int:
    return int(x > 0) - int(x < 0)


def _det3(a, b, c, d):
    adx, ady, adz = a[0] - d[0], a[1] - d[1], a[2] - d[2]
    bdx, bdy, bdz = b[0] - d[0], b[1] - d[1], b[2] - d[2]
    cdx, cdy, cdz = c[0] - d[0], c[1] - d[1], c[2] - d[2]
    det = (adx * (bdy * cdz - bdz * cdy)
           + bdx * (cdy * adz - cdz * ady)
           + cdx * (ady * bdz - adz * bdy))
    permanent = (abs(adx) * (abs(bdy * cdz) + abs(bdz * cdy))
                 + abs(bdx) * (abs(cdy * adz) + abs(cdz * ady))
                 + abs(cdx) * (abs(ady * bdz) + abs(adz * bdy)))
    return det, permanent


def _edge_product(a, b, c, d) -> float:
    return math.prod(math.dist(p[:3], d[:3]) for p in (a, b, c))


def orient3d(a: Point3, b: Point3, c: Point3, d: Point3, promotion: float = PROMOTION,
             tolerance: float = 0.0) -> int:
    """Sign of ((b − a) × (c − a)) · (d − a).

    Positive when d lies on the side the normal of the counterclockwise
    triangle abc points to. Zero for exactly coplanar inputs, and also when
    |det| is at most ``tolerance`` times |a − d| |b − d| |c − d|.
    """
    det, permanent = _det3(a, b, c, d)
    if tolerance > 0 and abs(det) <= tolerance * _edge_product(a, b, c, d):
        return 0
    # det3(a, b, c, d) is −((b − a) × (c − a)) · (d − a)
    if abs(det) > promotion * permanent:
        return -_sign(det)
    exact, _ = _det3(*[[Fraction(float(x)) for x in p[:3]] for p in (a, b, c, d)])
    return -_sign(exact)


def orient2d(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of (b − a) × (c − a); positive for a counterclockwise turn."""
    det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    permanent = abs((b[0] - a[0]) * (c[1] - a[1])) + abs((b[1] - a[1]) * (c[0] - a[0]))
    if abs(det) > PROMOTION * permanent:
        return _sign(det)
    a, b, c = ([Fraction(float(x)) for x in p[:2]] for p in (a, b, c))
    return _sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))
