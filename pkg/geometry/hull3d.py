"""Incremental convex hull in R³ for points in strictly convex position."""
import logging
from typing import Dict, List, Sequence, Set, Tuple

from geometry.predicates import PROMOTION, orient3d
from models.errors import DegenerateInputError

logger = logging.getLogger(__name__)

Face = Tuple[int, int, int]


def _outward(points: Sequence, a: int, b: int, c: int, inside: int,
             promotion: float, tolerance: float) -> Face:
    side = orient3d(points[a], points[b], points[c], points[inside], promotion, tolerance)
    if side == 0:
        raise DegenerateInputError(f"Points {a}, {b}, {c}, {inside} are coplanar", (a, b, c, inside))
    return (a, c, b) if side > 0 else (a, b, c)


def convex_hull(points: Sequence, promotion: float = PROMOTION, tolerance: float = 0.0) -> List[Face]:
    """Triangular faces of the hull, each oriented with its normal pointing outwards.

    Every input point must be a hull vertex (as for points on a hyperboloid
    sheet). A quadruple met along the way that is coplanar, exactly or
    within ``tolerance`` relative to its permanent, or a point swallowed by
    the hull, raises DegenerateInputError.
    """
    n = len(points)
    if n < 4:
        raise DegenerateInputError(f"A 3-D hull needs 4 points, got {n}", tuple(range(n)))

    faces: Set[Face] = {
        _outward(points, 0, 1, 2, 3, promotion, tolerance),
        _outward(points, 0, 1, 3, 2, promotion, tolerance),
        _outward(points, 0, 2, 3, 1, promotion, tolerance),
        _outward(points, 1, 2, 3, 0, promotion, tolerance),
    }
    for p in range(4, n):
        visible: List[Face] = []
        for face in faces:
            side = orient3d(*(points[i] for i in face), points[p], promotion, tolerance)
            if side == 0:
                raise DegenerateInputError(f"Points {face} and {p} are coplanar", (*face, p))
            if side > 0:
                visible.append(face)
        if not visible:
            raise DegenerateInputError(f"Point {p} lies inside the hull of the others", (p,))

        directed: Dict[Tuple[int, int], Face] = {}
        for a, b, c in visible:
            for edge in ((a, b), (b, c), (c, a)):
                directed[edge] = (a, b, c)
        horizon = [edge for edge in directed if (edge[1], edge[0]) not in directed]
        faces.difference_update(visible)
        faces.update((a, b, p) for a, b in horizon)

    logger.debug("Hull of %d points has %d faces", n, len(faces))
    return sorted(faces)
