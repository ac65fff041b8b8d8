"""Delaunay triangulations as the origin-facing hull of the lifted sites."""
import logging
import math
from collections import Counter
from typing import List, Optional, Sequence

import numpy as np

from geometry import hyperboloid
from geometry.hgeom import dist
from geometry.hull3d import convex_hull
from geometry.predicates import orient2d, orient3d
from interfaces.i_triangulator import ITriangulator
from models.errors import CheckFailedError, DegenerateInputError, PreconditionError
from models.points import HPoint
from models.settings import Settings
from models.triangulation import (BALL, HOROBALL, HYPERBALL, Certificate, CertificateReport,
                                  PointSet2, Triangle, Triangulation)

logger = logging.getLogger(__name__)

ORIGIN = (0.0, 0.0, 0.0)
# |⟨m, m⟩| below this multiple of |m|² counts as lightlike
LIGHTLIKE = 1e-12


def _plane(lifted: List[np.ndarray], triangle: Triangle):
    a, b, c = (lifted[i] for i in triangle)
    normal = np.cross(b - a, c - a)
    return normal, float(np.dot(normal, a))


class DelaunayTriangulator(ITriangulator):
    """Sites lift to the hyperboloid sheet; the hull facets that face the origin
    project to the Delaunay triangles, and each facet's plane cuts the sheet
    in the circle, horocycle or hypercycle through its three sites.
    """

    def __init__(self, settings: Settings):
        self.settings = settings

    def delaunay(self, sites: PointSet2) -> Triangulation:
        """
        Delaunay triangulation of sites in H².

        Args:
            sites: At least three pairwise separated sites

        Returns:
            Triangulation with counterclockwise triangles, sorted

        Raises:
            DegenerateInputError: Four sites on one circle, horocycle or
                hypercycle, or three on one geodesic bounding a hull facet
        """
        if not sites.general_position:
            raise PreconditionError("Sites are flagged as not in general position")
        sites.check_separation(dist)
        lifted = [hyperboloid.to_coords(p) for p in sites.points]
        if len(sites) == 3:
            triangles = [self._positive(lifted, (0, 1, 2))]
        else:
            promotion, tolerance = self.settings.hull_promotion, self.settings.cocircular_tolerance
            faces = convex_hull(lifted, promotion, tolerance)
            self._check_neighbours(lifted, faces)
            triangles = []
            for face in faces:
                side = orient3d(*(lifted[i] for i in face), ORIGIN, promotion, tolerance)
                if side == 0:
                    raise DegenerateInputError(f"Sites {face} lie on one geodesic", face)
                if side > 0:
                    triangles.append(self._positive(lifted, face))

        triangles.sort()
        triangulation = Triangulation(tuple(sites.points), triangles, self._boundary(triangles))
        if triangulation.euler_characteristic != 1:
            raise CheckFailedError(f"Euler characteristic {triangulation.euler_characteristic} != 1")
        logger.info("Delaunay triangulation of %d sites: %d triangles", len(sites), len(triangles))
        return triangulation

    def _check_neighbours(self, lifted: List[np.ndarray], faces) -> None:
        """Raise on two hull facets across an edge whose four sites share a plane."""
        opposite = {}
        for face in faces:
            a, b, c = face
            for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
                opposite[(u, v)] = (face, w)
        for (u, v), (face, _) in opposite.items():
            if (v, u) not in opposite or u > v:
                continue
            apex = opposite[(v, u)][1]
            side = orient3d(*(lifted[i] for i in face), lifted[apex],
                            self.settings.hull_promotion, self.settings.cocircular_tolerance)
            if side == 0:
                quadruple = tuple(sorted((*face, apex)))
                raise DegenerateInputError(f"Sites {quadruple} lie on one circle, horocycle or hypercycle",
                                           quadruple)

    @staticmethod
    def _positive(lifted: List[np.ndarray], face) -> Triangle:
        """Rotate to the smallest index first and orient counterclockwise in the Klein chart."""
        a, b, c = (hyperboloid.klein_coords(lifted[i]) for i in face)
        i, j, k = face
        if orient2d(a, b, c) < 0:
            j, k = k, j
        rotations = [(i, j, k), (j, k, i), (k, i, j)]
        return min(rotations)

    @staticmethod
    def _boundary(triangles: List[Triangle]):
        directed = Counter()
        for a, b, c in triangles:
            for u, v in ((a, b), (b, c), (c, a)):
                directed[(u, v)] += 1
        return sorted(edge for edge in directed if (edge[1], edge[0]) not in directed)

    def empty_ball_certificate(self, triangulation: Triangulation,
                               others: Optional[Sequence[HPoint]] = None) -> CertificateReport:
        """
        Check that each triangle's circle, horocycle or hypercycle has no site inside.

        Args:
            triangulation: Result of ``delaunay``
            others: Extra points to test against every triangle

        Returns:
            One certificate per triangle, with the smallest margin
        """
        points = list(triangulation.vertices) + list(others or [])
        lifted = [hyperboloid.to_coords(p) for p in points]
        slack = self.settings.certificate_slack
        certificates = []
        for triangle in triangulation.triangles:
            normal, offset = _plane(lifted, triangle)
            # face the origin: the origin side is n·x > offset
            if offset > 0:
                normal, offset = -normal, -offset
            length = float(np.linalg.norm(normal))
            m = np.array([normal[0], normal[1], -normal[2]])
            form = hyperboloid.lorentz_inner(m, m)
            if abs(form) <= LIGHTLIKE * length ** 2:
                kind = HOROBALL
            else:
                kind = BALL if form < 0 else HYPERBALL
            margins = [(offset - float(np.dot(normal, x))) / length
                       for index, x in enumerate(lifted) if index not in triangle]
            margin = min(margins, default=math.inf)
            certificates.append(Certificate(triangle, kind, tuple(float(x) for x in m),
                                            offset, margin, margin >= -slack))
        min_margin = min((c.margin for c in certificates), default=math.inf)
        return CertificateReport(certificates, all(c.empty for c in certificates), min_margin,
                                 triangulation.euler_characteristic)
