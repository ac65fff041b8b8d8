"""Interface for finite hyperbolic Delaunay triangulations."""
from abc import ABC, abstractmethod
from typing import Optional, Sequence

from models.points import HPoint
from models.triangulation import CertificateReport, PointSet2, Triangulation


class ITriangulator(ABC):
    """Protocol for Delaunay triangulations of finite point sets in H²."""

    @abstractmethod
    def delaunay(self, sites: PointSet2) -> Triangulation:
        """
        Triangulate the convex hull of the sites.

        Args:
            sites: Distinct points in general position

        Returns:
            Positively oriented triangles whose circumscribed disks,
            horodisks or hyperdisks contain no other site
        """
        pass

    @abstractmethod
    def empty_ball_certificate(self, triangulation: Triangulation,
                               others: Optional[Sequence[HPoint]] = None) -> CertificateReport:
        """
        Classify and check the circumscribed region of every triangle.

        Args:
            triangulation: Output of ``delaunay``
            others: Extra points tested against every region besides the vertices

        Returns:
            Per-triangle certificates and the Euler characteristic
        """
        pass
