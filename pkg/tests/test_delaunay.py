import math
from itertools import combinations

import numpy as np
import pytest

from conftest import random_point, random_sl2
from geometry import hyperboloid
from geometry.hgeom import fermi_frame, fermi_to_point, geodesic_point
from geometry.hull3d import convex_hull
from geometry.moebius import apply
from geometry.predicates import orient2d, orient3d
from models.errors import DegenerateInputError, HyperstretchError, PreconditionError
from models.points import BASEPOINT_2, GeodesicLine, HPoint
from models.triangulation import BALL, HOROBALL, HYPERBALL, PointSet2

COCIRCULAR = [HPoint.plane(0.0, 0.5), HPoint.plane(0.0, 2.0), HPoint.plane(0.75, 1.25), HPoint.plane(-0.75, 1.25)]


def _equilateral(centre=BASEPOINT_2, radius=1.2, phase=0.3):
    return [geodesic_point(centre, phase + 2 * math.pi * k / 3, radius) for k in range(3)]


def _oracle(points):
    """Triples whose lifted plane keeps every other site on the side away from the origin."""
    lifted = np.array([hyperboloid.to_coords(p) for p in points])
    found = set()
    for triple in combinations(range(len(points)), 3):
        a, b, c = lifted[list(triple)]
        normal = np.cross(b - a, c - a)
        origin_side = float(np.dot(normal, -a))
        others = [i for i in range(len(points)) if i not in triple]
        if all(float(np.dot(normal, lifted[i] - a)) * origin_side < 0 for i in others):
            found.add(triple)
    return found


def _as_sets(triangles):
    return {tuple(sorted(t)) for t in triangles}


def _klein(p):
    return hyperboloid.klein_coords(hyperboloid.to_coords(p))


class TestPredicates:

    def test_orient2d(self):
        assert orient2d((0, 0), (1, 0), (0, 1)) == 1
        assert orient2d((0, 0), (0, 1), (1, 0)) == -1
        assert orient2d((0.1, 0.1), (0.2, 0.2), (0.3, 0.3)) == 0

    def test_orient3d(self):
        a, b, c = (0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0)
        assert orient3d(a, b, c, (0.2, 0.3, 1.0)) == 1
        assert orient3d(a, b, c, (0.2, 0.3, -1.0)) == -1
        assert orient3d(a, b, c, (0.1, 0.2, 0.0)) == 0

    def test_tiny_offsets_keep_their_sign(self):
        a, b, c = (0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0)
        assert orient3d(a, b, c, (0.1, 0.2, 1e-300)) == 1
        assert orient3d(a, b, c, (0.1, 0.2, -1e-300)) == -1

    def test_swapping_vertices_flips_sign(self):
        a, b, c = (0.1, 0.2, 0.3), (0.4, 0.5, 0.6), (0.7, 0.8, 0.9)
        d = (0.5, -2.0, 3.0)
        assert orient3d(a, b, c, d) == -orient3d(a, c, b, d)

    def test_numpy_coordinates(self):
        a, b, c = np.zeros(3), np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])
        assert orient3d(a, b, c, np.array([0.2, 0.3, 1.0])) == 1
        assert orient3d(a, b, c, np.array([0.1, 0.2, 0.0])) == 0
        assert orient2d(a[:2], b[:2], c[:2]) == 1

    def test_tolerance_band(self):
        a, b, c = (0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0)
        d = (0.3, 0.3, 1e-13)
        assert orient3d(a, b, c, d) == 1
        assert orient3d(a, b, c, d, tolerance=1e-10) == 0
        assert orient3d(a, b, c, (0.3, 0.3, 1e-6), tolerance=1e-10) == 1


class TestConvexHull:

    def test_sphere_points(self, rng):
        points = rng.normal(size=(30, 3))
        points /= np.linalg.norm(points, axis=1)[:, None]
        faces = convex_hull(list(points))
        assert len(faces) == 2 * len(points) - 4
        centre = points.mean(axis=0)
        for face in faces:
            assert orient3d(*(points[i] for i in face), centre) < 0

    def test_interior_point_rejected(self):
        points = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (0.1, 0.1, 0.1)]
        with pytest.raises(DegenerateInputError) as excinfo:
            convex_hull(points)
        assert excinfo.value.indices == (4,)

    def test_too_few_points(self):
        with pytest.raises(DegenerateInputError):
            convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0)])


class TestDelaunay:

    def test_three_sites(self, triangulator):
        sites = [HPoint.plane(0.0, 1.0), HPoint.plane(1.0, 1.0), HPoint.plane(0.0, 2.0)]
        result = triangulator.delaunay(PointSet2(sites))
        assert _as_sets(result.triangles) == {(0, 1, 2)}
        a, b, c = result.triangles[0]
        assert orient2d(_klein(sites[a]), _klein(sites[b]), _klein(sites[c])) == 1
        assert len(result.boundary) == 3

    def test_one_interior_site(self, triangulator):
        sites = _equilateral() + [BASEPOINT_2]
        result = triangulator.delaunay(PointSet2(sites))
        assert _as_sets(result.triangles) == {(0, 1, 3), (0, 2, 3), (1, 2, 3)}
        assert sorted(tuple(sorted(e)) for e in result.boundary) == [(0, 1), (0, 2), (1, 2)]

    def test_against_triple_enumeration(self, triangulator, rng):
        for _ in range(20):
            sites = [random_point(rng, 1.0) for _ in range(int(rng.integers(4, 13)))]
            result = triangulator.delaunay(PointSet2(sites))
            assert _as_sets(result.triangles) == _oracle(sites)

    def test_triangles_are_counterclockwise(self, triangulator, rng):
        sites = [random_point(rng) for _ in range(15)]
        result = triangulator.delaunay(PointSet2(sites))
        for a, b, c in result.triangles:
            assert a == min(a, b, c)
            assert orient2d(_klein(sites[a]), _klein(sites[b]), _klein(sites[c])) == 1

    def test_equivariance(self, triangulator, rng):
        for _ in range(20):
            g = random_sl2(rng)
            sites = [random_point(rng, 1.0) for _ in range(10)]
            first = triangulator.delaunay(PointSet2(sites))
            moved = triangulator.delaunay(PointSet2([apply(g, p) for p in sites]))
            assert _as_sets(first.triangles) == _as_sets(moved.triangles)

    def test_euler_relation_and_edge_use(self, triangulator, rng):
        for _ in range(10):
            sites = [random_point(rng) for _ in range(int(rng.integers(5, 30)))]
            result = triangulator.delaunay(PointSet2(sites))
            assert result.euler_characteristic == 1
            counts = result.edge_counts()
            boundary = {tuple(sorted(e)) for e in result.boundary}
            for edge, count in counts.items():
                assert count == (1 if edge in boundary else 2)

    def test_cocircular_sites_rejected(self, triangulator):
        with pytest.raises(DegenerateInputError) as excinfo:
            triangulator.delaunay(PointSet2(COCIRCULAR))
        assert excinfo.value.indices == (0, 1, 2, 3)

    def test_near_cocircular_sites_rejected(self, triangulator):
        sites = [geodesic_point(BASEPOINT_2, theta, 1.0) for theta in (0.1, 1.7, 3.0, 4.5)]
        with pytest.raises(DegenerateInputError) as excinfo:
            triangulator.delaunay(PointSet2(sites))
        assert excinfo.value.indices == (0, 1, 2, 3)

    def test_circle_with_interior_site_rejected(self, triangulator):
        sites = [geodesic_point(BASEPOINT_2, 0.4 + 2 * math.pi * k / 5, 1.3) for k in range(5)]
        with pytest.raises(DegenerateInputError) as excinfo:
            triangulator.delaunay(PointSet2(sites + [HPoint.plane(0.05, 0.95)]))
        assert len(excinfo.value.indices) == 4
        assert 5 not in excinfo.value.indices

    def test_four_sites(self, triangulator):
        sites = [HPoint.plane(0.0, 1.0), HPoint.plane(1.3, 0.7), HPoint.plane(-0.9, 2.1), HPoint.plane(0.2, 3.3)]
        result = triangulator.delaunay(PointSet2(sites))
        assert _as_sets(result.triangles) == _oracle(sites)
        assert result.euler_characteristic == 1

    def test_coincident_sites_rejected(self, triangulator):
        p = HPoint.plane(0.3, 0.7)
        with pytest.raises(DegenerateInputError):
            triangulator.delaunay(PointSet2([p, HPoint.plane(1.0, 1.0), p]))

    def test_flagged_sets_rejected(self, triangulator):
        with pytest.raises(PreconditionError):
            triangulator.delaunay(PointSet2(_equilateral(), general_position=False))

    def test_too_few_sites(self):
        with pytest.raises(HyperstretchError):
            PointSet2([BASEPOINT_2, HPoint.plane(1.0, 1.0)])


class TestCertificates:

    def test_circle(self, triangulator):
        triangulation = triangulator.delaunay(PointSet2(_equilateral()))
        report = triangulator.empty_ball_certificate(triangulation)
        (certificate,) = report.certificates
        assert certificate.kind == BALL
        assert report.all_empty
        assert report.euler_characteristic == 1

    def test_horocycle(self, triangulator):
        sites = [HPoint.plane(-1.0, 1.0), HPoint.plane(0.0, 1.0), HPoint.plane(1.0, 1.0)]
        report = triangulator.empty_ball_certificate(triangulator.delaunay(PointSet2(sites)))
        assert report.certificates[0].kind == HOROBALL

    def test_hypercycle(self, triangulator):
        frame = fermi_frame(GeodesicLine.between(0.0, None), BASEPOINT_2)
        sites = [fermi_to_point(frame, h, v) for h, v in ((0.0, 0.0), (3.0, 0.01), (6.0, 0.0))]
        report = triangulator.empty_ball_certificate(triangulator.delaunay(PointSet2(sites)))
        assert report.certificates[0].kind == HYPERBALL

    def test_foreign_point_inside(self, triangulator):
        triangulation = triangulator.delaunay(PointSet2(_equilateral()))
        report = triangulator.empty_ball_certificate(triangulation, [BASEPOINT_2])
        assert not report.all_empty
        assert report.min_margin < 0

    def test_random_triangulations_are_certified(self, triangulator, rng):
        for _ in range(10):
            sites = [random_point(rng) for _ in range(int(rng.integers(4, 25)))]
            triangulation = triangulator.delaunay(PointSet2(sites))
            report = triangulator.empty_ball_certificate(triangulation)
            assert report.all_empty
            assert len(report.certificates) == len(triangulation.triangles)
            assert all(c.kind in (BALL, HOROBALL, HYPERBALL) for c in report.certificates)
