import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_hyperbolic, random_sl2
from geometry.hgeom import dist, project_to_line
from geometry.moebius import (apply, apply_boundary, axis, cartan_mu, classify, compose, conjugate,
                              fixed_boundary_points, fixed_point, frobenius_excess, inverse, power,
                              reflection_in, rotation, rotation_about, shortest_translation_between,
                              translation, translation_along, translation_length)
from models.errors import DegenerateIsometryError, PreconditionError
from models.isometry import Isometry, IsometryClass
from models.points import BASEPOINT_2, BASEPOINT_3, GeodesicLine, HPoint

PARABOLIC = Isometry.of(1, 3, 0, 1)
OMEGA_1 = compose(Isometry.of(1, 3, 0, 1), Isometry.of(1, 0, -3, 1))


class TestIsometry:

    def test_normalizes_determinant(self):
        g = Isometry.of(2.0, 0.0, 0.0, 8.0)
        assert g.a * g.d - g.b * g.c == pytest.approx(1.0, abs=1e-12)
        assert g.det == 1
        assert g.a == pytest.approx(0.5) and g.d == pytest.approx(2.0)

    def test_canonical_sign(self):
        assert Isometry.of(-1, -3, 0, -1) == PARABOLIC
        assert Isometry.of(-2.0, 0.0, 0.0, -0.5).a > 0

    def test_integer_matrices_stay_exact(self):
        g = power(PARABOLIC, 5)
        assert g.is_exact
        assert g.entries == (1, 15, 0, 1)

    def test_degenerate_matrix_rejected(self):
        with pytest.raises(DegenerateIsometryError):
            Isometry.of(1, 2, 2, 4)
        with pytest.raises(DegenerateIsometryError):
            Isometry.of(1e20, 2e20, 0.5e20, 1e20)

    def test_degeneracy_check_is_scale_free(self):
        big = Isometry.of(3e15, 1e15, 2e15, 1e15)
        assert big.a * big.d - big.b * big.c == pytest.approx(1.0, abs=1e-9)
        assert Isometry.of(3e-15, 1e-15, 2e-15, 1e-15) == big

    def test_long_translations(self):
        for length in (40.0, 80.0, 200.0):
            g = translation(length)
            assert translation_length(g) == pytest.approx(length, rel=1e-12)
            assert cartan_mu(g) == pytest.approx(length, rel=1e-12)

    def test_deep_powers_keep_determinant(self):
        g = power(translation(1.0), 64)
        assert g.det == 1
        assert cartan_mu(g) == pytest.approx(64.0, rel=1e-12)
        h = compose(rotation(0.3), translation(1.0))
        assert cartan_mu(power(h, 64)) / 64 == pytest.approx(translation_length(h), abs=0.1)

    def test_orientation_survives_long_products(self):
        r = reflection_in(GeodesicLine.between(-1.0, 1.0))
        g = compose(translation(50.0), r)
        assert g.orientation == -1
        assert compose(g, g).orientation == 1
        assert inverse(g).orientation == -1

    def test_compose_with_inverse_is_identity(self, rng):
        for _ in range(100):
            g = random_sl2(rng)
            assert compose(g, inverse(g)).is_identity(1e-9)

    def test_hash_follows_canonical_form(self):
        assert hash(Isometry.of(1.0, 3.0, 0.0, 1.0)) == hash(Isometry.of(-2.0, -6.0, 0.0, -2.0))


class TestClassify:

    def test_translation_is_hyperbolic(self):
        assert classify(translation(1.0)) == IsometryClass.HYPERBOLIC

    def test_unipotent_is_parabolic(self):
        assert classify(PARABOLIC) == IsometryClass.PARABOLIC

    def test_rotation_is_elliptic(self):
        assert classify(rotation(math.pi / 3)) == IsometryClass.ELLIPTIC

    def test_identity_has_its_own_tag(self):
        assert classify(Isometry.identity()) == IsometryClass.IDENTITY
        assert classify(compose(rotation(0.7), rotation(-0.7))) == IsometryClass.IDENTITY

    def test_reflection_and_glide(self):
        mirror = reflection_in(GeodesicLine.between(0.0, None))
        assert classify(mirror) == IsometryClass.REFLECTION
        glide = compose(mirror, translation(1.0))
        assert classify(glide) == IsometryClass.GLIDE_REFLECTION
        assert translation_length(glide) == pytest.approx(1.0, abs=1e-12)

    def test_complex_loxodromic(self):
        g = translation(1.0 + 0.5j)
        assert classify(g) == IsometryClass.HYPERBOLIC
        assert translation_length(g) == pytest.approx(1.0, abs=1e-12)

    def test_complex_parabolic_and_elliptic(self):
        assert classify(Isometry.of(1 + 0j, 1j, 0j, 1 + 0j)) == IsometryClass.PARABOLIC
        assert classify(translation(0.8j)) == IsometryClass.ELLIPTIC

    def test_invariant_under_conjugation(self, rng):
        for _ in range(1000):
            g, h = random_sl2(rng), random_sl2(rng)
            if abs(abs(float(g.trace)) - 2) < 1e-3:
                continue
            assert classify(conjugate(h, g)) == classify(g)


class TestTranslationLength:

    def test_translation(self):
        assert translation_length(translation(2.5)) == pytest.approx(2.5, abs=1e-12)

    def test_parabolic_is_zero(self):
        assert translation_length(PARABOLIC) == 0.0

    def test_omega_one(self):
        assert abs(OMEGA_1.trace) == 7
        assert translation_length(OMEGA_1) == pytest.approx(2 * math.acosh(3.5), abs=1e-12)

    def test_conjugation_invariance(self, rng):
        for _ in range(1000):
            g, h = random_hyperbolic(rng), random_sl2(rng, 1.5)
            assert translation_length(conjugate(h, g)) == pytest.approx(translation_length(g), abs=1e-9)

    def test_bounded_by_cartan_projection(self, rng):
        for _ in range(1000):
            g = random_sl2(rng)
            assert translation_length(g) <= cartan_mu(g) + 1e-12

    def test_power_growth(self, rng):
        for _ in range(200):
            g = random_hyperbolic(rng, 0.5, 2.0)
            offset = dist(BASEPOINT_2, project_to_line(BASEPOINT_2, axis(g)))
            gap = cartan_mu(power(g, 64)) / 64 - translation_length(g)
            assert -1e-9 <= gap <= (2 * offset + 1e-6) / 64


class TestCartanProjection:

    def test_examples(self):
        assert cartan_mu(Isometry.identity()) == 0.0
        assert cartan_mu(translation(1.7)) == pytest.approx(1.7, abs=1e-12)
        assert cartan_mu(PARABOLIC) == pytest.approx(math.acosh(5.5), abs=1e-12)
        assert cartan_mu(PARABOLIC) == pytest.approx(2.389526, abs=1e-6)

    def test_frobenius_identity_and_displacement(self, rng):
        for _ in range(1000):
            g = random_sl2(rng)
            frobenius = float(g.frobenius_sq)
            mu = cartan_mu(g)
            assert abs(2 * math.cosh(mu) - frobenius) <= 1e-9 * max(1.0, frobenius)
            assert mu == pytest.approx(dist(BASEPOINT_2, apply(g, BASEPOINT_2)), abs=1e-9)

    def test_inverse_invariance(self, rng):
        for _ in range(100):
            g = random_sl2(rng)
            assert cartan_mu(inverse(g)) == pytest.approx(cartan_mu(g), abs=1e-12)

    def test_frobenius_excess_has_no_cancellation(self):
        g = translation(1e-8)
        assert frobenius_excess(g) == pytest.approx(4 * math.sinh(5e-9) ** 2, rel=1e-6)
        assert cartan_mu(g) == pytest.approx(1e-8, rel=1e-6)
        assert frobenius_excess(rotation(1e-3)) == pytest.approx(0.0, abs=1e-15)

    def test_complex_displacement(self):
        g = Isometry.of(1 + 1j, 2 + 0j, 0.5j, 1 - 0.5j)
        assert cartan_mu(g) == pytest.approx(dist(BASEPOINT_3, apply(g, BASEPOINT_3)), abs=1e-9)

    @given(st.floats(0.1, 3.0), st.floats(-2.0, 2.0), st.floats(-2.0, 2.0))
    def test_subadditive(self, length, u, s):
        g = translation_along(GeodesicLine.between(u, u + 1.0), length)
        h = rotation_about(HPoint.plane(s, 1.0), 1.0)
        assert cartan_mu(compose(g, h)) <= cartan_mu(g) + cartan_mu(h) + 1e-9


class TestFixedPointsAndAxes:

    def test_parabolic_fixes_infinity(self):
        (xi,) = fixed_boundary_points(PARABOLIC)
        assert xi.is_infinite

    def test_axis_of_translation(self):
        line = axis(translation(1.0))
        assert line.start.x == 0.0
        assert line.end.is_infinite

    def test_axis_endpoints_are_fixed(self, rng):
        for _ in range(50):
            g = random_hyperbolic(rng)
            line = axis(g)
            for xi in (line.start, line.end):
                image = apply_boundary(g, xi)
                if xi.is_infinite:
                    assert image.is_infinite
                else:
                    assert image.x == pytest.approx(xi.x, rel=1e-7, abs=1e-7)

    def test_axis_of_elliptic_rejected(self):
        with pytest.raises(PreconditionError):
            axis(rotation(1.0))

    def test_fixed_point_of_rotation(self):
        centre = HPoint.plane(0.3, 2.0)
        found = fixed_point(rotation_about(centre, 0.9))
        assert dist(found, centre) == pytest.approx(0.0, abs=1e-8)

    def test_apply_translation(self):
        image = apply(translation(1.3), BASEPOINT_2)
        assert image.u == pytest.approx(0.0, abs=1e-15)
        assert image.v == pytest.approx(math.exp(1.3))

    def test_apply_preserves_model(self, rng):
        for _ in range(100):
            g = random_sl2(rng)
            assert apply(g, HPoint.plane(float(rng.normal()), 0.5)).v > 0


class TestConstructors:

    def test_rotation_about_basepoint(self):
        for theta in (0.3, 1.0, 2.5):
            assert rotation_about(BASEPOINT_2, theta).is_close(rotation(theta), 1e-12)

    def test_reflection_in_imaginary_axis(self):
        g = reflection_in(GeodesicLine.between(0.0, None))
        assert g.orientation == -1
        assert g.is_close(Isometry.of(-1, 0, 0, 1), 1e-12)

    def test_translation_along_moves_along_line(self):
        line = GeodesicLine.between(-1.0, 1.0)
        g = translation_along(line, 0.8)
        assert translation_length(g) == pytest.approx(0.8, abs=1e-12)
        assert dist(BASEPOINT_2, apply(g, BASEPOINT_2)) == pytest.approx(0.8, abs=1e-12)

    @pytest.mark.parametrize("separation", [3.0, 5.0, 10.0, 40.0])
    def test_shortest_translation_between_unit_circles(self, separation):
        first = GeodesicLine.between(-1.0, 1.0)
        second = GeodesicLine.between(separation - 1.0, separation + 1.0)
        g = shortest_translation_between(first, second)
        assert translation_length(g) == pytest.approx(2 * math.acosh(separation / 2), abs=1e-9)
        images = sorted(apply_boundary(g, xi).x for xi in (first.start, first.end))
        assert images == pytest.approx([separation - 1.0, separation + 1.0], rel=1e-9)

    def test_shortest_translation_rejects_crossing_lines(self):
        with pytest.raises(PreconditionError):
            shortest_translation_between(GeodesicLine.between(-1.0, 1.0), GeodesicLine.between(0.0, 2.0))
