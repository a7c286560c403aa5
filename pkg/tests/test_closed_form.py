import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chirality2d.chirality import alpha1_numeric, chirality_profile
from chirality2d.closed_form import (CanonicalParallelogram, DegenerateShape,
                                     NotAParallelogram,
                                     NotATriangleOrParallelogram,
                                     ParallelogramShape, TriangleShape,
                                     canonical_coords, canonical_realization,
                                     candidate_axes, john_axis, john_ellipse,
                                     john_lambda, parallelogram_alpha1,
                                     parallelogram_axis_values,
                                     parallelogram_realization,
                                     shape_from_vertices, triangle_alpha1,
                                     triangle_axis_values,
                                     triangle_realization)
from chirality2d.geometry import ConvexPolygon, area, centroid

SQRT2 = math.sqrt(2.0)


def random_triangle_shape(rng):
    while True:
        s = np.sort(rng.uniform(0.05, 1.0, 3))
        if s[0] + s[1] > s[2] * (1 + 1e-3):
            return TriangleShape(*s)


triangle_sides = st.tuples(
    st.floats(0.1, 1.0), st.floats(0.1, 1.0), st.floats(0.1, 1.0)).map(sorted)


class TestTriangleValues:
    def test_345(self):
        vals = triangle_axis_values(TriangleShape(3, 4, 5))
        assert vals["bisector-smallest-angle"] == pytest.approx(1.25)
        assert vals["bisector-largest-angle"] == pytest.approx(4 / 3)
        assert vals["bisector-middle-angle"] == pytest.approx(5 / 3)
        assert vals["perp-longest-edge"] == pytest.approx(1.28)
        assert vals["perp-middle-edge"] == pytest.approx(1 + 16 / 16)
        assert vals["perp-shortest-edge"] == pytest.approx(1 + 9 / 9)

    def test_equilateral(self):
        vals = triangle_axis_values(TriangleShape(1, 1, 1))
        for key in ("bisector-smallest-angle", "bisector-largest-angle",
                    "bisector-middle-angle"):
            assert vals[key] == pytest.approx(1.0)

    def test_isosceles(self):
        vals = triangle_axis_values(TriangleShape(1, 1, 1.5))
        assert vals["bisector-smallest-angle"] == pytest.approx(1.5)
        assert vals["bisector-largest-angle"] == pytest.approx(1.0)

    def test_values_match_lp_at_each_axis(self):
        T = TriangleShape(0.5, 0.8, 1.0)
        K = triangle_realization(T)
        vals = triangle_axis_values(T)
        for tag, th in candidate_axes(K):
            assert chirality_profile(K, th) == pytest.approx(vals[tag],
                                                             abs=1e-9)


class TestTriangleAlpha1:
    def test_345(self):
        res = triangle_alpha1(TriangleShape(3, 4, 5))
        assert res.value == pytest.approx(1.25)
        assert res.classification == "bisector-smallest-angle"

    def test_isosceles_is_one(self):
        res = triangle_alpha1(TriangleShape(1, 1, 1.7))
        assert res.value == pytest.approx(1.0)
        assert res.classification == "identity"

    def test_limit_shape_reaches_sqrt2(self):
        # the flat limit (1 - 1/sqrt2, 1/sqrt2, 1) itself is degenerate;
        # nudging off the boundary approaches sqrt(2) linearly
        res = triangle_alpha1(
            TriangleShape(1 - 1 / SQRT2 + 1e-9, 1 / SQRT2, 1.0))
        assert res.value == pytest.approx(SQRT2, abs=1e-8)
        with pytest.raises(DegenerateShape):
            TriangleShape(1 - 1 / SQRT2, 1 / SQRT2, 1.0)

    def test_dominated_candidates(self, rng):
        # the three excluded axis values never beat the kept minimum
        for _ in range(200):
            T = random_triangle_shape(rng)
            vals = triangle_axis_values(T)
            kept = min(vals["bisector-smallest-angle"],
                       vals["bisector-largest-angle"],
                       vals["perp-longest-edge"])
            excluded = min(vals["bisector-middle-angle"],
                           vals["perp-middle-edge"],
                           vals["perp-shortest-edge"])
            assert kept <= excluded + 1e-12

    def test_range(self, rng):
        for _ in range(500):
            T = random_triangle_shape(rng)
            v = triangle_alpha1(T).value
            assert 1.0 - 1e-12 <= v < SQRT2

    def test_oracle_agreement(self, rng):
        for _ in range(40):
            T = random_triangle_shape(rng)
            num = alpha1_numeric(triangle_realization(T)).value
            assert triangle_alpha1(T).value == pytest.approx(num, abs=1e-6)


class TestParallelogramValues:
    def test_rectangle_collapse(self):
        vals = parallelogram_axis_values(ParallelogramShape(2.0, math.pi / 2))
        assert vals["edge-bisector"] == pytest.approx(2.0)
        assert vals["diagonal-bisector"] == pytest.approx(1.0)
        assert vals["john-axis"] == pytest.approx(1.0)

    def test_extremal_family_boundary(self):
        r = SQRT2
        theta = math.acos((1 / r - r) / 2)
        vals = parallelogram_axis_values(ParallelogramShape(r, theta))
        assert vals["edge-bisector"] == pytest.approx(SQRT2, abs=1e-12)
        assert vals["diagonal-bisector"] == pytest.approx(SQRT2, abs=1e-12)

    def test_values_match_lp_at_each_axis(self):
        P = ParallelogramShape(2.0, 2 * math.pi / 3)
        K = parallelogram_realization(P)
        vals = parallelogram_axis_values(P)
        # the candidate list may carry mirror-image angles per tag; the
        # attained value is the minimum over the listed angles
        seen = {}
        for tag, th in candidate_axes(K):
            v = chirality_profile(K, th)
            seen[tag] = min(seen.get(tag, math.inf), v)
        for tag, v in seen.items():
            assert v == pytest.approx(vals[tag], abs=1e-9)


class TestParallelogramAlpha1:
    def test_rectangle_and_rhombus(self):
        assert parallelogram_alpha1(
            ParallelogramShape(3.0, math.pi / 2)).value == 1.0
        assert parallelogram_alpha1(
            ParallelogramShape(1.0, 2.0)).value == 1.0

    def test_extremal_value(self):
        r = SQRT2
        theta = math.acos((1 / r - r) / 2)
        res = parallelogram_alpha1(ParallelogramShape(r, theta))
        assert res.value == pytest.approx(SQRT2, abs=1e-12)

    def test_oracle_agreement(self, rng):
        for _ in range(40):
            r = rng.uniform(1.01, 4.0)
            theta = rng.uniform(math.pi / 2 + 0.01, math.pi - 0.01)
            P = ParallelogramShape(r, theta)
            num = alpha1_numeric(parallelogram_realization(P)).value
            assert parallelogram_alpha1(P).value == pytest.approx(num,
                                                                  abs=1e-6)

    def test_sqrt2_iff_extremal_condition(self):
        # on the curve cos(theta) = (1/r - r)/2 with r >= sqrt(2) the value
        # is exactly sqrt(2); away from it the value stays strictly below
        for r in np.linspace(1.45, 2.4, 30):
            theta = math.acos((1 / r - r) / 2)
            assert parallelogram_alpha1(ParallelogramShape(r, theta)).value \
                == pytest.approx(SQRT2, abs=1e-11)
        for r in np.linspace(1.05, 3.0, 40):
            for theta in np.linspace(math.pi / 2 + 0.01, math.pi - 0.01, 40):
                v = parallelogram_alpha1(ParallelogramShape(r, theta)).value
                assert v <= SQRT2 + 1e-12
                near_curve = r >= SQRT2 - 1e-3 and \
                    abs(math.cos(theta) - (1 / r - r) / 2) <= 1e-2
                if not near_curve:
                    assert v <= SQRT2 - 1e-5


class TestShapeFromVertices:
    def test_right_triangle(self):
        T = shape_from_vertices(ConvexPolygon([(0, 0), (3, 0), (0, 4)]))
        assert (T.x, T.y, T.z) == pytest.approx((3, 4, 5))

    def test_unit_square(self):
        P = shape_from_vertices(ConvexPolygon([(0, 0), (1, 0), (1, 1),
                                               (0, 1)]))
        assert P.r == pytest.approx(1.0)
        assert P.theta == pytest.approx(math.pi / 2)

    def test_extremal_parallelogram(self):
        P = shape_from_vertices(ConvexPolygon([(1, 0), (2, 1), (-1, 0),
                                               (-2, -1)]))
        assert P.r == pytest.approx(math.sqrt(5))
        # the obtuse interior angle satisfies the extremal condition
        # cos(theta) = (1/r - r)/2, hence alpha1 = sqrt(2)
        assert math.cos(P.theta) == pytest.approx(-2 / math.sqrt(5))
        assert parallelogram_alpha1(P).value == pytest.approx(SQRT2,
                                                              abs=1e-9)

    def test_non_parallelogram_rejected(self):
        with pytest.raises(NotATriangleOrParallelogram):
            shape_from_vertices(ConvexPolygon([(0, 0), (2, 0), (3, 1),
                                               (0, 2)]))
        with pytest.raises(NotATriangleOrParallelogram):
            shape_from_vertices(ConvexPolygon(
                [(math.cos(a), math.sin(a))
                 for a in np.linspace(0, 2 * math.pi, 6, endpoint=False)]))


class TestCanonicalCoords:
    def test_round_trip(self, rng):
        for _ in range(100):
            r = rng.uniform(1.01, 4.0)
            theta = rng.uniform(math.pi / 2 + 0.01, math.pi - 0.01)
            C = canonical_coords(ParallelogramShape(r, theta))
            back = shape_from_vertices(canonical_realization(C))
            assert back.r == pytest.approx(r, abs=1e-9)
            assert back.theta == pytest.approx(theta, abs=1e-9)

    def test_right_angle_limit(self):
        r = 2.0
        eps = 1e-8
        C = canonical_coords(ParallelogramShape(r, math.pi / 2 + eps))
        assert C.z1 == pytest.approx((r * r - 1) / (r * r + 1), abs=1e-6)

    def test_inside_unit_disk(self, rng):
        for _ in range(500):
            r = rng.uniform(1.001, 6.0)
            theta = rng.uniform(math.pi / 2 + 1e-3, math.pi - 1e-3)
            C = canonical_coords(ParallelogramShape(r, theta))
            assert C.z1 > 0 and C.z2 > 0
            assert C.z1 ** 2 + C.z2 ** 2 < 1

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateShape):
            canonical_coords(ParallelogramShape(1.0, 2.0))
        with pytest.raises(DegenerateShape):
            canonical_coords(ParallelogramShape(2.0, math.pi / 2))


class TestJohnAxis:
    def test_worked_coordinates(self):
        phi = john_axis(CanonicalParallelogram(0.5, 0.3)).theta
        assert phi == pytest.approx(
            0.5 * math.atan2(0.3, 1.16), abs=1e-12)
        assert phi == pytest.approx(0.1265, abs=1e-4)

    def test_two_derivations_agree(self, rng):
        for _ in range(200):
            r = rng.uniform(1.01, 5.0)
            theta = rng.uniform(math.pi / 2 + 0.01, math.pi - 0.01)
            C = canonical_coords(ParallelogramShape(r, theta))
            phi = john_axis(C).theta  # raises if the derivations disagree
            assert 0.0 < phi < math.pi / 4

    def test_rectangle_limit_bisects_diagonals(self):
        # near a rectangle both diagonals of the canonical form have length
        # ~2 and the inscribed-ellipse axis bisects the angle between them
        C = canonical_coords(ParallelogramShape(3.0, math.pi / 2 + 1e-7))
        assert john_axis(C).theta == pytest.approx(
            0.5 * math.atan2(C.z2, C.z1), abs=1e-6)


class TestJohnLambda:
    def test_worked_coordinates(self):
        lam = john_lambda(CanonicalParallelogram(0.5, 0.3))
        assert lam == pytest.approx(1.66 / math.sqrt(1.3456 + 0.09),
                                    abs=1e-12)
        assert lam == pytest.approx(1.3855, abs=1e-4)

    def test_matches_shape_formula(self, rng):
        for _ in range(200):
            r = rng.uniform(1.01, 5.0)
            theta = rng.uniform(math.pi / 2 + 0.01, math.pi - 0.01)
            P = ParallelogramShape(r, theta)
            lam = john_lambda(canonical_coords(P))
            assert lam == pytest.approx(
                parallelogram_axis_values(P)["john-axis"], abs=1e-9)

    def test_bounded_by_sqrt2(self, rng):
        for _ in range(200):
            z = rng.uniform(0.01, 0.99, 2)
            if z[0] ** 2 + z[1] ** 2 >= 1:
                continue
            assert john_lambda(CanonicalParallelogram(*z)) <= SQRT2 + 1e-9


class TestJohnEllipse:
    def test_square_gives_disk(self):
        E = john_ellipse(ConvexPolygon([(-1, -1), (1, -1), (1, 1), (-1, 1)]))
        assert E.semi_major == pytest.approx(1.0, abs=1e-12)
        assert E.semi_minor == pytest.approx(1.0, abs=1e-12)
        assert (E.center.x, E.center.y) == pytest.approx((0, 0))

    def test_non_parallelogram_rejected(self):
        with pytest.raises(NotAParallelogram):
            john_ellipse(ConvexPolygon([(0, 0), (1, 0), (0, 1)]))
        with pytest.raises(NotAParallelogram):
            john_ellipse(ConvexPolygon([(1, 0), (0, 0.5), (-1, 0),
                                        (0, -0.6)]))

    def test_midpoint_tangency_sheared_square(self):
        K = ConvexPolygon([(0, 0), (2, 0), (2.7, 1.3), (0.7, 1.3)])
        E = john_ellipse(K)
        c = np.array([E.center.x, E.center.y])
        ca, sa = math.cos(E.major_angle), math.sin(E.major_angle)
        rot = np.array([[ca, sa], [-sa, ca]])
        v = K.vertices
        for i in range(4):
            mid = (v[i] + v[(i + 1) % 4]) / 2
            local = rot @ (mid - c)
            val = (local[0] / E.semi_major) ** 2 \
                + (local[1] / E.semi_minor) ** 2
            assert val == pytest.approx(1.0, abs=1e-9)

    def test_inscribed(self, rng):
        for _ in range(20):
            P = ParallelogramShape(rng.uniform(1.0, 3.0),
                                   rng.uniform(math.pi / 2, math.pi - 0.05))
            K = parallelogram_realization(P)
            E = john_ellipse(K)
            ang = np.linspace(0, 2 * math.pi, 64)
            ca, sa = math.cos(E.major_angle), math.sin(E.major_angle)
            pts = np.column_stack([E.semi_major * np.cos(ang),
                                   E.semi_minor * np.sin(ang)])
            pts = pts @ np.array([[ca, sa], [-sa, ca]]) \
                + [E.center.x, E.center.y]
            for p in pts:
                assert K.contains_point(p, tol=1e-9)


class TestPolarPairing:
    def test_edge_bisector_of_polar_equals_diagonal_bisector(self, rng):
        from chirality2d.geometry import polar

        for _ in range(50):
            P = ParallelogramShape(rng.uniform(1.05, 3.0),
                                   rng.uniform(math.pi / 2 + 0.05,
                                               math.pi - 0.05))
            K = parallelogram_realization(P)
            vals_K = parallelogram_axis_values(P)
            vals_P = parallelogram_axis_values(shape_from_vertices(polar(K)))
            assert vals_P["edge-bisector"] == pytest.approx(
                vals_K["diagonal-bisector"], abs=1e-9)


class TestShapeValidation:
    def test_triangle_inequality(self):
        with pytest.raises(DegenerateShape):
            TriangleShape(1, 1, 2.5)
        with pytest.raises(DegenerateShape):
            TriangleShape(2, 1, 3)

    def test_parallelogram_domain(self):
        with pytest.raises(DegenerateShape):
            ParallelogramShape(0.5, 2.0)
        with pytest.raises(DegenerateShape):
            ParallelogramShape(2.0, 1.0)

    def test_canonical_domain(self):
        with pytest.raises(DegenerateShape):
            CanonicalParallelogram(0.0, 0.5)
        with pytest.raises(DegenerateShape):
            CanonicalParallelogram(0.8, 0.7)
