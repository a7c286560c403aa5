import math

import numpy as np
import pytest
from hypothesis import strategies as st

from chirality2d.geometry import ConvexPolygon, DegenerateInput, convex_hull

DATA_DIR = __file__.rsplit("/", 1)[0] + "/data"


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)


def hull_or_none(points):
    try:
        K = convex_hull(np.asarray(points))
    except DegenerateInput:
        return None
    # keep shapes numerically comfortable for tolerance-based assertions
    v = K.vertices
    e = np.roll(v, -1, axis=0) - v
    if np.min(np.hypot(e[:, 0], e[:, 1])) < 1e-3:
        return None
    from chirality2d.geometry import area, diameter

    if area(K) < 1e-4 or diameter(K) > 50.0:
        return None
    return K


coordinates = st.floats(-5.0, 5.0, allow_nan=False, allow_infinity=False)
points = st.tuples(coordinates, coordinates)


@st.composite
def polygons(draw, min_points=3, max_points=10):
    pts = draw(st.lists(points, min_size=min_points, max_size=max_points))
    K = hull_or_none(pts)
    if K is None:
        from hypothesis import assume

        assume(False)
    return K


@st.composite
def symmetric_polygons(draw, min_points=2, max_points=6):
    pts = np.array(draw(st.lists(points, min_size=min_points,
                                 max_size=max_points)))
    K = hull_or_none(np.vstack([pts, -pts]))
    if K is None or not K.is_origin_symmetric():
        from hypothesis import assume

        assume(False)
    return K


def regular_polygon(n, radius=1.0, phase=0.0):
    ang = phase + 2.0 * math.pi * np.arange(n) / n
    return ConvexPolygon(np.column_stack([radius * np.cos(ang),
                                          radius * np.sin(ang)]))
