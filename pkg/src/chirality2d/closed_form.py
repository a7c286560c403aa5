"""Exact reflection-asymmetry values for triangles and parallelograms.

For these two families the optimal mirror line is always one of a short list
of candidate axes (angle bisectors, edge perpendiculars, diagonals, or the
John-ellipse axes), and the value of R(K, mirror image) at each candidate has
a closed form in the similarity parameters.  This module evaluates those
formulas, converts between parameterizations, and supplies the candidate axis
angles used to label numeric optima.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chirality import ChiralityResult
from .geometry import (Axis, ConvexPolygon, EllipseSpec, GeometryError,
                       Point2, centroid)

TIE_TOL = 1e-9


class DegenerateShape(GeometryError):
    pass


class NotATriangleOrParallelogram(GeometryError):
    pass


class NotAParallelogram(NotATriangleOrParallelogram):
    pass


@dataclass(frozen=True)
class TriangleShape:
    """Side lengths in ascending order."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if not (0.0 < self.x <= self.y <= self.z < self.x + self.y):
            raise DegenerateShape("need 0 < x <= y <= z < x + y")


@dataclass(frozen=True)
class ParallelogramShape:
    """Side length ratio r >= 1 and the larger interior angle theta."""

    r: float
    theta: float

    def __post_init__(self):
        if not (self.r >= 1.0 and math.pi / 2 <= self.theta < math.pi):
            raise DegenerateShape("need r >= 1 and pi/2 <= theta < pi")


@dataclass(frozen=True)
class CanonicalParallelogram:
    """Half-diagonals (1,0) and (z1,z2); the long diagonal is normalized."""

    z1: float
    z2: float

    def __post_init__(self):
        if not (self.z1 > 0.0 and self.z2 > 0.0
                and self.z1 ** 2 + self.z2 ** 2 < 1.0):
            raise DegenerateShape("need z1, z2 > 0 and z1^2 + z2^2 < 1")


# ---------------------------------------------------------------- triangles

def triangle_axis_values(T: TriangleShape) -> dict:
    """R(K, mirror image) at all six candidate axes of a triangle.

    Bisector values are ratios of the adjacent sides; perpendicular values
    come from the trapezoid the reflection forms over the fixed edge.
    """
    x, y, z = T.x, T.y, T.z
    return {
        "bisector-smallest-angle": z / y,
        "bisector-largest-angle": y / x,
        "bisector-middle-angle": z / x,
        "perp-longest-edge": 1.0 + (y * y - x * x) / (z * z),
        "perp-middle-edge": 1.0 + (z * z - x * x) / (y * y),
        "perp-shortest-edge": 1.0 + (z * z - y * y) / (x * x),
    }


_TRIANGLE_KEEP = ("bisector-smallest-angle", "bisector-largest-angle",
                  "perp-longest-edge")


def triangle_alpha1(T: TriangleShape) -> ChiralityResult:
    """min of the three candidate values that can be optimal; 1 iff isosceles."""
    values = triangle_axis_values(T)
    best = min(values[k] for k in _TRIANGLE_KEEP)
    ties = tuple(k for k in _TRIANGLE_KEEP if values[k] <= best + TIE_TOL)
    if best <= 1.0 + TIE_TOL:
        return ChiralityResult(best, None, "identity", ties)
    return ChiralityResult(best, None, ties[0], ties)


def triangle_realization(T: TriangleShape) -> ConvexPolygon:
    """Vertices with the longest side on the x-axis from (0,0) to (z,0)."""
    x, y, z = T.x, T.y, T.z
    px = (z * z + y * y - x * x) / (2.0 * z)
    py = math.sqrt(max(y * y - px * px, 0.0))
    if py <= 0.0:
        raise DegenerateShape("flat triangle")
    return ConvexPolygon([(0.0, 0.0), (z, 0.0), (px, py)])


# ----------------------------------------------------------- parallelograms

def parallelogram_axis_values(P: ParallelogramShape) -> dict:
    """R(K, mirror image) at the three candidate axes of a parallelogram.

    The diagonal-bisector value is the ratio of the diagonal lengths; at
    theta = pi/2 or r = 1 the non-trivial values collapse to 1.
    """
    r, ct = P.r, math.cos(P.theta)
    d = (r * r - 2.0 * r * ct + 1.0) / math.sqrt(
        (r * r + 1.0) ** 2 - 4.0 * r * r * ct * ct)
    j = (r * r - 2.0 * r * ct - 1.0) / math.sqrt(
        (r * r - 1.0) ** 2 + 4.0 * r * r * ct * ct)
    return {"edge-bisector": r, "diagonal-bisector": d, "john-axis": j}


def parallelogram_alpha1(P: ParallelogramShape) -> ChiralityResult:
    """min of the three values; 1 exactly for rectangles and rhombuses."""
    values = parallelogram_axis_values(P)
    if P.r <= 1.0 + TIE_TOL or abs(P.theta - math.pi / 2) <= TIE_TOL:
        return ChiralityResult(1.0, None, "identity", ("identity",))
    best = min(values.values())
    ties = tuple(k for k, v in values.items() if v <= best + TIE_TOL)
    return ChiralityResult(best, None, ties[0], ties)


def parallelogram_realization(P: ParallelogramShape) -> ConvexPolygon:
    """Origin-symmetric vertices with side lengths r and 1, angle theta."""
    u = np.array([P.r, 0.0])
    w = np.array([math.cos(P.theta), math.sin(P.theta)])
    return ConvexPolygon([(u + w) / 2, (w - u) / 2, -(u + w) / 2, (u - w) / 2])


def canonical_realization(C: CanonicalParallelogram) -> ConvexPolygon:
    return ConvexPolygon([(1.0, 0.0), (C.z1, C.z2), (-1.0, 0.0),
                          (-C.z1, -C.z2)])


def shape_from_vertices(K: ConvexPolygon):
    """Similarity parameters of a triangle or parallelogram vertex set."""
    v = K.vertices
    if len(v) == 3:
        sides = sorted(np.hypot(*(np.roll(v, -1, axis=0) - v).T))
        return TriangleShape(*map(float, sides))
    if len(v) == 4:
        scale = float(np.abs(v).max())
        if not np.allclose(v[0] + v[2], v[1] + v[3], atol=1e-9 * scale):
            raise NotATriangleOrParallelogram("4-gon is not a parallelogram")
        e1 = v[1] - v[0]
        e2 = v[2] - v[1]
        l1, l2 = float(np.hypot(*e1)), float(np.hypot(*e2))
        r = max(l1, l2) / min(l1, l2)
        # interior angle at v1, between -e1 and e2; take the obtuse one
        cos_a = float(np.dot(-e1, e2)) / (l1 * l2)
        theta = math.acos(max(-1.0, min(1.0, cos_a)))
        return ParallelogramShape(r, max(theta, math.pi - theta))
    raise NotATriangleOrParallelogram("expected 3 or 4 vertices")


def canonical_coords(P: ParallelogramShape) -> CanonicalParallelogram:
    """Normalize so the long diagonal is the segment from (-1,0) to (1,0)."""
    if P.r <= 1.0 or P.theta <= math.pi / 2:
        raise DegenerateShape("rectangles and rhombuses have no canonical form")
    r, ct, st = P.r, math.cos(P.theta), math.sin(P.theta)
    denom = 1.0 + r * r - 2.0 * r * ct
    return CanonicalParallelogram((r * r - 1.0) / denom, 2.0 * r * st / denom)


def _square_to_parallelogram_map(a, b) -> np.ndarray:
    """Linear map sending the square conv{(+-1,+-1)} onto conv{+-a, +-b}."""
    A = np.column_stack([a, b])
    return A @ np.linalg.inv(np.array([[-1.0, 1.0], [1.0, 1.0]]))


def john_axis(C: CanonicalParallelogram) -> Axis:
    """Major-axis angle of the largest inscribed ellipse, two derivations.

    The closed form solves cot(2*phi) = (1 + z1^2 - z2^2) / (2*z1*z2) with
    phi in (0, pi/4); the result is cross-checked against the principal axes
    of the quadratic form defining the ellipse.
    """
    z1, z2 = C.z1, C.z2
    phi = 0.5 * math.atan2(2.0 * z1 * z2, 1.0 + z1 * z1 - z2 * z2)
    M = _square_to_parallelogram_map(np.array([1.0, 0.0]), np.array([z1, z2]))
    eig_phi = _major_axis_angle(M)
    if abs((phi - eig_phi + math.pi / 2) % math.pi - math.pi / 2) > 1e-9:
        raise DegenerateShape("ellipse-axis derivations disagree; "
                              "shape too close to a square")
    return Axis(phi)


def _major_axis_angle(M: np.ndarray) -> float:
    Q = np.linalg.inv(M).T @ np.linalg.inv(M)
    w, vec = np.linalg.eigh(Q)
    v = vec[:, 0]  # smaller eigenvalue: longer semi-axis
    return math.atan2(v[1], v[0]) % math.pi


def john_lambda(C: CanonicalParallelogram) -> float:
    """R(K, mirror image) across the John-ellipse major axis."""
    z1, z2 = C.z1, C.z2
    num = 1.0 - z1 * z1 - z2 * z2 + 2.0 * z1
    den = math.hypot(1.0 + z1 * z1 - z2 * z2, 2.0 * z1 * z2)
    return num / den


def john_ellipse(K: ConvexPolygon) -> EllipseSpec:
    """Largest inscribed ellipse of a parallelogram.

    It is the image of the unit disk under the linear map taking the standard
    square to the centered parallelogram, so it touches every edge at its
    midpoint.
    """
    if len(K.vertices) != 4:
        raise NotAParallelogram("expected 4 vertices")
    try:
        shape = shape_from_vertices(K)
    except NotATriangleOrParallelogram as exc:
        raise NotAParallelogram(str(exc)) from exc
    if not isinstance(shape, ParallelogramShape):
        raise NotAParallelogram("4-gon is not a parallelogram")
    c = centroid(K)
    v = K.vertices - c.as_array()
    M = _square_to_parallelogram_map(v[0], v[1])
    Q = np.linalg.inv(M).T @ np.linalg.inv(M)
    w, vec = np.linalg.eigh(Q)
    semi = 1.0 / np.sqrt(w)
    angle = math.atan2(vec[1, 0], vec[0, 0]) % math.pi
    return EllipseSpec(c, angle, float(semi[0]), float(semi[1]))


# ----------------------------------------------------------- candidate axes

def candidate_axes(K: ConvexPolygon) -> list:
    """(label, angle) pairs of the closed-form candidate mirror lines of K.

    Only triangle and parallelogram inputs have candidates; anything else
    returns an empty list.  Parallelogram profiles are pi/2-periodic, so each
    axis is listed together with its perpendicular.
    """
    v = K.vertices
    if len(v) == 3:
        return _triangle_candidates(v)
    if len(v) == 4:
        try:
            shape_from_vertices(K)
        except NotATriangleOrParallelogram:
            return []
        return _parallelogram_candidates(K)
    return []


def _bisector_angle(v, i) -> float:
    p, q = v[(i + 1) % 3] - v[i], v[(i + 2) % 3] - v[i]
    d = p / np.hypot(*p) + q / np.hypot(*q)
    return math.atan2(d[1], d[0]) % math.pi


def _triangle_candidates(v) -> list:
    sides = np.hypot(*(np.roll(v, -1, axis=0) - v).T)  # side i is opposite...
    # side i joins v[i] and v[i+1]; the angle at v[i] faces side i+1
    opposite = np.array([sides[(i + 1) % 3] for i in range(3)])
    smallest = int(np.argmin(opposite))
    largest = int(np.argmax(opposite))
    longest_edge = int(np.argmax(sides))
    e = v[(longest_edge + 1) % 3] - v[longest_edge]
    perp = math.atan2(e[0], -e[1]) % math.pi
    return [
        ("bisector-smallest-angle", _bisector_angle(v, smallest)),
        ("bisector-largest-angle", _bisector_angle(v, largest)),
        ("perp-longest-edge", perp),
    ]


def _parallelogram_candidates(K: ConvexPolygon) -> list:
    v = K.vertices - centroid(K).as_array()
    out = []

    def add(tag, vec):
        th = math.atan2(vec[1], vec[0]) % math.pi
        out.append((tag, th))
        out.append((tag, (th + math.pi / 2) % math.pi))

    # the optimal axes bisect angles: of two consecutive edges at a vertex,
    # or of the two diagonals
    u1 = (v[1] - v[0]) / np.hypot(*(v[1] - v[0]))
    u2 = (v[3] - v[0]) / np.hypot(*(v[3] - v[0]))
    add("edge-bisector", u1 + u2)
    d1 = v[0] / np.hypot(*v[0])
    d2 = v[1] / np.hypot(*v[1])
    add("diagonal-bisector", d1 + d2)
    add("diagonal-bisector", d1 - d2)
    try:
        shape = shape_from_vertices(K)
        coords = canonical_coords(shape)
        phi = john_axis(coords).theta
        # transport the canonical-frame angle: the long diagonal of K plays
        # the role of the (1,0) direction of the canonical coordinates
        d_long = v[0] if np.hypot(*v[0]) >= np.hypot(*v[1]) else v[1]
        base = math.atan2(d_long[1], d_long[0])
        add("john-axis", np.array([math.cos(base + phi), math.sin(base + phi)]))
        add("john-axis", np.array([math.cos(base - phi), math.sin(base - phi)]))
    except DegenerateShape:
        pass
    return out
