"""Exact planar primitives: convex polygons, supports, reflections, polars.

All polygons are kept in a canonical form (counter-clockwise, starting at the
lexicographically smallest vertex) so that set equality reduces to a vertexwise
comparison.  Every operation here is a pure function on immutable data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Collinearity / degeneracy threshold for coordinates of order 1.
EPS_GEOM = 1e-12


class GeometryError(ValueError):
    pass


class DegenerateInput(GeometryError):
    pass


class ZeroDirection(GeometryError):
    pass


class OriginNotInterior(GeometryError):
    pass


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError("coordinates must be finite")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=float)


@dataclass(frozen=True)
class Axis:
    """A 1-dimensional linear subspace, encoded as an angle in [0, pi)."""

    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise GeometryError("axis angle must be finite")
        object.__setattr__(self, "theta", self.theta % math.pi)

    def direction(self) -> np.ndarray:
        return np.array([math.cos(self.theta), math.sin(self.theta)])

    def perpendicular(self) -> "Axis":
        return Axis(self.theta + math.pi / 2)


def axis_distance(a: float, b: float) -> float:
    """Distance between two axis angles modulo pi."""
    d = abs(a - b) % math.pi
    return min(d, math.pi - d)


@dataclass(frozen=True)
class Halfplane:
    """The set {x : normal . x <= offset}, with a unit outward normal."""

    normal: Point2
    offset: float


@dataclass(frozen=True)
class EllipseSpec:
    center: Point2
    major_angle: float
    semi_major: float
    semi_minor: float

    def __post_init__(self):
        if not self.semi_major >= self.semi_minor > 0:
            raise GeometryError("require semi_major >= semi_minor > 0")


class ConvexPolygon:
    """A strictly convex polygon in canonical CCW form.

    ``vertices`` is an (m, 2) read-only float array.  The constructor validates
    convexity and canonicalizes; use :func:`convex_hull` for raw point sets.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        verts = np.asarray(vertices, dtype=float)
        if verts.ndim != 2 or verts.shape[1] != 2 or verts.shape[0] < 3:
            raise DegenerateInput("need at least 3 vertices of dimension 2")
        if not np.all(np.isfinite(verts)):
            raise GeometryError("vertices must be finite")
        verts = _canonicalize(verts)
        edges = np.roll(verts, -1, axis=0) - verts
        if np.any(np.hypot(edges[:, 0], edges[:, 1]) <= EPS_GEOM):
            raise DegenerateInput("consecutive vertices coincide")
        cross = edges[:, 0] * np.roll(edges[:, 1], -1) - edges[:, 1] * np.roll(edges[:, 0], -1)
        if np.any(cross <= EPS_GEOM):
            raise DegenerateInput("polygon is not strictly convex CCW")
        if _shoelace(verts) <= EPS_GEOM:
            raise DegenerateInput("polygon has vanishing area")
        verts.setflags(write=False)
        self.vertices = verts

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ConvexPolygon)
            and self.vertices.shape == other.vertices.shape
            and np.array_equal(self.vertices, other.vertices)
        )

    def __hash__(self):
        return hash(self.vertices.tobytes())

    def __repr__(self) -> str:
        return f"ConvexPolygon({self.vertices.tolist()!r})"

    def translate(self, t) -> "ConvexPolygon":
        return ConvexPolygon(self.vertices + np.asarray(t, dtype=float))

    def scale(self, s: float) -> "ConvexPolygon":
        return ConvexPolygon(self.vertices * float(s))

    def negate(self) -> "ConvexPolygon":
        return ConvexPolygon(-self.vertices)

    def __neg__(self) -> "ConvexPolygon":
        return self.negate()

    def is_origin_symmetric(self, tol: float = 1e-9) -> bool:
        m = len(self.vertices)
        if m % 2:
            return False
        return bool(np.allclose(self.vertices, _canonicalize(-self.vertices), atol=tol))

    def contains_point(self, p, tol: float = 1e-9) -> bool:
        p = np.asarray(p, dtype=float)
        v = self.vertices
        e = np.roll(v, -1, axis=0) - v
        cross = e[:, 0] * (p[1] - v[:, 1]) - e[:, 1] * (p[0] - v[:, 0])
        return bool(np.all(cross >= -tol * max(1.0, float(np.abs(v).max()))))


def _canonicalize(verts: np.ndarray) -> np.ndarray:
    """Force CCW orientation and lexicographically smallest start vertex."""
    if _shoelace(verts) < 0:
        verts = verts[::-1]
    start = np.lexsort((verts[:, 1], verts[:, 0]))[0]
    return np.ascontiguousarray(np.roll(verts, -start, axis=0))


def _shoelace(verts: np.ndarray) -> float:
    x, y = verts[:, 0], verts[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def convex_hull(points) -> ConvexPolygon:
    """Convex hull of a point set (Andrew's monotone chain, collinear dropped)."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise DegenerateInput("expected an (n, 2) point array")
    pts = np.unique(pts, axis=0)  # also sorts lexicographically
    if len(pts) < 3:
        raise DegenerateInput("need at least 3 distinct points")

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and _turn(chain[-2], chain[-1], p) <= EPS_GEOM:
                chain.pop()
            chain.append(p)
        return chain[:-1]

    hull = half(pts) + half(pts[::-1])
    if len(hull) < 3:
        raise DegenerateInput("points are collinear")
    return ConvexPolygon(np.array(hull))


def _turn(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def reflect(K: ConvexPolygon, axis: Axis) -> ConvexPolygon:
    """Mirror image of K across the line through the origin at angle ``axis``."""
    c, s = math.cos(2 * axis.theta), math.sin(2 * axis.theta)
    R = np.array([[c, s], [s, -c]])
    return ConvexPolygon(K.vertices @ R.T)


def reflect_point(p, axis: Axis) -> np.ndarray:
    c, s = math.cos(2 * axis.theta), math.sin(2 * axis.theta)
    p = np.asarray(p, dtype=float)
    return np.array([c * p[0] + s * p[1], s * p[0] - c * p[1]])


def support(K: ConvexPolygon, direction) -> float:
    """Support value max_{v in K} direction . v."""
    d = np.asarray(direction, dtype=float)
    if np.hypot(d[0], d[1]) <= EPS_GEOM:
        raise ZeroDirection("support direction must be nonzero")
    return float(np.max(K.vertices @ d))


def to_halfplanes(K: ConvexPolygon) -> list[Halfplane]:
    """Edge halfplanes with outward unit normals; their intersection is K."""
    normals, offsets = halfplane_arrays(K)
    return [Halfplane(Point2(*n), float(o)) for n, o in zip(normals, offsets)]


def halfplane_arrays(K: ConvexPolygon) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized form of :func:`to_halfplanes`: (m, 2) normals, (m,) offsets."""
    v = K.vertices
    e = np.roll(v, -1, axis=0) - v
    n = np.column_stack([e[:, 1], -e[:, 0]])
    n /= np.hypot(n[:, 0], n[:, 1])[:, None]
    return n, np.einsum("ij,ij->i", n, v)


def area(K: ConvexPolygon) -> float:
    return _shoelace(K.vertices)


def centroid(K: ConvexPolygon) -> Point2:
    v = K.vertices
    w = np.roll(v, -1, axis=0)
    cross = v[:, 0] * w[:, 1] - v[:, 1] * w[:, 0]
    a = 0.5 * float(np.sum(cross))
    cx = float(np.sum((v[:, 0] + w[:, 0]) * cross)) / (6 * a)
    cy = float(np.sum((v[:, 1] + w[:, 1]) * cross)) / (6 * a)
    return Point2(cx, cy)


def diameter(K: ConvexPolygon) -> float:
    v = K.vertices
    d2 = np.sum((v[:, None, :] - v[None, :, :]) ** 2, axis=-1)
    return math.sqrt(float(d2.max()))


def point_to_polygon_distance(p, K: ConvexPolygon) -> float:
    """Euclidean distance from a point to a convex polygon (0 if inside)."""
    p = np.asarray(p, dtype=float)
    if K.contains_point(p, tol=0.0):
        return 0.0
    v = K.vertices
    w = np.roll(v, -1, axis=0)
    e = w - v
    t = np.einsum("ij,ij->i", p - v, e) / np.einsum("ij,ij->i", e, e)
    t = np.clip(t, 0.0, 1.0)
    proj = v + t[:, None] * e
    return float(np.min(np.hypot(*(p - proj).T)))


def hausdorff(K: ConvexPolygon, L: ConvexPolygon) -> float:
    """Hausdorff distance; exact for convex polygons via vertex projections."""
    dKL = max(point_to_polygon_distance(p, L) for p in K.vertices)
    dLK = max(point_to_polygon_distance(p, K) for p in L.vertices)
    return max(dKL, dLK)


def polar(K: ConvexPolygon) -> ConvexPolygon:
    """Polar dual {a : a . x <= 1 on K}; requires 0 strictly interior."""
    normals, offsets = halfplane_arrays(K)
    if np.any(offsets <= EPS_GEOM):
        raise OriginNotInterior("origin must be strictly interior to the polygon")
    return ConvexPolygon(normals / offsets[:, None])


def load_polygon(path) -> ConvexPolygon:
    """Read the 'x y' per line text format ('#' comments); hull is taken."""
    pts = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            fields = body.split()
            if len(fields) != 2:
                raise GeometryError(f"{path}:{lineno}: expected 'x y', got {body!r}")
            try:
                pts.append((float(fields[0]), float(fields[1])))
            except ValueError as exc:
                raise GeometryError(f"{path}:{lineno}: {exc}") from exc
    if len(pts) < 3:
        raise DegenerateInput(f"{path}: fewer than 3 points")
    return convex_hull(pts)


def save_polygon(path, K: ConvexPolygon) -> None:
    with open(path, "w") as fh:
        for x, y in K.vertices:
            fh.write(f"{float(x)!r} {float(y)!r}\n")
