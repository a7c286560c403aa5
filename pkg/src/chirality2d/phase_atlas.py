"""Which candidate mirror line wins, as a function of shape parameters.

Every triangle and every parallelogram attains its minimal reflection
asymmetry on one of three candidate axes; the parameter domains split into
regions per winning axis, bounded by algebraic curves where two candidate
values tie.  This module evaluates those boundary curves, solves for the
triple-point constants, classifies query points, and emits grid files (CSV
and a scatter-style SVG) covering each family's domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .closed_form import (CanonicalParallelogram, ParallelogramShape,
                          TriangleShape, canonical_coords, john_axis,
                          parallelogram_axis_values, parallelogram_realization,
                          triangle_axis_values, triangle_realization)
from .geometry import GeometryError

EPS_PHASE = 1e-6
SQRT2 = math.sqrt(2.0)

FAMILIES = ("parallelogram", "triangle-sides", "triangle-xy")

_REGION_COLORS = {"B": "#4c72b0", "D": "#dd8452", "J": "#55a868",
                  "L": "#4c72b0", "S": "#dd8452", "P": "#55a868"}


class OutOfDomain(GeometryError):
    pass


@dataclass(frozen=True)
class PhaseRegion:
    tag: str  # B/D/J for parallelograms, L/S/P for triangles
    on_boundary: bool


@dataclass(frozen=True)
class PhaseConstants:
    y0: float  # root of y^4 + y^3 = 1
    x0: float  # root of 16 x^4 - 2 x - 1 = 0


def _bisect(f, lo, hi):
    flo = f(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if abs(fm) <= 1e-13 or hi - lo <= 1e-15:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def solve_constants() -> PhaseConstants:
    y0 = _bisect(lambda y: y ** 4 + y ** 3 - 1.0, 0.5, 1.0)
    x0 = _bisect(lambda x: 16.0 * x ** 4 - 2.0 * x - 1.0, 0.5, 1.0)
    return PhaseConstants(y0, x0)


_CONST = solve_constants()


# ------------------------------------------------- triangle, side lengths

def triangle_psi1_sides(y: float) -> float:
    """Below this x the smallest-angle bisector wins (sides (x, y, 1))."""
    if y <= SQRT2 / 2.0:
        return 0.0
    if y <= _CONST.y0:
        return math.sqrt(max(y ** 3 + y - 1.0, 0.0) / y)
    return y * y


def triangle_psi2_sides(y: float) -> float:
    """Above this x the largest-angle bisector wins."""
    if y <= _CONST.y0:
        # the tie curve of the largest-angle bisector against the
        # perpendicular axis; it exceeds y below y = 1/sqrt(2), which
        # leaves that strip entirely to the perpendicular axis
        return 0.5 * (math.sqrt(y * y + 4.0) - y)
    return y * y


def triangle_phase(x: float, y: float) -> PhaseRegion:
    """Winning axis for the triangle with side lengths x < y < 1."""
    if not (0.0 < x < y < 1.0 < x + y):
        raise OutOfDomain("need 0 < x < y < 1 < x + y")
    p1, p2 = triangle_psi1_sides(y), triangle_psi2_sides(y)
    on_boundary = min(abs(x - p1), abs(x - p2)) <= EPS_PHASE
    if x <= p1:
        return PhaseRegion("S", on_boundary)
    if x > p2:
        return PhaseRegion("L", on_boundary)
    return PhaseRegion("P", on_boundary)


# ------------------------------------------------- triangle, apex position

def triangle_psi1_xy(x: float) -> float:
    """Above this apex height the smallest-angle bisector wins."""
    if x <= _CONST.x0:
        return math.sqrt((-2.0 * x * x + 1.0 + math.sqrt(5.0 - 8.0 * x)) / 2.0)
    if x < 1.0 / SQRT2:
        return math.sqrt(max(1.0 - 4.0 * x ** 4, 0.0)) / (2.0 * x)
    return 0.0


def triangle_psi2_xy(x: float) -> float:
    """Below this apex height the perpendicular axis wins."""
    if x <= _CONST.x0:
        return math.sqrt(x * x * (3.0 - 2.0 * x) / (1.0 + 2.0 * x))
    if x < 1.0 / SQRT2:
        return math.sqrt(max(1.0 - 4.0 * x ** 4, 0.0)) / (2.0 * x)
    return 0.0


def triangle_phase_xy(x: float, y: float) -> PhaseRegion:
    """Winning axis for the triangle (0,0), (1,0), (x,y), apex in (x,y)."""
    if not (x > 0.5 and y > 0.0 and x * x + y * y < 1.0):
        raise OutOfDomain("need x > 1/2, y > 0, x^2 + y^2 < 1")
    p1, p2 = triangle_psi1_xy(x), triangle_psi2_xy(x)
    on_boundary = min(abs(y - p1), abs(y - p2)) <= EPS_PHASE
    if y >= p1:
        return PhaseRegion("S", on_boundary)
    if y < p2:
        return PhaseRegion("P", on_boundary)
    return PhaseRegion("L", on_boundary)


# -------------------------------------------------------- parallelograms

def _parallelogram_psi_tilde(r: float, first: bool) -> float:
    # in the y = -2 cos(theta) coordinate of the tie-curve algebra
    if r < SQRT2:
        if first:
            return r - 1.0 / r
        return 1.0 / r + math.sqrt(2.0 - r * r)
    return (-r * r + math.sqrt(r ** 4 + 6.0 * r * r - 7.0) + 1.0) / (2.0 * r)


def parallelogram_psi1(r: float) -> float:
    """Below this angle the diagonal bisector wins."""
    return math.acos(-0.5 * _parallelogram_psi_tilde(r, True))


def parallelogram_psi2(r: float) -> float:
    """Above this angle the John-ellipse axis wins."""
    return math.acos(-0.5 * _parallelogram_psi_tilde(r, False))


def parallelogram_phase(r: float, theta: float) -> PhaseRegion:
    """Winning axis for side ratio r and larger interior angle theta."""
    if not (r > 1.0 and math.pi / 2 < theta < math.pi):
        raise OutOfDomain("need r > 1 and pi/2 < theta < pi")
    p1, p2 = parallelogram_psi1(r), parallelogram_psi2(r)
    on_boundary = min(abs(theta - p1), abs(theta - p2)) <= EPS_PHASE
    if theta <= p1:
        return PhaseRegion("D", on_boundary)
    if theta >= p2:
        return PhaseRegion("J", on_boundary)
    return PhaseRegion("B", on_boundary)


# ------------------------------------------------------------ grid output

def _axis_angle_triangle(x, y, tag, by_sides):
    from .closed_form import candidate_axes

    T = TriangleShape(*sorted((x, y, 1.0))) if by_sides else None
    if by_sides:
        K = triangle_realization(T)
    else:
        from .geometry import ConvexPolygon

        K = ConvexPolygon([(0.0, 0.0), (1.0, 0.0), (x, y)])
    label = {"S": "bisector-smallest-angle", "L": "bisector-largest-angle",
             "P": "perp-longest-edge"}[tag]
    for cand_tag, th in candidate_axes(K):
        if cand_tag == label:
            return th
    return math.nan


_TRIANGLE_VALUE_KEYS = {"S": "bisector-smallest-angle",
                        "L": "bisector-largest-angle",
                        "P": "perp-longest-edge"}
_PARA_VALUE_KEYS = {"B": "edge-bisector", "D": "diagonal-bisector",
                    "J": "john-axis"}


def _grid_rows(family: str, resolution: int):
    rows = []
    if family == "parallelogram":
        for i in range(resolution):
            r = 1.0 + 3.0 * (i + 0.5) / resolution
            for j in range(resolution):
                theta = math.pi / 2 + (math.pi / 2) * (j + 0.5) / resolution
                region = parallelogram_phase(r, theta)
                vals = parallelogram_axis_values(ParallelogramShape(r, theta))
                alpha1 = vals[_PARA_VALUE_KEYS[region.tag]]
                axis_theta = _parallelogram_axis_angle(r, theta, region.tag)
                rows.append((r, theta, region.tag, alpha1, axis_theta))
    elif family == "triangle-sides":
        for j in range(resolution):
            y = 0.5 + 0.5 * (j + 0.5) / resolution
            for i in range(resolution):
                x = (1.0 - y) + (2.0 * y - 1.0) * (i + 0.5) / resolution
                region = triangle_phase(x, y)
                vals = triangle_axis_values(TriangleShape(x, y, 1.0))
                alpha1 = vals[_TRIANGLE_VALUE_KEYS[region.tag]]
                axis_theta = _axis_angle_triangle(x, y, region.tag, True)
                rows.append((x, y, region.tag, alpha1, axis_theta))
    elif family == "triangle-xy":
        for i in range(resolution):
            x = 0.5 + 0.5 * (i + 0.5) / resolution
            for j in range(resolution):
                ymax = math.sqrt(max(1.0 - x * x, 0.0))
                y = ymax * (j + 0.5) / resolution
                region = triangle_phase_xy(x, y)
                sides = sorted((math.hypot(x - 1.0, y), math.hypot(x, y), 1.0))
                vals = triangle_axis_values(TriangleShape(*sides))
                alpha1 = vals[_TRIANGLE_VALUE_KEYS[region.tag]]
                axis_theta = _axis_angle_triangle(x, y, region.tag, False)
                rows.append((x, y, region.tag, alpha1, axis_theta))
    else:
        raise ValueError(f"unknown family {family!r}")
    return rows


def _parallelogram_axis_angle(r, theta, tag):
    from .closed_form import candidate_axes

    K = parallelogram_realization(ParallelogramShape(r, theta))
    label = _PARA_VALUE_KEYS[tag]
    for cand_tag, th in candidate_axes(K):
        if cand_tag == label:
            return th
    return math.nan


def emit_grid(family: str, resolution: int, csv_path, svg_path=None) -> int:
    """Write the phase grid as CSV (and optionally SVG); returns row count."""
    if resolution < 16:
        raise ValueError("resolution must be at least 16")
    rows = _grid_rows(family, resolution)
    with open(csv_path, "w", newline="\n") as fh:
        fh.write("p1,p2,region,alpha1,axis_theta\n")
        for p1, p2, tag, alpha1, axis_theta in rows:
            fh.write(f"{p1:.12g},{p2:.12g},{tag},{alpha1:.12g},"
                     f"{axis_theta:.12g}\n")
    if svg_path is not None:
        _write_svg(svg_path, rows)
    return len(rows)


def _write_svg(path, rows) -> None:
    xs = [r[0] for r in rows]
    ys = [r[1] for r in rows]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad_x = 0.05 * (x1 - x0)
    pad_y = 0.05 * (y1 - y0)
    radius = max((x1 - x0), (y1 - y0)) / math.sqrt(len(rows)) * 0.7
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0 - pad_x:.6g} {y0 - pad_y:.6g} '
        f'{x1 - x0 + 2 * pad_x:.6g} {y1 - y0 + 2 * pad_y:.6g}">'
    ]
    for p1, p2, tag, _, _ in rows:
        # flip the vertical axis so larger p2 is higher on screen
        cy = y0 + y1 - p2
        lines.append(f'<circle cx="{p1:.6g}" cy="{cy:.6g}" r="{radius:.6g}" '
                     f'fill="{_REGION_COLORS[tag]}"/>')
    lines.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def john_axis_angle_canonical(z1: float, z2: float) -> float:
    """Convenience wrapper used by tests of the dual ellipse-axis derivation."""
    return john_axis(CanonicalParallelogram(z1, z2)).theta
