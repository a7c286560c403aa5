"""Fuzz-verification of the general inequalities between the asymmetry
measures, plus the explicit planar constants and the hull-of-disk-and-triangle
witness family whose asymmetry sweeps the whole range [1, 2].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .chirality import alpha1_numeric, asymmetry_alpha0
from .containment import distance_dD
from .geometry import ConvexPolygon, GeometryError, convex_hull, polar

EPS_BOUND = 1e-6
SQRT2 = math.sqrt(2.0)


class OutOfRange(GeometryError):
    pass


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: float
    rhs: float

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        return self.margin >= -EPS_BOUND


@dataclass(frozen=True)
class BoundReport:
    body_id: str
    alpha0: float
    alpha1: float
    alpha2: float
    checks: tuple = field(default=())

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_main_bounds(K: ConvexPolygon, body_id: str = "body") -> BoundReport:
    """1 <= alpha1 <= min{2, (alpha0+1)/2 * sqrt(2)}, alpha1 <= sqrt(2 alpha0),
    and alpha0 <= 2 (the planar simplex maximum)."""
    a0 = asymmetry_alpha0(K).value
    a1 = alpha1_numeric(K).value
    checks = (
        BoundCheck("alpha1-lower", 1.0, a1),
        BoundCheck("alpha1-upper-min", a1, min(2.0, (a0 + 1.0) / 2.0 * SQRT2)),
        BoundCheck("alpha1-upper-sqrt", a1, math.sqrt(2.0 * a0)),
        BoundCheck("alpha0-upper", a0, 2.0),
        BoundCheck("alpha0-lower", 1.0, a0),
    )
    return BoundReport(body_id, a0, a1, 1.0, checks)


def check_ratio_bound(K: ConvexPolygon, L: ConvexPolygon,
                      body_id: str = "pair") -> BoundReport:
    """Asymmetry ratios of two bodies are controlled by their mutual
    containment distance R(K,L)/r(K,L)."""
    dd = distance_dD(K, L)
    a1K = alpha1_numeric(K).value
    a1L = alpha1_numeric(L).value
    a0K = asymmetry_alpha0(K).value
    a0L = asymmetry_alpha0(L).value
    checks = (
        BoundCheck("ratio-alpha1", max(a1K / a1L, a1L / a1K), dd),
        BoundCheck("ratio-alpha0", max(a0K / a0L, a0L / a0K), dd),
    )
    return BoundReport(body_id, a0K, a1K, 1.0, checks)


def check_symmetry_relations(K: ConvexPolygon,
                             body_id: str = "body") -> BoundReport:
    """alpha_j / alpha_{2-j} ratios are bounded by alpha0; origin-symmetric
    bodies additionally satisfy alpha1(K) = alpha1(polar K) and
    alpha1 <= sqrt(2)."""
    a0 = asymmetry_alpha0(K).value
    a1 = alpha1_numeric(K).value
    a2 = 1.0
    checks = [
        BoundCheck("sym-a0-over-a2", a0 / a2, a0),
        BoundCheck("sym-a2-over-a0", a2 / a0, a0),
        BoundCheck("sym-a1-over-a1", 1.0, a0),
    ]
    if K.is_origin_symmetric():
        a1_polar = alpha1_numeric(polar(K)).value
        checks.append(BoundCheck("polar-identity", abs(a1 - a1_polar), 0.0))
        checks.append(BoundCheck("symmetric-sqrt2", a1, SQRT2))
    return BoundReport(body_id, a0, a1, a2, tuple(checks))


def eval_constants() -> dict:
    """The explicit planar bound constant, by two independent routes.

    The closed form is sqrt((13 - 11/u + u)/6) with u the cube root of
    631 + 54*sqrt(137).  Independently, eps solves
    sqrt(2(2 - eps)) = sqrt(2) * (1 + 3 eps / (1 - 2 eps)) on (0, 1/2)
    (decreasing left side, increasing right side) and the constant is the
    common value at the crossing.
    """
    u = (631.0 + 54.0 * math.sqrt(137.0)) ** (1.0 / 3.0)
    c_closed = math.sqrt((13.0 - 11.0 / u + u) / 6.0)

    def gap(eps):
        return SQRT2 * (1.0 + 3.0 * eps / (1.0 - 2.0 * eps)) \
            - math.sqrt(2.0 * (2.0 - eps))

    lo, hi = 0.0, 0.5 - 1e-12
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if gap(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    eps = 0.5 * (lo + hi)
    c_fixed = math.sqrt(2.0 * (2.0 - eps))
    return {"c21": c_closed, "c21_fixed_point": c_fixed, "eps21": eps,
            "s21": SQRT2}


def make_asymmetry_witness(beta: float, disk_sides: int = 720) -> ConvexPolygon:
    """Hull of a fine unit-disk polygon and a blown-up regular triangle.

    The triangle has circumradius 1 (so inradius 1/2); scaling it by
    beta in [1, 2] sweeps the asymmetry of the hull from 1 to 2.
    """
    if not 1.0 <= beta <= 2.0:
        raise OutOfRange("beta must lie in [1, 2]")
    if disk_sides < 12:
        raise OutOfRange("disk approximation too coarse")
    ang = 2.0 * math.pi * np.arange(disk_sides) / disk_sides
    disk = np.column_stack([np.cos(ang), np.sin(ang)])
    tri_ang = np.array([0.5, 7.0 / 6.0, 11.0 / 6.0]) * math.pi
    tri = beta * np.column_stack([np.cos(tri_ang), np.sin(tri_ang)])
    return convex_hull(np.vstack([disk, tri]))


def random_polygon(rng: np.random.Generator, n_min: int = 5,
                   n_max: int = 12) -> ConvexPolygon:
    """Hull of Gaussian samples, retried until the vertex count lands
    in [n_min, n_max]."""
    while True:
        n = int(rng.integers(n_max, 2 * n_max + 4))
        try:
            K = convex_hull(rng.normal(size=(n, 2)))
        except GeometryError:
            continue
        if n_min <= len(K) <= n_max:
            return K


def random_symmetric_polygon(rng: np.random.Generator,
                             half_points: int = 6) -> ConvexPolygon:
    """Hull of Gaussian samples mirrored through the origin."""
    while True:
        half = rng.normal(size=(half_points, 2))
        try:
            return convex_hull(np.vstack([half, -half]))
        except GeometryError:
            continue


def run_campaign(n_bodies: int = 100, n_pairs: int = 20,
                 seed: int = 0) -> list:
    """Reproducible fuzz sweep; returns one report per body or pair."""
    rng = np.random.default_rng(seed)
    reports = []
    for i in range(n_bodies):
        K = random_polygon(rng)
        reports.append(check_main_bounds(K, f"body-{i:04d}"))
    for i in range(n_pairs):
        K = random_polygon(rng)
        L = random_polygon(rng)
        reports.append(check_ratio_bound(K, L, f"pair-{i:04d}"))
    return reports


def write_report_csv(path, reports) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write("body_id,check,lhs,rhs,margin,pass\n")
        for rep in reports:
            for c in rep.checks:
                fh.write(f"{rep.body_id},{c.name},{c.lhs:.12g},{c.rhs:.12g},"
                         f"{c.margin:.12g},{str(c.passed).lower()}\n")
