"""Reflection-asymmetry measures of a convex polygon.

alpha0 is the classical (Minkowski) asymmetry R(K, -K).  alpha1 minimizes
R(K, mirror image of K) over all mirror-line directions; the profile
theta -> R(K, Phi_theta(K)) is continuous and pi-periodic but has kinks where
the optimal contact pattern changes, so the global search is a dense grid
sweep followed by golden-section refinement of every near-optimal local
minimum.  alpha2 is identically 1 (reflecting across the whole plane is the
identity map).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _solver
from .containment import SolverFailure, circumradius
from .geometry import Axis, ConvexPolygon, axis_distance, halfplane_arrays

CLASSIFY_TOL = 1e-6  # radians, axis matching
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ChiralityResult:
    value: float
    axis: Axis | None
    classification: str
    # every label whose candidate axis value ties the minimum (>= 1 entry)
    ties: tuple = ()
    profile: np.ndarray | None = field(default=None, compare=False)


def asymmetry_alpha0(K: ConvexPolygon) -> ChiralityResult:
    """R(K, -K): 1 for point-symmetric bodies, 2 exactly for triangles."""
    value = circumradius(K, -K).lam
    tag = "identity" if abs(value - 1.0) <= 1e-9 else "numeric"
    return ChiralityResult(value, None, tag, (tag,))


def alpha2(K: ConvexPolygon) -> ChiralityResult:
    return ChiralityResult(1.0, None, "identity", ("identity",))


def chirality_profile(K: ConvexPolygon, theta: float) -> float:
    """R(K, mirror image of K across the axis at angle theta)."""
    val = _solver.profile_value(K.vertices, float(theta) % math.pi)
    if not math.isfinite(val):
        raise SolverFailure("profile LP failed")
    return float(val)


def _profile_functions(K: ConvexPolygon):
    """(grid_fn, point_fn); origin-symmetric bodies skip the translation LP."""
    verts = np.ascontiguousarray(K.vertices)
    if K.is_origin_symmetric():
        normals, offsets = halfplane_arrays(K)
        normals = np.ascontiguousarray(normals)

        def grid_fn(thetas):
            return _solver.profile_grid_symmetric(verts, normals, offsets, thetas)

        def point_fn(theta):
            return _solver.profile_value_symmetric(verts, normals, offsets, theta)

        return grid_fn, point_fn
    return (lambda thetas: _solver.profile_grid(verts, thetas),
            lambda theta: _solver.profile_value(verts, theta))


def _golden_min(f, lo, hi, tol):
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


def _parabolic_polish(f, theta, h, best_val):
    """One parabolic step; kept only if it does not worsen the value.

    Golden section stalls at ~sqrt(eps) from a smooth minimum because the
    profile is flat to second order there; a kink minimum would reject the
    step via the value guard.
    """
    f0, fm, fp = f(theta), f(theta - h), f(theta + h)
    denom = fm - 2.0 * f0 + fp
    if denom <= 0.0:
        return theta, best_val
    shift = 0.5 * h * (fm - fp) / denom
    if abs(shift) >= h:
        return theta, best_val
    cand = theta + shift
    fcand = f(cand)
    if fcand <= best_val + 1e-12:
        return cand, min(fcand, best_val)
    return theta, best_val


def alpha1_numeric(K: ConvexPolygon, grid: int = 2048,
                   refine_tol: float = 1e-10,
                   keep_profile: bool = False) -> ChiralityResult:
    """Global minimum of the reflection profile over axis angles [0, pi).

    Dense grid sweep, then golden-section refinement of every local minimum
    within 1e-3 of the best grid sample (near-ties between candidate axes
    would otherwise be missed), then classification of the optimal angle
    against the closed-form candidate axes when K is a triangle or
    parallelogram.
    """
    if grid < 16:
        raise ValueError("grid too coarse")
    grid_fn, point_fn = _profile_functions(K)
    thetas = np.arange(grid) * (math.pi / grid)
    vals = grid_fn(thetas)
    if not np.all(np.isfinite(vals)):
        raise SolverFailure("profile sweep produced non-finite values")
    step = math.pi / grid
    gmin = float(np.min(vals))
    # a kink minimum sampled half a step off can sit above the true value by
    # (local slope) * step / 2, so the near-tie window must scale with the
    # steepest observed grid increment
    margin = max(1e-3, 2.0 * float(np.max(np.abs(np.diff(
        np.append(vals, vals[0]))))))
    best_theta, best_val = 0.0, math.inf
    for i in range(grid):
        v = vals[i]
        if v <= vals[(i - 1) % grid] and v <= vals[(i + 1) % grid] \
                and v <= gmin + margin:
            th, fv = _golden_min(point_fn, thetas[i] - step, thetas[i] + step,
                                 refine_tol)
            th, fv = _parabolic_polish(point_fn, th, 1e-4, fv)
            if fv < best_val - 1e-15 or (abs(fv - best_val) <= 1e-15
                                         and th % math.pi < best_theta):
                best_theta, best_val = th % math.pi, fv
    axis = Axis(best_theta)
    tag, ties = _classify_axis(K, axis)
    profile = np.column_stack([thetas, vals]) if keep_profile else None
    return ChiralityResult(float(min(best_val, gmin)), axis, tag, ties, profile)


def _classify_axis(K: ConvexPolygon, axis: Axis):
    from .closed_form import candidate_axes  # deferred: closed_form uses ChiralityResult

    try:
        candidates = candidate_axes(K)
    except Exception:
        candidates = []
    hits = tuple(sorted({tag for tag, th in candidates
                         if axis_distance(axis.theta, th) <= CLASSIFY_TOL}))
    if hits:
        return hits[0], hits
    return "numeric", ("numeric",)
