"""Optimal containment: smallest scaled translate of C covering K.

R(K, C) = min { lam : K subset t + lam*C } is computed by the compiled LP
kernel; this module wraps it with feasibility checks, touching-contact
extraction by slack inspection, and the optimality certificate (the touching
outward normals must not fit in an open halfplane, i.e. 0 lies in their
convex hull).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _solver
from .geometry import ConvexPolygon, Point2, diameter, halfplane_arrays

EPS_FEAS = 1e-9
# touching tolerance, relative to the diameter of C
EPS_TOUCH = 1e-7


class SolverFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class ContainmentResult:
    """Solution of K subset translation + lam * C with contact data."""

    lam: float
    translation: Point2
    touching_normals: tuple
    touching_pairs: tuple

    def scaled_copy_contains(self, K: ConvexPolygon, C: ConvexPolygon,
                             tol: float = EPS_FEAS) -> bool:
        normals, offsets = halfplane_arrays(C)
        t = self.translation.as_array()
        slack = (normals @ t)[None, :] + self.lam * offsets[None, :] \
            - K.vertices @ normals.T
        return bool(np.min(slack) >= -tol * max(1.0, self.lam) * diameter(C))


def circumradius(K: ConvexPolygon, C: ConvexPolygon) -> ContainmentResult:
    """Minimal dilation factor of C (allowing translation) that covers K."""
    status, lam, t1, t2 = _solver.circumradius_lp(K.vertices, C.vertices)
    if status != _solver.STATUS_OK or not math.isfinite(lam) or lam <= 0:
        raise SolverFailure(f"containment LP failed with status {status}")
    result = _attach_contacts(K, C, lam, Point2(t1, t2))
    if not result.scaled_copy_contains(K, C):
        raise SolverFailure("LP solution violates feasibility tolerance")
    return result


def _attach_contacts(K, C, lam, translation) -> ContainmentResult:
    """Touching pairs/normals by slack inspection of the solved position."""
    normals, offsets = halfplane_arrays(C)
    t = translation.as_array()
    slack = (normals @ t)[None, :] + lam * offsets[None, :] - K.vertices @ normals.T
    tol = EPS_TOUCH * max(1.0, lam) * diameter(C)
    pairs = []
    touching = []
    seen_edges = set()
    for k, i in zip(*np.nonzero(slack <= tol)):
        pairs.append((int(k), int(i)))
        if int(i) not in seen_edges:
            seen_edges.add(int(i))
            touching.append(Point2(float(normals[i, 0]), float(normals[i, 1])))
    return ContainmentResult(float(lam), translation, tuple(touching), tuple(pairs))


def certify_optimality(K: ConvexPolygon, C: ConvexPolygon,
                       result: ContainmentResult) -> bool:
    """True iff 0 is in the convex hull of the touching outward normals.

    In the plane this holds exactly when the normals do not all lie strictly
    inside an open halfplane: sorted by angle, no circular gap exceeds pi.
    """
    if len(result.touching_normals) < 2:
        return False
    ang = np.sort([math.atan2(n.y, n.x) for n in result.touching_normals])
    gaps = np.diff(ang, append=ang[0] + 2 * math.pi)
    return bool(np.max(gaps) <= math.pi + 1e-9)


def inradius(K: ConvexPolygon, C: ConvexPolygon) -> float:
    """Largest lam with a translate of lam*C inside K."""
    return 1.0 / circumradius(C, K).lam


def distance_dD(K: ConvexPolygon, C: ConvexPolygon) -> float:
    """R(K,C)/r(K,C): a multiplicative, symmetric similarity distance."""
    return circumradius(K, C).lam / inradius(K, C)
