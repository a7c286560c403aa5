"""Planar reflection-asymmetry toolkit.

Computes the asymmetry alpha0 (best containment of a body in its point
reflection) and the mirror asymmetry alpha1 (best containment in a reflected
copy, minimized over mirror-line directions) for convex polygons, together
with closed forms for triangles and parallelograms, phase diagrams of the
optimal mirror line, and fuzz checks of the general inequalities.
"""

from .bounds_lab import (BoundCheck, BoundReport, check_main_bounds,
                         check_ratio_bound, check_symmetry_relations,
                         eval_constants, make_asymmetry_witness,
                         random_polygon, random_symmetric_polygon)
from .chirality import (ChiralityResult, alpha1_numeric, alpha2,
                        asymmetry_alpha0, chirality_profile)
from .closed_form import (CanonicalParallelogram, DegenerateShape,
                          NotAParallelogram, NotATriangleOrParallelogram,
                          ParallelogramShape, TriangleShape, canonical_coords,
                          candidate_axes, john_axis, john_ellipse, john_lambda,
                          parallelogram_alpha1, parallelogram_axis_values,
                          parallelogram_realization, shape_from_vertices,
                          triangle_alpha1, triangle_axis_values,
                          triangle_realization)
from .containment import (ContainmentResult, SolverFailure, certify_optimality,
                          circumradius, distance_dD, inradius)
from .geometry import (Axis, ConvexPolygon, DegenerateInput, EllipseSpec,
                       GeometryError, Halfplane, OriginNotInterior, Point2,
                       ZeroDirection, area, centroid, convex_hull, diameter,
                       hausdorff, load_polygon, polar, reflect, save_polygon,
                       support, to_halfplanes)
from .phase_atlas import (OutOfDomain, PhaseConstants, PhaseRegion, emit_grid,
                          parallelogram_phase, solve_constants, triangle_phase,
                          triangle_phase_xy)

__version__ = "0.1.0"
