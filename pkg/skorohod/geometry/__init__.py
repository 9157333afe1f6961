from .curve import BoundaryCurve, clip, split_edges, refine_polygon
from .index import BoundaryIndex
from .predicates import (is_symmetric, symmetry_defect, is_delta_convex,
                         upper_chains, is_simple, self_intersections,
                         contains, winding_number, is_starlike,
                         ray_crossings, hausdorff_distance, diagnostics)
from .aperture import circle_arcs, default_radii, aperture, hardy_number


__all__ = ["BoundaryCurve", "clip", "split_edges", "refine_polygon",
           "BoundaryIndex", "is_symmetric", "symmetry_defect",
           "is_delta_convex", "upper_chains", "is_simple",
           "self_intersections", "contains", "winding_number", "is_starlike",
           "ray_crossings", "hausdorff_distance", "diagnostics",
           "circle_arcs", "default_radii", "aperture", "hardy_number"]
