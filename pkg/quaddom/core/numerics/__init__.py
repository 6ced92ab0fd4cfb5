"""Numerical kernels: adaptive contour integration, root finding and polyline geometry."""
from .geometry import (
    Polyline,
    SelfIntersection,
    hausdorff_distance,
    point_segment_distance,
    polyline_self_intersects,
)
from .integration import (
    ToleranceSpec,
    integrate_circle,
    integrate_interval,
    integrate_real_line,
    integrate_segment,
    residue_numeric,
)
from .roots import cubic_discriminant, cubic_roots, find_root_1d

__all__ = [
    "ToleranceSpec",
    "integrate_segment",
    "integrate_circle",
    "integrate_real_line",
    "integrate_interval",
    "residue_numeric",
    "find_root_1d",
    "cubic_roots",
    "cubic_discriminant",
    "Polyline",
    "SelfIntersection",
    "polyline_self_intersects",
    "hausdorff_distance",
    "point_segment_distance",
]
