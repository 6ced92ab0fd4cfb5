"""Conformal maps from the lower half-plane: map definitions, evaluation, boundary tracing and screens."""
from .asymptote import (
    AsymptoteClass,
    LineAsymptote,
    ParabolaAsymptote,
    RayAsymptote,
    asymptote_deviation,
    classify_asymptote,
)
from .boundary import BoundaryTrace, Grading, trace_boundary
from .domain import DomainMembership, domain_contains
from .evaluation import (
    characteristic_scale,
    eval_map,
    eval_map_derivative,
    eval_star,
    segment_log_term,
)
from .map_spec import (
    ConformalMapSpec,
    PoleGroup,
    QuadraticPoly,
    SegmentChain,
    null_domain_spec,
)
from .univalence import UnivalenceVerdict, check_univalence_boundary, critical_points

__all__ = [
    "QuadraticPoly",
    "PoleGroup",
    "SegmentChain",
    "ConformalMapSpec",
    "null_domain_spec",
    "eval_map",
    "eval_map_derivative",
    "eval_star",
    "segment_log_term",
    "characteristic_scale",
    "Grading",
    "BoundaryTrace",
    "trace_boundary",
    "AsymptoteClass",
    "LineAsymptote",
    "ParabolaAsymptote",
    "RayAsymptote",
    "classify_asymptote",
    "asymptote_deviation",
    "critical_points",
    "UnivalenceVerdict",
    "check_univalence_boundary",
    "DomainMembership",
    "domain_contains",
]
