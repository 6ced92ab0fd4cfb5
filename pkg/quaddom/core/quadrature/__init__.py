"""Quadrature distributions, the quadrature identity and Cauchy transforms."""
from .cauchy import (
    CompactDensity,
    DbarCheck,
    cauchy_kernel,
    cauchy_transform_compact,
    dbar_contour_check,
    generalized_cauchy_transform,
)
from .distribution import (
    PointNode,
    QuadratureDistribution,
    SegmentNode,
    chain_from_charges,
    derive_distribution,
    evaluate_distribution,
    log_to_segments,
    residue_radius,
    schwarz_residue,
)
from .identity import (
    IdentityRecord,
    RejectedTestFunction,
    VerificationReport,
    area_tail_bound,
    boundary_quadrature_integral,
    pullback_area_integral,
    screen_test_function,
    verify_quadrature_identity,
)
from .testfunctions import CombinedTestFunction, TestFunction

__all__ = [
    "TestFunction",
    "CombinedTestFunction",
    "PointNode",
    "SegmentNode",
    "QuadratureDistribution",
    "derive_distribution",
    "evaluate_distribution",
    "schwarz_residue",
    "residue_radius",
    "log_to_segments",
    "chain_from_charges",
    "screen_test_function",
    "boundary_quadrature_integral",
    "pullback_area_integral",
    "area_tail_bound",
    "IdentityRecord",
    "RejectedTestFunction",
    "VerificationReport",
    "verify_quadrature_identity",
    "CompactDensity",
    "cauchy_kernel",
    "cauchy_transform_compact",
    "generalized_cauchy_transform",
    "DbarCheck",
    "dbar_contour_check",
]
