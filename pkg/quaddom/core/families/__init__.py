"""The three one-parameter families of quadrature domains for πδ₀."""
from .conchoid import conchoid_residual, solve_family1, solve_family1_from_r
from .limits import LimitRecord, family_limit_report, limit_curves, limit_distance, limit_set
from .parabola import (
    Family2CriticalPoints,
    family2_critical_points,
    family2_h,
    family2_loop_free,
    family2_trace_loops,
    solve_family2,
)
from .ray import A_MAX, Family3Type, family3_positive_roots, family3_type, solve_family3
from .solution import (
    FamilyKind,
    FamilySolution,
    constraint_residuals,
    family_spec,
    family_theta_boundary,
)
from .sweep import (
    PARAMETER_NAMES,
    SWEEP_COLUMNS,
    FamilySweep,
    failed_everywhere,
    solve_member,
    sweep_family,
)

__all__ = [
    "FamilyKind",
    "FamilySolution",
    "family_spec",
    "constraint_residuals",
    "family_theta_boundary",
    "solve_family1",
    "solve_family1_from_r",
    "conchoid_residual",
    "solve_family2",
    "family2_h",
    "Family2CriticalPoints",
    "family2_critical_points",
    "family2_loop_free",
    "family2_trace_loops",
    "A_MAX",
    "Family3Type",
    "family3_type",
    "family3_positive_roots",
    "solve_family3",
    "LimitRecord",
    "limit_curves",
    "limit_set",
    "limit_distance",
    "family_limit_report",
    "PARAMETER_NAMES",
    "SWEEP_COLUMNS",
    "FamilySweep",
    "solve_member",
    "sweep_family",
    "failed_everywhere",
]
