"""
Family Sweeps
=============
Solve a family over a parameter grid and collect one row per member:
parameters, univalence verdict, asymptote class, the weight of the single
point node and, optionally, the distance to the family's limit set.
Members that cannot be solved are kept as flagged rows.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import pandas as pd

from ..confmap.asymptote import classify_asymptote
from ..exceptions import ParameterOutOfRange, QuadDomError
from ..numerics.integration import ToleranceSpec
from ..quadrature.distribution import derive_distribution
from .conchoid import solve_family1, solve_family1_from_r
from .limits import DEFAULT_WINDOW, limit_distance
from .parabola import solve_family2
from .ray import solve_family3
from .solution import FamilyKind, FamilySolution

logger = logging.getLogger(__name__)

SWEEP_COLUMNS: list[str] = [
    "kind", "param_name", "param", "a", "b", "h", "univalent", "asymptote",
    "weight_re", "weight_im", "hausdorff", "type", "flag",
]

#: Accepted parameter names per family, the first one being the default
PARAMETER_NAMES: dict[FamilyKind, tuple[str, ...]] = {
    FamilyKind.CONCHOID: ("r", "b"),
    FamilyKind.PARABOLA: ("b",),
    FamilyKind.RAY: ("a",),
}

__all__ = [
    "SWEEP_COLUMNS",
    "PARAMETER_NAMES",
    "FamilySweep",
    "solve_member",
    "sweep_family",
    "failed_everywhere",
]


def solve_member(kind: FamilyKind, name: str, value: float) -> list[FamilySolution]:
    """Members for one grid value; the ray family may yield several (or none)."""
    if name not in PARAMETER_NAMES[kind]:
        raise ParameterOutOfRange(
            f"{kind.name.lower()} family is parametrized by {'/'.join(PARAMETER_NAMES[kind])}, "
            f"not {name!r}"
        )
    if kind is FamilyKind.CONCHOID:
        return [solve_family1_from_r(value) if name == "r" else solve_family1(value)]
    if kind is FamilyKind.PARABOLA:
        return [solve_family2(value)]
    return solve_family3(value, include_flagged=True)


def _member_row(solution: FamilySolution, name: str, limits: bool, window: float,
                tol: Optional[ToleranceSpec]) -> dict:
    row = solution.as_row()
    row["param_name"] = name
    row["asymptote"] = classify_asymptote(solution.spec).name
    try:
        node = derive_distribution(solution.spec, tol).points[0]
        row["weight_re"], row["weight_im"] = node.weights[0].real, node.weights[0].imag
    except QuadDomError as exc:
        row["flag"] = "; ".join(filter(None, [row["flag"], f"distribution: {exc}"]))
    if limits and solution.kind is not FamilyKind.RAY:
        row["hausdorff"] = limit_distance(solution, window)
    return row


@dataclass(frozen=True)
class FamilySweep:
    """Sweep table plus the members that solved without a flag, in grid order."""

    frame: pd.DataFrame
    members: tuple[FamilySolution, ...] = field(default_factory=tuple)


def sweep_family(
    kind: FamilyKind,
    params: Sequence[float],
    name: Optional[str] = None,
    limits: bool = False,
    window: float = DEFAULT_WINDOW,
    tol: Optional[ToleranceSpec] = None,
) -> FamilySweep:
    """Sweep ``kind`` over ``params`` (named ``name``), rows in grid order.

    A grid value whose solve raises is recorded with its message in ``flag``
    and NaN parameters; it does not stop the sweep.
    """
    kind = FamilyKind.parse(kind)
    name = name or PARAMETER_NAMES[kind][0]
    rows: list[dict] = []
    members_ok: list[FamilySolution] = []
    for value in params:
        try:
            members = solve_member(kind, name, float(value))
        except QuadDomError as exc:
            logger.warning("%s %s=%g failed: %s", kind.name.lower(), name, value, exc)
            rows.append({"kind": kind.name.lower(), "param_name": name, "param": float(value),
                         "flag": str(exc)})
            continue
        if not members:
            rows.append({"kind": kind.name.lower(), "param_name": name, "param": float(value),
                         "flag": "no admissible root"})
        for solution in members:
            row = _member_row(solution, name, limits, window, tol)
            logger.info("%s %s=%g: a=%.10g b=%.10g %s", kind.name.lower(), name, value,
                        solution.a, solution.b, row.get("flag") or "ok")
            rows.append(row)
            if not row.get("flag"):
                members_ok.append(solution)
    frame = pd.DataFrame(rows).reindex(columns=SWEEP_COLUMNS)
    frame["hausdorff"] = frame["hausdorff"].astype(float)
    return FamilySweep(frame, tuple(members_ok))


def failed_everywhere(frame: pd.DataFrame) -> bool:
    """True when no row of the sweep produced a usable member."""
    solved = frame["a"].notna() & frame["flag"].fillna("").eq("")
    return not bool(solved.any())
