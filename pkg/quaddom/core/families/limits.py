"""
Family Limits
=============
Distance between a family member's boundary and the limit set of its family:

* Conchoid:  the unit circle together with the line y = −1,
* Parabola:  the unit circle together with the parabola y = (x/2)² − 1.

Both curves are unbounded, so they are compared inside the window |x| ≤ W,
after densifying the traced boundary to a fixed spacing.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..confmap.boundary import Grading, trace_boundary
from ..exceptions import UnsupportedKind
from ..numerics.geometry import Polyline, hausdorff_distance
from .conchoid import solve_family1_from_r
from .parabola import solve_family2
from .solution import FamilyKind, FamilySolution

logger = logging.getLogger(__name__)

DEFAULT_WINDOW: float = 5.0
DEFAULT_SPACING: float = 1.0e-2

#: Traced parameter span as a multiple of the window
_SPAN_FACTOR: float = 10.0

__all__ = [
    "LimitRecord",
    "limit_curves",
    "limit_set",
    "clipped_boundary",
    "limit_distance",
    "family_limit_report",
]


def _check_kind(kind: FamilyKind) -> None:
    if kind is FamilyKind.RAY:
        raise UnsupportedKind("the ray family has no circle-and-curve limit")


def limit_curves(kind: FamilyKind, window: float = DEFAULT_WINDOW,
                 spacing: float = DEFAULT_SPACING) -> tuple[np.ndarray, np.ndarray]:
    """The closed unit circle and the line or parabola inside |x| ≤ ``window``."""
    _check_kind(kind)
    n_circle = max(64, math.ceil(2.0 * math.pi / spacing))
    circle = np.exp(2j * math.pi * np.arange(n_circle + 1) / n_circle)
    x = np.linspace(-window, window, 2 * max(2, math.ceil(window / spacing)) + 1)
    y = np.full_like(x, -1.0) if kind is FamilyKind.CONCHOID else (0.5 * x) ** 2 - 1.0
    curve = Polyline.from_xy(x, y).densified(spacing).points
    return circle, curve


def limit_set(kind: FamilyKind, window: float = DEFAULT_WINDOW,
              spacing: float = DEFAULT_SPACING) -> np.ndarray:
    """Dense sample of the limit set inside |x| ≤ ``window``."""
    return np.concatenate(limit_curves(kind, window, spacing))


def clipped_boundary(solution: FamilySolution, window: float = DEFAULT_WINDOW,
                     n_trace: int = 4096, spacing: float = DEFAULT_SPACING) -> np.ndarray:
    """Traced boundary points with |x| ≤ ``window``, densified to ``spacing``."""
    span = _SPAN_FACTOR * window
    trace = trace_boundary(solution.spec, -span, span, n_trace, Grading.TAN_GRADED)
    pieces = []
    for run in trace.window_runs((-window, window)):
        pieces.append(Polyline.from_points(run).densified(spacing).points if run.size > 1 else run)
    if not pieces:
        raise ValueError(f"no boundary point within |x| <= {window}")
    return np.concatenate(pieces)


def limit_distance(solution: FamilySolution, window: float = DEFAULT_WINDOW,
                   n_trace: int = 4096, spacing: float = DEFAULT_SPACING) -> float:
    _check_kind(solution.kind)
    boundary = clipped_boundary(solution, window, n_trace, spacing)
    return hausdorff_distance(boundary, limit_set(solution.kind, window, spacing))


@dataclass(frozen=True)
class LimitRecord:
    param: float
    hausdorff: float

    def to_dict(self) -> dict:
        return {"param": self.param, "hausdorff": self.hausdorff}


def family_limit_report(
    kind: FamilyKind,
    params: Sequence[float],
    n_trace: int = 4096,
    window: float = DEFAULT_WINDOW,
    spacing: float = DEFAULT_SPACING,
) -> list[LimitRecord]:
    """Hausdorff distance to the limit set for each parameter, in input order.

    Conchoid members are given by r, parabola members by b.

    Raises
    ------
    UnsupportedKind
        For the ray family.
    """
    kind = FamilyKind.parse(kind)
    _check_kind(kind)
    records = []
    for param in params:
        if kind is FamilyKind.CONCHOID:
            solution = solve_family1_from_r(param)
        else:
            solution = solve_family2(param, check=False)
        distance = limit_distance(solution, window, n_trace, spacing)
        logger.info("%s param=%g: distance to limit %.6g", kind.name.lower(), param, distance)
        records.append(LimitRecord(float(param), distance))
    return records
