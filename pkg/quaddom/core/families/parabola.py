"""
Parabola Family
===============
ψ(w) = 2w + iw² + ih + a/(w − ib) with

    2a + 2ab + a²/(4b²) = 1,     h = 2b + b² − a/(2b).

On the real line

    X(t) = 2t + at/(t² + b²),     Y(t) = t² + h + ab/(t² + b²).

X is odd and Y even. For positive t the boundary closes a loop exactly when
the critical point of Y lies strictly between the two critical points of X:

    Y′ = 0  at  t² = √(ab) − b²,
    X′ = 0  at  t² = ¼(a − 4b² ± √(a² − 16ab²)).

Small members tend to the unit circle together with the parabola y + 1 = (x/2)².
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

from ..confmap.boundary import Grading, trace_boundary
from ..confmap.univalence import check_univalence_boundary
from ..exceptions import NoPositiveRoot, NoSignChange, ParameterOutOfRange
from ..numerics.geometry import polyline_self_intersects
from ..numerics.roots import find_root_1d
from .solution import FamilyKind, FamilySolution, family_spec

logger = logging.getLogger(__name__)

__all__ = [
    "solve_family2",
    "family2_h",
    "Family2CriticalPoints",
    "family2_critical_points",
    "family2_loop_free",
    "family2_trace_loops",
]


def family2_h(a: float, b: float) -> float:
    """Shift h that puts the origin at ψ(−ib)."""
    return 2.0 * b + b**2 - a / (2.0 * b)


def solve_family2(b: float, check: bool = True) -> FamilySolution:
    """Parabola-family member for the pole height ``b``.

    The constraint is increasing in ``a`` on [0, 1/(2(1 + b))] and changes
    sign there, so the positive root is bracketed.

    Parameters
    ----------
    b : float
        Pole height, b > 0.
    check : bool
        Run the univalence screen and record its verdict. A failing screen
        keeps the member but flags it.

    Raises
    ------
    NoPositiveRoot
        If no positive root is bracketed.
    """
    b = float(b)
    if not (math.isfinite(b) and b > 0):
        raise ParameterOutOfRange(f"parabola family needs b > 0, got {b!r}")

    def constraint(a: float) -> float:
        return 2.0 * a + 2.0 * a * b + a**2 / (4.0 * b**2) - 1.0

    try:
        a = find_root_1d(constraint, 0.0, 1.0 / (2.0 * (1.0 + b)), tol=1e-13)
    except NoSignChange as exc:
        raise NoPositiveRoot(f"no positive a solves the parabola constraint for b = {b!r}") from exc
    if not a > 0:
        raise NoPositiveRoot(f"no positive a solves the parabola constraint for b = {b!r}")

    h = family2_h(a, b)
    spec = family_spec(FamilyKind.PARABOLA, a, b, h)
    univalent: Optional[bool] = None
    flag = ""
    if check:
        verdict = check_univalence_boundary(spec)
        univalent = verdict.passed
        if not verdict.passed:
            flag = f"univalence screen failed: {verdict.reason}"
            logger.warning("parabola member b=%g flagged: %s", b, verdict.reason)
    logger.debug("parabola member b=%g: a=%.12g h=%.12g", b, a, h)
    return FamilySolution(
        kind=FamilyKind.PARABOLA,
        param=b,
        a=a,
        b=b,
        h=h,
        spec=spec,
        derived={"a_over_b": a / b},
        univalent=univalent,
        flag=flag,
    )


@dataclass(frozen=True)
class Family2CriticalPoints:
    """Nonnegative t² values where X′ or Y′ vanish; absent entries are omitted or ``None``."""

    x_crit_tsq: tuple[float, ...]
    y_crit_tsq: Optional[float]

    def to_dict(self) -> dict:
        return {"X_crit_tsq": list(self.x_crit_tsq), "Y_crit_tsq": self.y_crit_tsq}


def family2_critical_points(a: float, b: float) -> Family2CriticalPoints:
    if not (a > 0 and b > 0):
        raise ParameterOutOfRange(f"critical points need a, b > 0, got a={a!r}, b={b!r}")
    y_tsq = math.sqrt(a * b) - b**2
    y_crit = y_tsq if y_tsq >= 0 else None

    disc = a**2 - 16.0 * a * b**2
    x_crit: tuple[float, ...] = ()
    if disc >= 0:
        root = math.sqrt(disc)
        candidates = (0.25 * (a - 4.0 * b**2 - root), 0.25 * (a - 4.0 * b**2 + root))
        x_crit = tuple(value for value in candidates if value >= 0)
    return Family2CriticalPoints(x_crit, y_crit)


def family2_loop_free(a: float, b: float) -> bool:
    """False exactly when Y′'s zero sits strictly between the two zeros of X′ (t > 0)."""
    crit = family2_critical_points(a, b)
    if len(crit.x_crit_tsq) < 2 or crit.y_crit_tsq is None:
        return True
    lo, hi = crit.x_crit_tsq
    return not (lo < crit.y_crit_tsq < hi)


def family2_trace_loops(
    a: float, b: float, h: Optional[float] = None, n: int = 4096, t_span: float = 1.0e3
) -> bool:
    """Whether the traced boundary of (a, b, h) self-intersects."""
    h = family2_h(a, b) if h is None else h
    spec = family_spec(FamilyKind.PARABOLA, a, b, h)
    trace = trace_boundary(spec, -t_span, t_span, n, Grading.TAN_GRADED)
    return bool(polyline_self_intersects(trace.to_polyline()))
