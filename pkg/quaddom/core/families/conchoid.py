"""
Conchoid Family
===============
ψ(w) = w + ih + a/(w − ib) with

    a + a²/(4b²) = 1,     h = b − a/(2b).

Writing r = a/(2b) and α = b, the boundary is the Conchoid of de Sluze

    (y + r − α)(x² + (y + r)²) = 2r (y + r)²,     α = ½(1/r − r),

which tends to the unit circle together with the line y = −1 as r → 1.
"""
from __future__ import annotations

import logging
import math

import numpy as np

from ..exceptions import ParameterOutOfRange
from .solution import FamilyKind, FamilySolution, family_spec

logger = logging.getLogger(__name__)

__all__ = ["solve_family1", "solve_family1_from_r", "conchoid_residual"]


def solve_family1(b: float) -> FamilySolution:
    """Conchoid member for the pole height ``b > 0``.

    The positive root of a²/(4b²) + a − 1 = 0 is taken in the cancellation-free
    form a = 2b / (b + √(b² + 1)).

    Raises
    ------
    ParameterOutOfRange
        If ``b`` is not a positive finite number.
    """
    b = float(b)
    if not (math.isfinite(b) and b > 0):
        raise ParameterOutOfRange(f"Conchoid family needs b > 0, got {b!r}")
    a = 2.0 * b / (b + math.hypot(b, 1.0))
    h = b - a / (2.0 * b)
    r = a / (2.0 * b)
    logger.debug("Conchoid member b=%g: a=%.12g h=%.12g r=%.12g", b, a, h, r)
    return FamilySolution(
        kind=FamilyKind.CONCHOID,
        param=b,
        a=a,
        b=b,
        h=h,
        spec=family_spec(FamilyKind.CONCHOID, a, b, h),
        derived={"r": r, "alpha": b},
        univalent=True,
    )


def solve_family1_from_r(r: float) -> FamilySolution:
    """Conchoid member by its shape parameter ``0 < r < 1`` (b = α = ½(1/r − r))."""
    r = float(r)
    if not 0.0 < r < 1.0:
        raise ParameterOutOfRange(f"Conchoid parameter r must lie in (0, 1), got {r!r}")
    solution = solve_family1(0.5 * (1.0 / r - r))
    return FamilySolution(
        kind=solution.kind,
        param=r,
        a=solution.a,
        b=solution.b,
        h=solution.h,
        spec=solution.spec,
        derived=solution.derived,
        univalent=solution.univalent,
    )


def conchoid_residual(x, y, alpha: float, r: float):
    """(y + r − α)(x² + (y + r)²) − 2r(y + r)²; zero exactly on the curve."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    shifted = y + r
    value = (shifted - alpha) * (x**2 + shifted**2) - 2.0 * r * shifted**2
    return float(value) if value.ndim == 0 else value
