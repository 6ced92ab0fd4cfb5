"""
Univalence Screen
=================
Necessary conditions for ψ to be injective on the closed lower half-plane:

1. the traced boundary ψ(ℝ) has no self-intersection, and
2. ψ′ has no zero in the closed lower half-plane.

ψ′ is rational, so its zeros are found exactly as roots of the numerator
polynomial over the common denominator of the pole and chain terms. Passing
both checks is evidence for univalence, not a proof.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from numpy.polynomial import Polynomial

from ..numerics.geometry import polyline_self_intersects
from .boundary import Grading, trace_boundary
from .evaluation import eval_map
from .map_spec import ConformalMapSpec

logger = logging.getLogger(__name__)

#: Smallest sample count accepted by the boundary screen
MIN_SCREEN_POINTS: int = 1024

#: Critical points with Im(w) at or below this (scaled) value count as lying in ℍ₋
CRITICAL_TOLERANCE: float = 1.0e-10

#: Roots of the numerator this close to a pole or node are cancellations, not zeros of ψ′
_CANCELLATION_DISTANCE: float = 1.0e-8

__all__ = ["critical_points", "UnivalenceVerdict", "check_univalence_boundary"]


def _denominator_roots(spec: ConformalMapSpec) -> Counter:
    roots: Counter = Counter()
    for group in spec.poles:
        roots[group.b] += group.order + 1
    for d in spec.chain_nodes():
        roots[d] = 1
    return roots


def _fromroots(roots: Counter, drop: Optional[complex] = None, times: int = 0) -> Polynomial:
    remaining = roots.copy()
    if drop is not None:
        remaining[drop] -= times
    flat = [r for r, count in remaining.items() for _ in range(count)]
    return Polynomial.fromroots(flat) if flat else Polynomial([1.0])


def critical_points(spec: ConformalMapSpec) -> np.ndarray:
    """All zeros of ψ′ in the finite plane, sorted by imaginary part."""
    roots = _denominator_roots(spec)
    q_prime = Polynomial([spec.q.A1, 2.0 * spec.q.A2])
    numerator = q_prime * _fromroots(roots)
    for group in spec.poles:
        for j, coeff in enumerate(group.coeffs):
            numerator = numerator - (j + 1) * coeff * _fromroots(roots, group.b, j + 2)
    for chain in spec.segments:
        for d_from, d_to, c in chain.segments():
            numerator = numerator + c * (_fromroots(roots, d_from, 1) - _fromroots(roots, d_to, 1))

    numerator = numerator.trim()
    if numerator.degree() < 1:
        return np.array([], dtype=complex)
    zeros = np.asarray(numerator.roots(), dtype=complex)
    singular = np.array(list(roots), dtype=complex)
    if singular.size:
        gap = np.min(np.abs(zeros[:, None] - singular[None, :]), axis=1)
        zeros = zeros[gap > _CANCELLATION_DISTANCE]
    return zeros[np.argsort(zeros.imag)]


@dataclass(frozen=True)
class UnivalenceVerdict:
    """Result of :func:`check_univalence_boundary`.

    ``location`` is the z-plane point of the first failure: a boundary
    crossing, or the image of a critical point in the closed lower half-plane.
    """

    passed: bool
    reason: str = ""
    location: Optional[complex] = None
    critical_points: tuple[complex, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out: dict = {"verdict": "pass" if self.passed else "fail"}
        if not self.passed:
            out["reason"] = self.reason
            if self.location is not None:
                out["location"] = [self.location.real, self.location.imag]
        return out


def check_univalence_boundary(
    spec: ConformalMapSpec, n: int = 4096, t_span: float = 1.0e3
) -> UnivalenceVerdict:
    """Screen ``spec`` for univalence on the closed lower half-plane.

    Parameters
    ----------
    spec : ConformalMapSpec
        Map to screen.
    n : int
        Tan-graded trace resolution (at least 1024).
    t_span : float
        The trace covers ``[-t_span, t_span]``.
    """
    if n < MIN_SCREEN_POINTS:
        raise ValueError(f"univalence screen needs n >= {MIN_SCREEN_POINTS}, got {n}")
    if not t_span > 0:
        raise ValueError(f"t_span must be positive, got {t_span!r}")

    crit = critical_points(spec)
    crit_list = tuple(complex(c) for c in crit)
    trace = trace_boundary(spec, -t_span, t_span, n, Grading.TAN_GRADED)
    crossing = polyline_self_intersects(trace.to_polyline())
    if crossing:
        logger.info("boundary self-intersects near %s", crossing.location)
        return UnivalenceVerdict(False, "boundary self-intersection", crossing.location, crit_list)

    lower = crit[crit.imag <= CRITICAL_TOLERANCE * (1.0 + np.abs(crit))]
    if lower.size:
        w = complex(lower[0])
        logger.info("derivative vanishes at w = %s in the closed lower half-plane", w)
        return UnivalenceVerdict(False, "critical point in closed lower half-plane",
                                 complex(eval_map(spec, w)), crit_list)
    return UnivalenceVerdict(True, critical_points=crit_list)
