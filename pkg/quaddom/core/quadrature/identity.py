"""
Quadrature Identity
===================
Three independent routes to ∫_Ω f dA for an admissible test function:

* the distribution T(f) (see :mod:`.distribution`),
* the boundary integral, Green's theorem pulled back to the real line,

      ∫_Ω f dA = −(1/2i) ∫_ℝ conj(ψ(t)) · f(ψ(t)) · ψ′(t) dt

  (ℍ₋ lies to the left of ℝ traversed from +∞ to −∞), and
* the brute-force area integral of f(ψ(w))·|ψ′(w)|² over ℍ₋.

:func:`verify_quadrature_identity` compares the first two and reports the gaps.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from ..confmap.boundary import Grading, trace_boundary
from ..confmap.domain import domain_contains
from ..confmap.evaluation import characteristic_scale, eval_map, eval_map_derivative
from ..confmap.map_spec import ConformalMapSpec
from ..exceptions import InadmissibleTestFunction, TruncationDominates
from ..numerics.integration import ToleranceSpec, integrate_interval, integrate_real_line
from ...validation.metrics import absolute_gap, gap_metric, relative_gap
from .distribution import QuadratureDistribution, evaluate_distribution
from .testfunctions import TestFunction, TestFunctionLike

logger = logging.getLogger(__name__)

#: Test-function poles closer than this to the boundary are rejected
BOUNDARY_CLEARANCE: float = 1.0e-8

#: Default truncation radius of the area integral
DEFAULT_PULLBACK_RADIUS: float = 500.0

#: Gauss-Legendre order per angular panel of the area integral
_ANGULAR_ORDER: int = 24

#: Number of geometrically shrinking angular panels at each end of (π, 2π)
_ANGULAR_LEVELS: int = 10

__all__ = [
    "screen_test_function",
    "boundary_quadrature_integral",
    "pullback_area_integral",
    "area_tail_bound",
    "IdentityRecord",
    "RejectedTestFunction",
    "VerificationReport",
    "verify_quadrature_identity",
]


# ---------------------------------------------------------------------------
# Admissibility
# ---------------------------------------------------------------------------

def screen_test_function(spec: ConformalMapSpec, f: TestFunctionLike) -> None:
    """Reject ``f`` unless every pole lies outside the closed domain.

    Raises
    ------
    InadmissibleTestFunction
        If a pole is inside Ω or within 1e-8 of its sampled boundary.
    """
    for z0 in f.poles:
        membership = domain_contains(spec, z0)
        if membership.inside:
            raise InadmissibleTestFunction(f"test-function pole {z0!r} lies inside the domain")
        if membership.boundary_distance < BOUNDARY_CLEARANCE:
            raise InadmissibleTestFunction(f"test-function pole {z0!r} lies on the boundary")


# ---------------------------------------------------------------------------
# Boundary route
# ---------------------------------------------------------------------------

def boundary_quadrature_integral(
    spec: ConformalMapSpec, f: TestFunctionLike, tol: Optional[ToleranceSpec] = None
) -> complex:
    """∫_Ω f dA by the boundary integral over the real line.

    The caller asserts that ``f`` is admissible (see :func:`screen_test_function`).

    Raises
    ------
    SlowDecay
        If ``f`` does not decay fast enough for the degree of q.
    """
    tol = tol or ToleranceSpec()

    def integrand(t: float) -> complex:
        w = complex(t)
        z = complex(eval_map(spec, w))
        return z.conjugate() * complex(f(z)) * complex(eval_map_derivative(spec, w))

    return -integrate_real_line(integrand, tol, scale=characteristic_scale(spec)) / 2j


# ---------------------------------------------------------------------------
# Area route
# ---------------------------------------------------------------------------

def area_tail_bound(spec: ConformalMapSpec, f: TestFunctionLike, R: float) -> float:
    """Leading-order size of the area integral outside the half-disk of radius ``R``.

    With q of degree d and leading coefficient A_d, each term c·(z − z0)^(−k)
    contributes |c|·π·d²·|A_d|^(2−k)·R^(2d−dk)/(dk − 2d).
    """
    d = spec.q.degree
    lead = abs(spec.q.leading)
    bound = 0.0
    for c, term in f.terms():
        k = term.k
        bound += abs(c) * math.pi * d**2 * lead ** (2 - k) * R ** (2 * d - d * k) / (d * k - 2 * d)
    return bound


def _angular_rule() -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes on (π, 2π), refined toward both ends."""
    half = 0.5 * math.pi
    steps = half * 2.0 ** -np.arange(_ANGULAR_LEVELS + 1)
    edges = np.unique(np.concatenate([
        [math.pi], math.pi + steps, 2.0 * math.pi - steps, [2.0 * math.pi]
    ]))
    x, wts = np.polynomial.legendre.leggauss(_ANGULAR_ORDER)
    lo, hi = edges[:-1, None], edges[1:, None]
    nodes = (0.5 * (hi - lo) * x + 0.5 * (hi + lo)).ravel()
    weights = (0.5 * (hi - lo) * wts).ravel()
    return nodes, weights


def _outer_breakpoints(spec: ConformalMapSpec, f: TestFunctionLike, R: float) -> list[float]:
    """Radii where the radial integrand peaks: pole moduli and boundary points nearest z0."""
    points = {abs(group.b) for group in spec.poles}
    trace = trace_boundary(spec, -R, R, 2048, Grading.TAN_GRADED)
    for z0 in f.poles:
        gap = np.abs(trace.points - z0)
        for side in (trace.params < 0, trace.params > 0):
            if side.any():
                points.add(abs(float(trace.params[side][np.argmin(gap[side])])))
    return sorted(p for p in points if 0.0 < p < R)


def pullback_area_integral(
    spec: ConformalMapSpec,
    f: TestFunctionLike,
    R: float = DEFAULT_PULLBACK_RADIUS,
    tol: Optional[ToleranceSpec] = None,
    include_tail: bool = True,
) -> complex:
    """∫_Ω f dA by substituting z = ψ(w), dA_z = |ψ′(w)|² dA_w.

    The half-disk ℍ₋ ∩ B_R is integrated in polar coordinates; the exterior is
    added through r = R/s unless ``include_tail`` is false, in which case the
    truncation estimate of :func:`area_tail_bound` must be within tolerance.

    Raises
    ------
    TruncationDominates
        If the exterior is skipped and its estimated size exceeds the tolerance.
    """
    tol = tol or ToleranceSpec(abs_tol=1e-10, rel_tol=1e-7)
    if not R > 0:
        raise ValueError(f"R must be positive, got {R!r}")
    theta, weights = _angular_rule()
    direction = np.exp(1j * theta)

    def ring(r: float) -> complex:
        w = r * direction
        density = f(np.asarray(eval_map(spec, w))) * np.abs(np.asarray(eval_map_derivative(spec, w))) ** 2
        return complex(np.dot(weights, density)) * r

    value = integrate_interval(ring, 0.0, R, tol, "half-disk", points=_outer_breakpoints(spec, f, R))
    tail_bound = area_tail_bound(spec, f, R)
    logger.debug("half-disk integral %s, tail bound %.3e (R = %g)", value, tail_bound, R)

    if include_tail:
        value += integrate_interval(lambda s: ring(R / s) * R / s**2, 0.0, 1.0, tol, "exterior")
    elif tail_bound > tol.bound(value):
        raise TruncationDominates(
            f"tail bound {tail_bound:.3e} exceeds the tolerance {tol.bound(value):.3e} at R = {R:g}"
        )
    return value


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityRecord:
    z0: complex
    k: int
    T_of_f: complex
    boundary_integral: complex
    abs_gap: float
    rel_gap: float

    def gap(self) -> float:
        """Relative gap, or the absolute one when T(f) is numerically zero."""
        return gap_metric(self.T_of_f, self.boundary_integral)

    def to_dict(self) -> dict:
        return {
            "z0": [self.z0.real, self.z0.imag],
            "k": self.k,
            "T_of_f": [self.T_of_f.real, self.T_of_f.imag],
            "boundary_integral": [self.boundary_integral.real, self.boundary_integral.imag],
            "abs_gap": self.abs_gap,
            "rel_gap": self.rel_gap if math.isfinite(self.rel_gap) else None,
        }


@dataclass(frozen=True)
class RejectedTestFunction:
    index: int
    z0: complex
    k: int
    reason: str

    def to_dict(self) -> dict:
        return {"index": self.index, "z0": [self.z0.real, self.z0.imag], "k": self.k,
                "reason": self.reason}


@dataclass(frozen=True)
class VerificationReport:
    records: tuple[IdentityRecord, ...]
    rejected: tuple[RejectedTestFunction, ...] = field(default_factory=tuple)
    threshold: float = 1e-8

    @property
    def passed(self) -> bool:
        if not self.records:
            return False
        return all(record.gap() < self.threshold for record in self.records)

    @property
    def max_gap(self) -> float:
        return max((record.gap() for record in self.records), default=0.0)

    def to_dict(self) -> dict:
        return {
            "version": 1,
            "verdict": "pass" if self.passed else "fail",
            "threshold": self.threshold,
            "records": [record.to_dict() for record in self.records],
            "rejected": [item.to_dict() for item in self.rejected],
        }


def verify_quadrature_identity(
    spec: ConformalMapSpec,
    T: QuadratureDistribution,
    fs: Sequence[TestFunction],
    tol: Optional[ToleranceSpec] = None,
    screen: bool = True,
) -> VerificationReport:
    """Compare T(f) with the boundary integral for every test function in ``fs``.

    Test functions whose pole fails the outside-domain screen are listed in
    ``rejected`` and skipped. The verdict passes when every gap (relative,
    or absolute when |T(f)| < 1e-12) is below ``tol.rel_tol``; the boundary
    integral itself runs ten times tighter.
    """
    tol = tol or ToleranceSpec(rel_tol=1e-8)
    inner = tol.tightened(10.0)
    records: list[IdentityRecord] = []
    rejected: list[RejectedTestFunction] = []
    for index, f in enumerate(fs):
        if screen:
            try:
                screen_test_function(spec, f)
            except InadmissibleTestFunction as exc:
                logger.warning("test function %d rejected: %s", index, exc)
                rejected.append(RejectedTestFunction(index, f.z0, f.k, str(exc)))
                continue
        t_value = evaluate_distribution(T, f, inner)
        b_value = boundary_quadrature_integral(spec, f, inner)
        record = IdentityRecord(
            z0=f.z0,
            k=f.k,
            T_of_f=t_value,
            boundary_integral=b_value,
            abs_gap=absolute_gap(t_value, b_value),
            rel_gap=relative_gap(t_value, b_value),
        )
        logger.info("f(z) = (z - %s)^-%d: T(f) = %s, gap %.3e", f.z0, f.k, t_value, record.gap())
        records.append(record)
    report = VerificationReport(tuple(records), tuple(rejected), threshold=tol.rel_tol)
    if not records:
        logger.warning("no admissible test functions; nothing was verified")
        return report
    logger.info("quadrature identity %s (max gap %.3e over %d function(s))",
                "verified" if report.passed else "FAILED", report.max_gap, len(records))
    return report

