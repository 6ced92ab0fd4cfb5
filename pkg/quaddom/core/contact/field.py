"""
Contact-Surface Field
=====================
Two layers of constant density meet along a curve Γ inside the strip
h₁ ≤ y ≤ h₂, with Γ approaching the line y = h at both ends. Above the
strip the complex field of the density contrast σ is

    F(z) = −(σ/2πi) ∫_ℝ (conj ψ(t) − ψ(t) + 2ih) ψ′(t) / (ψ(t) − z) dt

for Γ = ψ(ℝ) traversed with increasing t (the lower layer on its right).
Because conj ψ = ψ* on the real line and ψ* extends to the lower half-plane,
the same field is a finite sum over the singularities of the Schwarz
function,

    F(z) = σ Σ_k Res_{b̄_k} [ψ* ψ′ / (ψ − z)] + σ Σ c̄_k ∫_{d̄_k}^{d̄_{k+1}} ψ′ / (ψ − z) ds,

so any two curves sharing their Schwarz singularities produce the same
field above the strip.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd

from ..confmap.asymptote import LineAsymptote, classify_asymptote
from ..confmap.boundary import Grading, trace_boundary
from ..confmap.evaluation import characteristic_scale, eval_map, eval_map_derivative, eval_star
from ..confmap.map_spec import ConformalMapSpec
from ..exceptions import (
    ContourCollision,
    EvaluationBelowStrip,
    SlowDecay,
    StripViolation,
    UnsupportedKind,
)
from ..numerics.geometry import Polyline
from ..numerics.integration import ToleranceSpec, integrate_real_line, integrate_segment, residue_numeric
from ..quadrature.distribution import residue_radius
from ...validation.metrics import absolute_gap, gap_metric, relative_gap

logger = logging.getLogger(__name__)

#: Parameters |t| at which the approach to the asymptote is sampled
_DEVIATION_PROBES: tuple[float, float] = (1.0e4, 1.0e5)

#: Points on a residue contour used for the winding-number test
_WINDING_SAMPLES: int = 256

#: Trace used to locate the strip of a map-defined curve
_STRIP_TRACE_POINTS: int = 4096
_STRIP_TRACE_SPAN: float = 1.0e3

__all__ = [
    "ContactConfig",
    "contact_field_boundary",
    "contact_field_residue",
    "ContactRecord",
    "ContactReport",
    "contact_equivalence_report",
    "CrossMemberReport",
    "cross_member_deviation",
]


@dataclass(frozen=True, eq=False)
class ContactConfig:
    """Contact curve Γ with density contrast ``sigma`` and asymptote height ``h``.

    ``curve`` is either a map (Γ = ψ(ℝ)) or a raw polyline ordered along Γ.
    """

    sigma: float
    h: float
    strip: tuple[float, float]
    curve: Union[ConformalMapSpec, Polyline]

    def __post_init__(self) -> None:
        h1, h2 = (float(v) for v in self.strip)
        if not h1 <= h2:
            raise ValueError(f"strip must satisfy h1 <= h2, got ({h1!r}, {h2!r})")
        if not math.isfinite(self.sigma):
            raise ValueError(f"sigma must be finite, got {self.sigma!r}")
        if not h1 - 1e-12 <= self.h <= h2 + 1e-12:
            raise StripViolation(f"asymptote height {self.h!r} lies outside the strip [{h1}, {h2}]")
        object.__setattr__(self, "strip", (h1, h2))

    @property
    def is_map(self) -> bool:
        return isinstance(self.curve, ConformalMapSpec)

    @classmethod
    def from_spec(
        cls,
        spec: ConformalMapSpec,
        sigma: float = 1.0,
        strip: Optional[tuple[float, float]] = None,
    ) -> ContactConfig:
        """Configuration for Γ = ψ(ℝ); h is read from q, the strip from a trace.

        Raises
        ------
        UnsupportedKind
            If the boundary has no horizontal asymptotic line.
        StripViolation
            If an explicit ``strip`` does not contain the traced curve.
        """
        asymptote = classify_asymptote(spec)
        if not isinstance(asymptote, LineAsymptote) or abs(asymptote.direction.imag) > 1e-12:
            raise UnsupportedKind(f"contact curves need a horizontal asymptotic line, got {asymptote.name}")
        h = float(asymptote.offset.imag)
        trace = trace_boundary(spec, -_STRIP_TRACE_SPAN, _STRIP_TRACE_SPAN, _STRIP_TRACE_POINTS,
                               Grading.TAN_GRADED)
        low, high = float(min(trace.y.min(), h)), float(max(trace.y.max(), h))
        if strip is None:
            strip = (low, high)
        elif low < strip[0] - 1e-12 or high > strip[1] + 1e-12:
            raise StripViolation(f"curve spans y in [{low:.6g}, {high:.6g}], outside the strip {strip}")
        return cls(float(sigma), h, strip, spec)

    @classmethod
    def from_polyline(
        cls,
        curve: Polyline,
        sigma: float = 1.0,
        h: Optional[float] = None,
        strip: Optional[tuple[float, float]] = None,
    ) -> ContactConfig:
        """Configuration for a sampled curve; h defaults to the mean height of its two ends."""
        if h is None:
            h = 0.5 * float(curve.y[0] + curve.y[-1])
        low, high = float(curve.y.min()), float(curve.y.max())
        if strip is None:
            strip = (low, high)
        elif low < strip[0] - 1e-12 or high > strip[1] + 1e-12:
            raise StripViolation(f"curve spans y in [{low:.6g}, {high:.6g}], outside the strip {strip}")
        return cls(float(sigma), float(h), strip, curve)


def _check_above(cfg: ContactConfig, z: complex) -> None:
    if not z.imag > cfg.strip[1]:
        raise EvaluationBelowStrip(f"z = {z!r} is not above the strip top h2 = {cfg.strip[1]!r}")


def _check_asymptote(spec: ConformalMapSpec, h: float) -> None:
    """The heights must keep approaching h between the two probe radii."""
    near, far = _DEVIATION_PROBES
    for sign in (-1.0, 1.0):
        dev_near = abs(complex(eval_map(spec, sign * near)).imag - h)
        dev_far = abs(complex(eval_map(spec, sign * far)).imag - h)
        if dev_far > dev_near and dev_far > 1e-12:
            raise SlowDecay(f"boundary does not approach y = {h!r} (deviation {dev_far:.3e} at t = {sign * far:g})")


def contact_field_boundary(cfg: ContactConfig, z: complex, tol: Optional[ToleranceSpec] = None) -> complex:
    """F(z) by the Cauchy integral along Γ.

    Map curves are integrated over the whole real line; raw polylines use the
    trapezoid rule over their vertices, so the ends beyond the sampled range
    are dropped.

    Raises
    ------
    EvaluationBelowStrip
        If Im z does not exceed the strip top.
    SlowDecay
        If the map's boundary does not settle onto its asymptote.
    """
    z = complex(z)
    _check_above(cfg, z)
    if cfg.sigma == 0:
        return 0j
    prefactor = -cfg.sigma / (2j * math.pi)
    two_ih = 2j * cfg.h

    if isinstance(cfg.curve, Polyline):
        zeta = cfg.curve.points
        g = (np.conj(zeta) - zeta + two_ih) / (zeta - z)
        return complex(prefactor * np.sum(0.5 * (g[1:] + g[:-1]) * np.diff(zeta)))

    spec = cfg.curve
    tol = tol or ToleranceSpec()
    _check_asymptote(spec, cfg.h)

    def integrand(t: float) -> complex:
        zeta = complex(eval_map(spec, t))
        return (zeta.conjugate() - zeta + two_ih) * complex(eval_map_derivative(spec, t)) / (zeta - z)

    return prefactor * integrate_real_line(integrand, tol, scale=characteristic_scale(spec))


def _winding_number(spec: ConformalMapSpec, centre: complex, radius: float, z: complex) -> int:
    w = centre + radius * np.exp(2j * math.pi * np.arange(_WINDING_SAMPLES + 1) / _WINDING_SAMPLES)
    phase = np.unwrap(np.angle(np.asarray(eval_map(spec, w)) - z))
    return int(round((phase[-1] - phase[0]) / (2.0 * math.pi)))


def contact_field_residue(cfg: ContactConfig, z: complex, tol: Optional[ToleranceSpec] = None) -> complex:
    """F(z) from the singularities of the Schwarz function.

    Raises
    ------
    UnsupportedKind
        If the curve is a raw polyline (no Schwarz data).
    ContourCollision
        If ψ takes the value z inside a residue contour.
    """
    if not cfg.is_map:
        raise UnsupportedKind("the residue route needs a map-defined curve")
    z = complex(z)
    _check_above(cfg, z)
    if cfg.sigma == 0:
        return 0j
    spec: ConformalMapSpec = cfg.curve
    tol = tol or ToleranceSpec()

    def kernel(w):
        return eval_star(spec, w) * eval_map_derivative(spec, w) / (eval_map(spec, w) - z)

    total = 0j
    for index, group in enumerate(spec.poles):
        radius = residue_radius(spec, index)
        if _winding_number(spec, group.preimage, radius, z) != 0:
            raise ContourCollision(f"preimage of z = {z!r} lies inside the contour around {group.preimage!r}")
        total += residue_numeric(kernel, group.preimage, radius, tol)

    for chain in spec.segments:
        for d_from, d_to, c in chain.segments():
            part = integrate_segment(
                lambda s: eval_map_derivative(spec, s) / (eval_map(spec, s) - z),
                d_from.conjugate(), d_to.conjugate(), tol,
            )
            total += c.conjugate() * part
    return cfg.sigma * total


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContactRecord:
    z: complex
    boundary: complex
    residue: Optional[complex]

    @property
    def abs_gap(self) -> Optional[float]:
        return None if self.residue is None else absolute_gap(self.residue, self.boundary)

    @property
    def rel_gap(self) -> Optional[float]:
        return None if self.residue is None else relative_gap(self.residue, self.boundary)

    def gap(self) -> float:
        return 0.0 if self.residue is None else gap_metric(self.residue, self.boundary)


@dataclass(frozen=True)
class ContactReport:
    records: tuple[ContactRecord, ...]
    threshold: float = 1e-7
    sigma: float = 1.0

    @property
    def passed(self) -> bool:
        return all(record.gap() < self.threshold for record in self.records)

    @property
    def max_gap(self) -> float:
        return max((record.gap() for record in self.records), default=0.0)

    def to_frame(self) -> pd.DataFrame:
        """One row per z: both routes and their gaps (NaN where the residue route is absent)."""
        rows = []
        for record in self.records:
            residue = record.residue if record.residue is not None else complex(math.nan, math.nan)
            rows.append({
                "z_re": record.z.real,
                "z_im": record.z.imag,
                "F_re": record.boundary.real,
                "F_im": record.boundary.imag,
                "F_residue_re": residue.real,
                "F_residue_im": residue.imag,
                "abs_gap": math.nan if record.abs_gap is None else record.abs_gap,
                "rel_gap": math.nan if record.rel_gap is None else record.rel_gap,
            })
        return pd.DataFrame(rows)

    def to_dict(self) -> dict:
        return {
            "version": 1,
            "verdict": "pass" if self.passed else "fail",
            "threshold": self.threshold,
            "sigma": self.sigma,
            "max_gap": self.max_gap,
        }


def contact_equivalence_report(
    cfg: ContactConfig, zs: Sequence[complex], tol: Optional[ToleranceSpec] = None
) -> ContactReport:
    """Both routes at every z; the verdict passes when every gap is below ``tol.rel_tol``.

    Polyline curves only get the boundary route and pass trivially.
    """
    tol = tol or ToleranceSpec(rel_tol=1e-7)
    inner = tol.tightened(10.0)
    records = []
    for z in zs:
        z = complex(z)
        boundary = contact_field_boundary(cfg, z, inner)
        residue = contact_field_residue(cfg, z, inner) if cfg.is_map else None
        record = ContactRecord(z, boundary, residue)
        logger.info("F(%s) = %s (gap %.3e)", z, boundary, record.gap())
        records.append(record)
    report = ContactReport(tuple(records), threshold=tol.rel_tol, sigma=cfg.sigma)
    logger.info("contact field routes %s (max gap %.3e over %d point(s))",
                "agree" if report.passed else "DISAGREE", report.max_gap, len(records))
    return report


@dataclass(frozen=True)
class CrossMemberReport:
    """Boundary-route fields of several curves at shared points, shape (members, points)."""

    zs: tuple[complex, ...]
    fields: np.ndarray = field(repr=False)

    @property
    def max_deviation(self) -> float:
        if self.fields.shape[0] < 2:
            return 0.0
        return float(np.max(np.abs(self.fields - self.fields[0])))


def cross_member_deviation(
    cfgs: Sequence[ContactConfig], zs: Sequence[complex], tol: Optional[ToleranceSpec] = None
) -> CrossMemberReport:
    """Field of each curve at each z; different curves with the same Schwarz data agree."""
    tol = (tol or ToleranceSpec(rel_tol=1e-7)).tightened(10.0)
    zs = tuple(complex(z) for z in zs)
    fields = np.array([[contact_field_boundary(cfg, z, tol) for z in zs] for cfg in cfgs], dtype=complex)
    report = CrossMemberReport(zs, fields)
    logger.info("cross-member field deviation %.3e over %d curve(s)", report.max_deviation, len(cfgs))
    return report
