"""
Adaptive Contour Integration
============================
Gauss-Kronrod quadrature of complex-valued integrands along straight
segments, circles and the whole real line, and residues computed as contour
integrals.

Every integral is reduced to a real parameter interval and handed to
:func:`scipy.integrate.quad_vec` (21-point Gauss-Kronrod with interval
bisection), with the real and imaginary parts stacked into a 2-vector.

Typical usage::

    from quaddom.core.numerics.integration import ToleranceSpec, residue_numeric
    res = residue_numeric(lambda w: 1 / (w - 1j), 1j, 0.5, ToleranceSpec())
"""
from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.integrate import quad_vec

from ..exceptions import NonFiniteEvaluation, SlowDecay, SubdivisionLimit

logger = logging.getLogger(__name__)

ComplexFunction = Callable[[complex], complex]
RealFunction = Callable[[float], complex]

#: Smallest admissible absolute or relative tolerance (100 machine epsilons)
MIN_TOLERANCE: float = 100.0 * float(np.finfo(float).eps)

#: Abscissae |t| at which the real-line decay precheck samples the integrand
DECAY_PROBES: tuple[float, float] = (1.0e5, 1.0e6)

#: Largest tolerated growth of |f(t)|·t² between the two decay probes
DECAY_GROWTH_LIMIT: float = 2.0

__all__ = [
    "ToleranceSpec",
    "integrate_segment",
    "integrate_circle",
    "integrate_real_line",
    "integrate_interval",
    "residue_numeric",
]


@dataclass(frozen=True)
class ToleranceSpec:
    """Accuracy request shared by every adaptive routine.

    Parameters
    ----------
    abs_tol : float
        Absolute error target.
    rel_tol : float
        Relative error target; an estimate is accepted once its error is below
        ``max(abs_tol, rel_tol * |result|)``.
    max_subdivisions : int
        Largest number of subintervals the adaptive rule may create.
    """

    abs_tol: float = 1.0e-12
    rel_tol: float = 1.0e-10
    max_subdivisions: int = 2000

    def __post_init__(self) -> None:
        for name in ("abs_tol", "rel_tol"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < MIN_TOLERANCE:
                raise ValueError(
                    f"{name} must be finite and >= {MIN_TOLERANCE:.3e}, got {value!r}"
                )
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 1:
            raise ValueError(
                f"max_subdivisions must be a positive integer, got {self.max_subdivisions!r}"
            )

    def tightened(self, factor: float = 10.0) -> ToleranceSpec:
        """Return a copy with both tolerances divided by ``factor`` (floored)."""
        return replace(
            self,
            abs_tol=max(self.abs_tol / factor, MIN_TOLERANCE),
            rel_tol=max(self.rel_tol / factor, MIN_TOLERANCE),
        )

    def bound(self, value: complex) -> float:
        """Error allowance for a result of the given size."""
        return max(self.abs_tol, self.rel_tol * abs(value))


# ---------------------------------------------------------------------------
# Parameter-interval kernel
# ---------------------------------------------------------------------------

def _stacked(fn: RealFunction, label: str) -> Callable[[float], np.ndarray]:
    def wrapped(x: float) -> np.ndarray:
        value = complex(fn(x))
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise NonFiniteEvaluation(f"{label}: integrand is not finite at parameter {x!r}")
        return np.array([value.real, value.imag])

    return wrapped


def integrate_interval(
    fn: RealFunction,
    lo: float,
    hi: float,
    tol: ToleranceSpec,
    label: str = "integral",
    points: Optional[Sequence[float]] = None,
) -> complex:
    """Adaptive estimate of ∫_lo^hi fn(x) dx for a complex-valued ``fn``.

    Raises
    ------
    SubdivisionLimit
        If ``tol.max_subdivisions`` intervals did not reach the tolerance.
    NonFiniteEvaluation
        If ``fn`` returns NaN or Inf anywhere it is sampled.
    """
    inner = [p for p in (points or ()) if lo < p < hi]
    result, error, info = quad_vec(
        _stacked(fn, label),
        lo,
        hi,
        epsabs=tol.abs_tol,
        epsrel=tol.rel_tol,
        limit=int(tol.max_subdivisions),
        points=inner or None,
        full_output=True,
    )
    if info.status == 1:
        raise SubdivisionLimit(
            f"{label}: no convergence within {tol.max_subdivisions} subintervals "
            f"(error estimate {error:.3e})"
        )
    if info.status == 2:
        raise NonFiniteEvaluation(f"{label}: non-finite integrand values encountered")
    logger.debug(
        "%s: %d evaluations, error estimate %.3e", label, info.neval, error
    )
    return complex(result[0], result[1])


# ---------------------------------------------------------------------------
# Public contours
# ---------------------------------------------------------------------------

def integrate_segment(
    f: ComplexFunction, a: complex, b: complex, tol: ToleranceSpec
) -> complex:
    """∫ f(s) ds along the straight segment from ``a`` to ``b``."""
    a, b = complex(a), complex(b)
    if a == b:
        return 0j
    delta = b - a
    return integrate_interval(lambda u: f(a + delta * u) * delta, 0.0, 1.0, tol, "segment")


def integrate_circle(
    f: ComplexFunction, center: complex, radius: float, tol: ToleranceSpec
) -> complex:
    """∮ f(w) dw counterclockwise over ``|w - center| = radius``."""
    if not radius > 0.0:
        raise ValueError(f"radius must be positive, got {radius!r}")
    center = complex(center)

    def integrand(theta: float) -> complex:
        e = cmath.exp(1j * theta)
        return f(center + radius * e) * (1j * radius * e)

    return integrate_interval(integrand, 0.0, 2.0 * math.pi, tol, "circle")


def _check_decay(f: RealFunction) -> None:
    near, far = DECAY_PROBES
    for sign in (-1.0, 1.0):
        g_near = abs(complex(f(sign * near))) * near**2
        g_far = abs(complex(f(sign * far))) * far**2
        if not (math.isfinite(g_near) and math.isfinite(g_far)):
            raise NonFiniteEvaluation(f"integrand not finite at t = {sign * far:+.0e}")
        if g_far > DECAY_GROWTH_LIMIT * g_near and g_far > 0.0:
            raise SlowDecay(
                f"|f(t)|·t² grows from {g_near:.3e} to {g_far:.3e} between "
                f"|t| = {near:.0e} and {far:.0e}; the integrand must decay like |t|^-2"
            )


def integrate_real_line(
    f: RealFunction, tol: ToleranceSpec, scale: float = 1.0
) -> complex:
    """∫ f(t) dt over the whole real line.

    The substitution ``t = scale·tan θ`` maps ℝ onto (−π/2, π/2); ``scale``
    sets where the θ-resolution concentrates and does not change the value.

    Raises
    ------
    SlowDecay
        If sampled ``|f(t)|·t²`` grows between ``|t| = 1e5`` and ``1e6``.
    """
    if not scale > 0.0:
        raise ValueError(f"scale must be positive, got {scale!r}")
    _check_decay(f)

    def integrand(theta: float) -> complex:
        c = math.cos(theta)
        return f(scale * math.tan(theta)) * (scale / (c * c))

    half = 0.5 * math.pi
    return integrate_interval(integrand, -half, half, tol, "real line", points=(0.0,))


def residue_numeric(
    g: ComplexFunction, pole: complex, radius: float, tol: ToleranceSpec
) -> complex:
    """Residue of ``g`` at ``pole`` as (1/2πi)·∮ g over a circle of ``radius``.

    ``g`` must be holomorphic on the punctured disk; no other singularity may
    lie inside the circle.
    """
    return integrate_circle(g, pole, radius, tol) / (2j * math.pi)
