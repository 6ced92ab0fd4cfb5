"""
Scalar Root Finding
===================
Bracketed 1-D roots (Brent's method from scipy) and all roots of a cubic
(companion-matrix eigenvalues from numpy followed by one Newton polish).
"""
from __future__ import annotations

import logging
import math
from typing import Callable

import numpy as np
from numpy.polynomial import Polynomial
from scipy.optimize import brentq

from ..exceptions import DegenerateLeadingCoefficient, NoSignChange, NonFiniteEvaluation

logger = logging.getLogger(__name__)

#: Relative step floor accepted by scipy's brentq (4 machine epsilons)
_RTOL: float = 4.0 * float(np.finfo(float).eps)
_XTOL: float = 1.0e-16
_MAXITER: int = 200

#: Residual bound of a polished cubic root, relative to the largest coefficient
CUBIC_RESIDUAL_BOUND: float = 1.0e-10

__all__ = ["find_root_1d", "cubic_roots", "cubic_discriminant", "CUBIC_RESIDUAL_BOUND"]


def find_root_1d(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1.0e-12
) -> float:
    """Root of ``f`` inside the sign-changing bracket ``[lo, hi]``.

    Parameters
    ----------
    f : callable
        Continuous real function.
    lo, hi : float
        Bracket with ``f(lo)·f(hi) <= 0``.
    tol : float
        Target bound on ``|f(root)|``; a warning is logged when machine
        precision in x cannot reach it.

    Raises
    ------
    NoSignChange
        If ``f(lo)`` and ``f(hi)`` share a sign.
    """
    f_lo, f_hi = float(f(lo)), float(f(hi))
    if not (math.isfinite(f_lo) and math.isfinite(f_hi)):
        raise NonFiniteEvaluation(f"f is not finite at the bracket ends [{lo!r}, {hi!r}]")
    if f_lo == 0.0:
        return float(lo)
    if f_hi == 0.0:
        return float(hi)
    if f_lo * f_hi > 0.0:
        raise NoSignChange(
            f"f({lo!r}) = {f_lo:.6g} and f({hi!r}) = {f_hi:.6g} have the same sign"
        )
    root = float(brentq(f, lo, hi, xtol=_XTOL, rtol=_RTOL, maxiter=_MAXITER))
    residual = abs(float(f(root)))
    if residual > tol:
        logger.warning("root %.17g leaves residual %.3e above tolerance %.1e", root, residual, tol)
    return root


def _polish(poly: Polynomial, dpoly: Polynomial, x: complex) -> complex:
    """One Newton step, kept only when it does not increase |p(x)|."""
    slope = dpoly(x)
    if slope == 0:
        return x
    candidate = x - poly(x) / slope
    return candidate if abs(poly(candidate)) <= abs(poly(x)) else x


def cubic_roots(c3: float, c2: float, c1: float, c0: float) -> list[complex]:
    """The three roots, with multiplicity, of ``c3·x³ + c2·x² + c1·x + c0``.

    Roots come from :func:`numpy.roots` and receive one Newton polish; they
    are returned sorted by real part, then imaginary part.

    Raises
    ------
    DegenerateLeadingCoefficient
        If ``c3 == 0``.
    """
    if c3 == 0:
        raise DegenerateLeadingCoefficient("leading coefficient c3 is zero; not a cubic")
    coeffs = np.array([c3, c2, c1, c0], dtype=float)
    poly = Polynomial(coeffs[::-1])
    dpoly = poly.deriv()
    polished = [_polish(poly, dpoly, complex(r)) for r in np.roots(coeffs)]

    scale = float(np.max(np.abs(coeffs)))
    for r in polished:
        if abs(poly(r)) > CUBIC_RESIDUAL_BOUND * scale:
            logger.warning("cubic root %r has residual %.3e", r, abs(poly(r)))
    return sorted(polished, key=lambda r: (r.real, r.imag))


def cubic_discriminant(c3: float, c2: float, c1: float, c0: float) -> float:
    """Discriminant of the cubic; zero exactly when two roots coincide."""
    a, b, c, d = c3, c2, c1, c0
    return 18 * a * b * c * d - 4 * b**3 * d + b**2 * c**2 - 4 * a * c**3 - 27 * a**2 * d**2
