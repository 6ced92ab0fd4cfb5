"""
Asymptote Classification
========================
The unbounded boundary approaches the curve {q(t): t ∈ ℝ}, which is a line,
a parabola or a ray depending on the quadratic part of the map:

* Line      when A2 = 0,
* Parabola  when A2 ≠ 0 and Im(A1/A2) ≠ 0,
* Ray       when A2 ≠ 0 and A1/A2 is real.

:func:`asymptote_deviation` measures how far the traced boundary still is from
that curve at large |t|.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np

from .evaluation import eval_map
from .map_spec import ConformalMapSpec

logger = logging.getLogger(__name__)

#: Relative threshold for treating A2 as zero
LINE_TOLERANCE: float = 1.0e-12

#: Default threshold on |Im(A1/A2)| separating parabola from ray
PARABOLA_TOLERANCE: float = 1.0e-10

#: Inputs within this factor of a threshold are flagged as near-threshold
NEAR_THRESHOLD_FACTOR: float = 100.0

__all__ = [
    "LineAsymptote",
    "ParabolaAsymptote",
    "RayAsymptote",
    "AsymptoteClass",
    "classify_asymptote",
    "asymptote_deviation",
]


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


@dataclass(frozen=True)
class LineAsymptote:
    """The line {offset + direction·t}."""

    direction: complex
    offset: complex
    near_threshold: bool = False

    name = "line"

    def to_dict(self) -> dict:
        return {"class": self.name, "direction": _pair(self.direction), "offset": _pair(self.offset)}


@dataclass(frozen=True)
class _QuadraticAsymptote:
    A2: complex
    A1: complex
    A0: complex
    near_threshold: bool = False

    name = "quadratic"

    def to_dict(self) -> dict:
        return {
            "class": self.name,
            "A2": _pair(self.A2),
            "A1": _pair(self.A1),
            "A0": _pair(self.A0),
        }


class ParabolaAsymptote(_QuadraticAsymptote):
    """Parabola {A2·t² + A1·t + A0}; A1/A2 has a nonzero imaginary part."""

    name = "parabola"


class RayAsymptote(_QuadraticAsymptote):
    """Doubly covered ray {A2·t² + A1·t + A0}; A1/A2 is real.

    The ray starts at q(−A1/(2·A2)) and points along A2.
    """

    name = "ray"

    @property
    def apex(self) -> complex:
        return self.A0 - self.A1**2 / (4.0 * self.A2)


AsymptoteClass = Union[LineAsymptote, ParabolaAsymptote, RayAsymptote]


def classify_asymptote(spec: ConformalMapSpec, tol: float = PARABOLA_TOLERANCE) -> AsymptoteClass:
    """Classify the asymptotic curve {q(t)} of the map's boundary.

    A2 counts as zero when ``|A2| <= 1e-12·(1 + |A1|)``; the parabola/ray split
    compares ``|Im(A1/A2)|`` against ``tol``. Inputs within a factor 100 of
    either threshold carry ``near_threshold=True`` and log a warning.
    """
    A0, A1, A2 = spec.q.A0, spec.q.A1, spec.q.A2
    line_bound = LINE_TOLERANCE * (1.0 + abs(A1))
    if abs(A2) <= line_bound:
        near = abs(A2) > line_bound / NEAR_THRESHOLD_FACTOR
        if near:
            logger.warning("|A2| = %.3e is within a factor %g of the line threshold",
                           abs(A2), NEAR_THRESHOLD_FACTOR)
        return LineAsymptote(direction=A1, offset=A0, near_threshold=near)

    near = abs(A2) <= line_bound * NEAR_THRESHOLD_FACTOR
    skew = abs((A1 / A2).imag)
    if skew > tol:
        near = near or skew <= tol * NEAR_THRESHOLD_FACTOR
        cls = ParabolaAsymptote
    else:
        near = near or skew > tol / NEAR_THRESHOLD_FACTOR
        cls = RayAsymptote
    if near:
        logger.warning("asymptote classification (%s) is near a threshold: |Im(A1/A2)| = %.3e",
                       cls.name, skew)
    return cls(A2=A2, A1=A1, A0=A0, near_threshold=near)


def asymptote_deviation(spec: ConformalMapSpec, T: float, n: int = 64) -> float:
    """max |ψ(t) − q(t)| over ``n`` log-spaced |t| ∈ [T, 10T] of both signs.

    Raises
    ------
    ValueError
        If ``T`` does not exceed the modulus of every pole and chain node.
    """
    reach = spec.max_node_modulus()
    if not T > reach:
        raise ValueError(f"T must exceed the largest singularity modulus {reach:.6g}, got {T!r}")
    t = np.geomspace(T, 10.0 * T, n)
    t = np.concatenate([-t[::-1], t]).astype(complex)
    deviation = np.asarray(eval_map(spec, t)) - spec.q(t)
    return float(np.max(np.abs(deviation)))
