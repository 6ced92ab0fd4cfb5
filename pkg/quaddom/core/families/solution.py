"""
Family Solutions
================
Common record for members of the three one-parameter families of quadrature
domains of the Dirac measure at the origin:

* ``CONCHOID``  ψ(w) = w + ih + a/(w − ib)            (line asymptote)
* ``PARABOLA``  ψ(w) = 2w + iw² + ih + a/(w − ib)     (parabola asymptote)
* ``RAY``       ψ(w) = w² + h − ia/(w − ib)           (ray asymptote)

Each member satisfies ψ(−ib) = 0 and has Schwarz residue one at the origin.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

import numpy as np

from ..confmap.map_spec import ConformalMapSpec, PoleGroup, QuadraticPoly

__all__ = [
    "FamilyKind",
    "FamilySolution",
    "family_spec",
    "constraint_residuals",
    "family_theta_boundary",
]


class FamilyKind(Enum):
    CONCHOID = 1
    PARABOLA = 2
    RAY = 3

    @classmethod
    def parse(cls, value: Union[str, int, FamilyKind]) -> FamilyKind:
        """Accept ``1``/``"1"``/``"conchoid"`` style spellings."""
        if isinstance(value, cls):
            return value
        text = str(value).strip().lower()
        if text.isdigit():
            return cls(int(text))
        aliases = {"parabolafamily": "parabola", "rayfamily": "ray"}
        try:
            return cls[aliases.get(text, text).upper()]
        except KeyError:
            raise ValueError(f"unknown family kind {value!r}") from None


def family_spec(kind: FamilyKind, a: float, b: float, h: float) -> ConformalMapSpec:
    """Map of the given family for arbitrary (a, b, h), on or off the constraint surface."""
    if kind is FamilyKind.CONCHOID:
        return ConformalMapSpec(QuadraticPoly(A0=1j * h, A1=1.0), (PoleGroup(1j * b, (a,)),))
    if kind is FamilyKind.PARABOLA:
        return ConformalMapSpec(QuadraticPoly(A0=1j * h, A1=2.0, A2=1j), (PoleGroup(1j * b, (a,)),))
    return ConformalMapSpec(QuadraticPoly(A0=h, A2=1.0), (PoleGroup(1j * b, (-1j * a,)),))


def constraint_residuals(kind: FamilyKind, a: float, b: float, h: float) -> tuple[float, float]:
    """Residuals of (Schwarz residue = 1, ψ(−ib) = 0) written as polynomial identities."""
    if kind is FamilyKind.CONCHOID:
        return a + a**2 / (4 * b**2) - 1.0, h - (b - a / (2 * b))
    if kind is FamilyKind.PARABOLA:
        return 2 * a + 2 * a * b + a**2 / (4 * b**2) - 1.0, h - (2 * b + b**2 - a / (2 * b))
    return 8 * a * b**3 - 4 * b**2 + a**2, h - (b**2 - a / (2 * b))


@dataclass(frozen=True)
class FamilySolution:
    """A solved family member.

    ``param`` is the free parameter the member was requested by (b, r or a);
    ``derived`` holds kind-specific quantities such as ``r`` and ``alpha`` for
    the Conchoid or the root ``type`` for the ray family.
    """

    kind: FamilyKind
    param: float
    a: float
    b: float
    h: float
    spec: ConformalMapSpec
    derived: dict = field(default_factory=dict)
    univalent: Optional[bool] = None
    flag: str = ""

    def residuals(self) -> tuple[float, float]:
        return constraint_residuals(self.kind, self.a, self.b, self.h)

    def as_row(self) -> dict:
        row = {
            "kind": self.kind.name.lower(),
            "param": self.param,
            "a": self.a,
            "b": self.b,
            "h": self.h,
            "univalent": self.univalent,
            "flag": self.flag,
        }
        row.update({key: value for key, value in self.derived.items()})
        return row


def family_theta_boundary(solution: FamilySolution, theta) -> np.ndarray:
    """Boundary points in the angle parametrization t = b·tan θ, θ ∈ (−π/2, π/2).

    Conchoid:  X = b tan θ + (a/b) sin θ cos θ,   Y = h + (a/b) cos² θ
    Parabola:  X = 2b tan θ + (a/b) sin θ cos θ,  Y = b² tan² θ + h + (a/b) cos² θ
    Ray:       X = b² tan² θ + h + (a/b) cos² θ,  Y = −(a/b) sin θ cos θ
    """
    theta = np.asarray(theta, dtype=float)
    if np.any(np.abs(theta) >= 0.5 * math.pi):
        raise ValueError("theta must lie strictly inside (-pi/2, pi/2)")
    a, b, h = solution.a, solution.b, solution.h
    s, c, t = np.sin(theta), np.cos(theta), np.tan(theta)
    ratio = a / b
    if solution.kind is FamilyKind.CONCHOID:
        x, y = b * t + ratio * s * c, h + ratio * c**2
    elif solution.kind is FamilyKind.PARABOLA:
        x, y = 2 * b * t + ratio * s * c, b**2 * t**2 + h + ratio * c**2
    else:
        x, y = b**2 * t**2 + h + ratio * c**2, -ratio * s * c
    return x + 1j * y
