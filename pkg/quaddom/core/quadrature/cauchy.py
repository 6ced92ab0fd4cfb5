"""
Cauchy Transforms
=================
Cauchy transforms of compactly supported densities sampled on a rectangle,

    C^g(z)   = (1/π) ∫ g(ζ) / (ζ − z) dA(ζ),
    C_K^g(z) = ∫ K(ζ, z, a, b) g(ζ) dA(ζ),

with the modified kernel

    K(ζ, z, a, b) = (z − a)(z − b) / (π (ζ − z)(ζ − a)(ζ − b))
                  = (1/π) [1/(ζ − z) + (z − b)/((b − a)(ζ − a)) + (z − a)/((a − b)(ζ − b))],

which vanishes at z = a and z = b and decays like |ζ|^(−3).

Densities are integrated with the midpoint rule on their grid; a 2×2
block-averaged coarse pass provides the error estimate.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..exceptions import CoincidentAuxPoints, InsideSupport, SingularArgument
from ..numerics.integration import ToleranceSpec, integrate_segment

logger = logging.getLogger(__name__)

#: Distance below which kernel arguments count as coincident
KERNEL_SINGULAR_DISTANCE: float = 1.0e-12

__all__ = [
    "CompactDensity",
    "cauchy_kernel",
    "cauchy_transform_compact",
    "generalized_cauchy_transform",
    "DbarCheck",
    "dbar_contour_check",
]


@dataclass(frozen=True, eq=False)
class CompactDensity:
    """Density values at the cell centres of an ``ny × nx`` grid on a rectangle.

    Parameters
    ----------
    lower, upper : complex
        Lower-left and upper-right corners.
    values : ndarray, shape (ny, nx)
        Complex density per cell; row index follows y, column index follows x.
    """

    lower: complex
    upper: complex
    values: np.ndarray

    def __post_init__(self) -> None:
        lower, upper = complex(self.lower), complex(self.upper)
        if not (upper.real > lower.real and upper.imag > lower.imag):
            raise ValueError(f"support rectangle [{lower!r}, {upper!r}] is degenerate")
        values = np.asarray(self.values, dtype=complex)
        if values.ndim != 2 or min(values.shape) < 1:
            raise ValueError(f"values must be a non-empty 2-D grid, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("density values must be finite")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(
        cls,
        fn: Callable[[np.ndarray], np.ndarray],
        lower: complex,
        upper: complex,
        nx: int,
        ny: int,
        supersample: int = 1,
    ) -> CompactDensity:
        """Sample ``fn`` on the grid, averaging ``supersample²`` points per cell."""
        lower, upper = complex(lower), complex(upper)
        fx = (np.arange(nx * supersample) + 0.5) / (nx * supersample)
        fy = (np.arange(ny * supersample) + 0.5) / (ny * supersample)
        X = lower.real + fx * (upper.real - lower.real)
        Y = lower.imag + fy * (upper.imag - lower.imag)
        fine = np.asarray(fn(X[None, :] + 1j * Y[:, None]), dtype=complex)
        fine = np.broadcast_to(fine, (ny * supersample, nx * supersample))
        values = fine.reshape(ny, supersample, nx, supersample).mean(axis=(1, 3))
        return cls(lower, upper, values)

    @classmethod
    def zeros(cls, lower: complex, upper: complex, nx: int = 8, ny: int = 8) -> CompactDensity:
        return cls(lower, upper, np.zeros((ny, nx), dtype=complex))

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    @property
    def cell_area(self) -> float:
        ny, nx = self.shape
        width = self.upper.real - self.lower.real
        height = self.upper.imag - self.lower.imag
        return width * height / (nx * ny)

    def centers(self) -> np.ndarray:
        ny, nx = self.shape
        x = self.lower.real + (np.arange(nx) + 0.5) * (self.upper.real - self.lower.real) / nx
        y = self.lower.imag + (np.arange(ny) + 0.5) * (self.upper.imag - self.lower.imag) / ny
        return x[None, :] + 1j * y[:, None]

    def contains(self, z: complex) -> bool:
        """Whether ``z`` lies in the closed support rectangle."""
        return (self.lower.real <= z.real <= self.upper.real
                and self.lower.imag <= z.imag <= self.upper.imag)

    def total(self) -> complex:
        """Midpoint-rule ∫ g dA."""
        return complex(self.values.sum() * self.cell_area)

    def coarsened(self) -> Optional[CompactDensity]:
        """2×2 block averages, or ``None`` when a dimension is odd."""
        ny, nx = self.shape
        if nx % 2 or ny % 2:
            return None
        values = self.values.reshape(ny // 2, 2, nx // 2, 2).mean(axis=(1, 3))
        return CompactDensity(self.lower, self.upper, values)

    def conjugated(self) -> CompactDensity:
        """The density ζ ↦ conj g(conj ζ) on the mirrored rectangle."""
        lower = complex(self.lower.real, -self.upper.imag)
        upper = complex(self.upper.real, -self.lower.imag)
        return CompactDensity(lower, upper, np.conj(self.values[::-1, :]))


# ---------------------------------------------------------------------------
# Kernels
# ---------------------------------------------------------------------------

def cauchy_kernel(zeta, z: complex, a: complex, b: complex):
    """K(ζ, z, a, b) for scalar or array ``zeta``.

    Raises
    ------
    CoincidentAuxPoints
        If ``|a − b| < 1e-12``.
    SingularArgument
        If some ζ coincides with z, a or b.
    """
    z, a, b = complex(z), complex(a), complex(b)
    if abs(a - b) < KERNEL_SINGULAR_DISTANCE:
        raise CoincidentAuxPoints(f"auxiliary points a = {a!r} and b = {b!r} coincide")
    zeta_arr = np.asarray(zeta, dtype=complex)
    for name, point in (("z", z), ("a", a), ("b", b)):
        if np.any(np.abs(zeta_arr - point) < KERNEL_SINGULAR_DISTANCE):
            raise SingularArgument(f"kernel evaluated at ζ = {name}")
    value = (z - a) * (z - b) / (math.pi * (zeta_arr - z) * (zeta_arr - a) * (zeta_arr - b))
    return complex(value) if np.ndim(zeta) == 0 else value


def _midpoint_sum(g: CompactDensity, weight: Callable[[np.ndarray], np.ndarray]) -> complex:
    return complex(np.sum(weight(g.centers()) * g.values) * g.cell_area)


def _midpoint(g: CompactDensity, weight: Callable[[np.ndarray], np.ndarray], tol: ToleranceSpec,
              label: str) -> complex:
    fine = _midpoint_sum(g, weight)
    coarse_density = g.coarsened()
    if coarse_density is not None:
        coarse = _midpoint_sum(coarse_density, weight)
        estimate = abs(fine - coarse) / 3.0
        if estimate > tol.bound(fine):
            logger.warning("%s: midpoint error estimate %.3e above tolerance %.3e",
                           label, estimate, tol.bound(fine))
        else:
            logger.debug("%s: midpoint error estimate %.3e", label, estimate)
    return fine


def cauchy_transform_compact(g: CompactDensity, z: complex, tol: Optional[ToleranceSpec] = None) -> complex:
    """C^g(z) for ``z`` outside the support rectangle.

    Raises
    ------
    InsideSupport
        If ``z`` lies in the closed support rectangle.
    """
    tol = tol or ToleranceSpec()
    z = complex(z)
    if g.contains(z):
        raise InsideSupport(f"z = {z!r} lies inside the support rectangle")
    return _midpoint(g, lambda zeta: 1.0 / (math.pi * (zeta - z)), tol, "Cauchy transform")


def generalized_cauchy_transform(
    g: CompactDensity, z: complex, a: complex, b: complex, tol: Optional[ToleranceSpec] = None
) -> complex:
    """C_K^g(z) with auxiliary points ``a`` and ``b``; all three must avoid the support."""
    tol = tol or ToleranceSpec()
    for name, point in (("z", z), ("a", a), ("b", b)):
        if g.contains(complex(point)):
            raise InsideSupport(f"{name} = {complex(point)!r} lies inside the support rectangle")
    return _midpoint(g, lambda zeta: cauchy_kernel(zeta, z, a, b), tol, "generalized Cauchy transform")


# ---------------------------------------------------------------------------
# Weak ∂̄ relation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DbarCheck:
    """Contour integral of the transform around a square and its expected value −2i·∫g."""

    contour_integral: complex
    expected: complex

    @property
    def gap(self) -> float:
        return abs(self.contour_integral - self.expected)


def dbar_contour_check(
    g: CompactDensity,
    tol: Optional[ToleranceSpec] = None,
    margin: float = 0.5,
    aux: Optional[tuple[complex, complex]] = None,
) -> DbarCheck:
    """Discrete check of ∂_z̄ C^g = −g in weak form.

    The transform (generalized when ``aux = (a, b)`` is given) is integrated
    counterclockwise around the square containing the support with the given
    ``margin``; by Green's theorem the result is −2i·∫g dA.
    """
    tol = tol or ToleranceSpec()
    centre = 0.5 * (g.lower + g.upper)
    half = 0.5 * max(g.upper.real - g.lower.real, g.upper.imag - g.lower.imag) + margin
    corners = [centre + half * c for c in (-1 - 1j, 1 - 1j, 1 + 1j, -1 + 1j)]
    if aux is None:
        def transform(z: complex) -> complex:
            return _midpoint_sum(g, lambda zeta: 1.0 / (math.pi * (zeta - z)))
    else:
        a, b = aux
        for point in (a, b):
            if g.contains(complex(point)):
                raise InsideSupport(f"auxiliary point {complex(point)!r} lies inside the support")

        def transform(z: complex) -> complex:
            return _midpoint_sum(g, lambda zeta: cauchy_kernel(zeta, z, a, b))

    contour = sum(
        integrate_segment(transform, corners[i], corners[(i + 1) % 4], tol) for i in range(4)
    )
    return DbarCheck(complex(contour), -2j * g.total())
