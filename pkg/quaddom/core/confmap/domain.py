"""
Domain Membership
=================
Argument-principle test for z ∈ Ω = ψ(ℍ₋).

For a univalent map, z lies in Ω exactly when it lies inside the image of the
boundary of the half-disk ℍ₋ ∩ B_R for every R beyond |ψ⁻¹(z)|. The image
curve is sampled and handed to shapely as a polygon.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
import shapely
from shapely.geometry import Point, Polygon

from .boundary import Grading, grading_params
from .evaluation import characteristic_scale, eval_map
from .map_spec import ConformalMapSpec

logger = logging.getLogger(__name__)

#: Default number of samples on each of the two pieces of the contour
DEFAULT_CONTOUR_POINTS: int = 4096

__all__ = ["DomainMembership", "default_radius", "domain_polygon", "domain_contains"]


@dataclass(frozen=True)
class DomainMembership:
    inside: bool
    boundary_distance: float

    def __bool__(self) -> bool:
        return self.inside


def default_radius(spec: ConformalMapSpec, z: complex) -> float:
    """A half-disk radius comfortably beyond the preimage of ``z``."""
    A0, A1, A2 = spec.q.A0, spec.q.A1, spec.q.A2
    if spec.q.degree == 2:
        reach = math.sqrt(abs(z - A0) / abs(A2)) + abs(A1) / abs(A2)
    else:
        reach = abs(z - A0) / abs(A1)
    return 10.0 * (1.0 + reach + spec.max_node_modulus())


def domain_polygon(spec: ConformalMapSpec, radius: float, n: int = DEFAULT_CONTOUR_POINTS) -> Polygon:
    """Image of ∂(ℍ₋ ∩ B_radius) as a shapely polygon."""
    t = grading_params(-radius, radius, n, Grading.TAN_GRADED, characteristic_scale(spec))[::-1]
    theta = np.linspace(math.pi, 2.0 * math.pi, n + 2)[1:-1]
    w = np.concatenate([t.astype(complex), radius * np.exp(1j * theta)])
    z = np.asarray(eval_map(spec, w))
    polygon = Polygon(np.column_stack([z.real, z.imag]))
    if not polygon.is_valid:
        logger.warning("contour image is not a simple polygon (R = %g); repairing", radius)
        polygon = shapely.make_valid(polygon)
    return polygon


def domain_contains(
    spec: ConformalMapSpec,
    z: complex,
    radius: Optional[float] = None,
    n: int = DEFAULT_CONTOUR_POINTS,
) -> DomainMembership:
    """Whether ``z`` lies in the open domain, with its distance to the sampled boundary."""
    z = complex(z)
    R = default_radius(spec, z) if radius is None else float(radius)
    polygon = domain_polygon(spec, R, n)
    point = Point(z.real, z.imag)
    inside = bool(polygon.contains(point))
    distance = float(polygon.boundary.distance(point))
    logger.debug("membership of %s: inside=%s, distance %.3e (R = %g)", z, inside, distance, R)
    return DomainMembership(inside, distance)
