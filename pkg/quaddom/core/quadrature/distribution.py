"""
Quadrature Distributions
========================
The distribution T of a map ψ: finitely many point nodes carrying weights on
derivatives, plus weighted straight segments,

    T(f) = Σ_k Σ_j α_kj · f^(j)(β_k) + Σ_k w_k · ∫_{δ_k}^{δ_{k+1}} f(s) ds,

with β_k = ψ(b̄_k) and δ_k = ψ(d̄_k). :func:`derive_distribution` extracts the
weights from a map by contour-integral residues; :func:`evaluate_distribution`
applies T to a test function.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from ..confmap.evaluation import eval_map, eval_map_derivative, eval_star
from ..confmap.map_spec import ConformalMapSpec, SegmentChain
from ..exceptions import IllConditionedJetSystem, NodeAtPole, NonzeroTotalCharge
from ..numerics.geometry import point_segment_distance
from ..numerics.integration import ToleranceSpec, integrate_segment, residue_numeric
from .testfunctions import TestFunctionLike

logger = logging.getLogger(__name__)

#: Smallest admissible |ψ′(b̄)|^(i+1) on the diagonal of the jet system
JET_DIAGONAL_FLOOR: float = 1.0e-10

#: Test-function poles closer than this to a node are rejected
NODE_POLE_DISTANCE: float = 1.0e-10

#: Largest admissible |Σγ| for a logarithmic charge configuration
ZERO_CHARGE_TOLERANCE: float = 1.0e-12

__all__ = [
    "PointNode",
    "SegmentNode",
    "QuadratureDistribution",
    "derive_distribution",
    "evaluate_distribution",
    "schwarz_residue",
    "residue_radius",
    "log_to_segments",
    "chain_from_charges",
]


# ---------------------------------------------------------------------------
# Data types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PointNode:
    """Node β with weights α_0..α_m on f, f′, …, f^(m) at β."""

    beta: complex
    weights: tuple[complex, ...]

    def __post_init__(self) -> None:
        weights = tuple(complex(a) for a in self.weights)
        if not weights:
            raise ValueError("a point node needs at least one weight")
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "weights", weights)


@dataclass(frozen=True)
class SegmentNode:
    """Straight segment δ_from → δ_to with weight π·c̄."""

    delta_from: complex
    delta_to: complex
    weight: complex

    def __post_init__(self) -> None:
        if complex(self.delta_from) == complex(self.delta_to):
            raise ValueError("segment node endpoints must be distinct")
        object.__setattr__(self, "delta_from", complex(self.delta_from))
        object.__setattr__(self, "delta_to", complex(self.delta_to))
        object.__setattr__(self, "weight", complex(self.weight))


@dataclass(frozen=True)
class QuadratureDistribution:
    points: tuple[PointNode, ...] = field(default_factory=tuple)
    segments: tuple[SegmentNode, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "segments", tuple(self.segments))

    @property
    def is_empty(self) -> bool:
        return not self.points and not self.segments

    def total_mass(self) -> complex:
        """T(1) restricted to the point part: Σ α_k0."""
        return sum((node.weights[0] for node in self.points), 0j)


# ---------------------------------------------------------------------------
# Derivation
# ---------------------------------------------------------------------------

def residue_radius(spec: ConformalMapSpec, index: int) -> float:
    """Contour radius around b̄_index for integrands involving ψ*.

    Half the distance to the real axis, to the other reflected poles and to
    the reflected segment chains.
    """
    group = spec.poles[index]
    bbar = group.preimage
    reach = group.b.imag
    for j, other in enumerate(spec.poles):
        if j != index:
            reach = min(reach, abs(bbar - other.preimage))
    if spec.segments:
        reach = min(reach, float(spec.distance_to_chains(group.b)))
    return 0.5 * reach


def _point_node(spec: ConformalMapSpec, index: int, tol: ToleranceSpec) -> PointNode:
    group = spec.poles[index]
    bbar = group.preimage
    beta = complex(eval_map(spec, bbar))
    slope = complex(eval_map_derivative(spec, bbar))
    radius = 0.5 * group.b.imag
    m = group.order

    weights = []
    for i in range(m):
        diagonal = abs(slope) ** (i + 1)
        if diagonal < JET_DIAGONAL_FLOOR:
            raise IllConditionedJetSystem(
                f"|ψ′(b̄)|^{i + 1} = {diagonal:.3e} at b̄ = {bbar!r}; the pole preimage is "
                "nearly critical"
            )
        total = 0j
        for j in range(i, m):
            def integrand(w, i=i, j=j):
                return (eval_map(spec, w) - beta) ** i * eval_map_derivative(spec, w) / (w - bbar) ** (j + 1)

            moment = math.pi * residue_numeric(integrand, bbar, radius, tol)
            total += group.coeffs[j].conjugate() * moment
        weights.append(total / math.factorial(i))
    logger.debug("point node β = %s with %d weight(s) from pole at %s", beta, m, group.b)
    return PointNode(beta, tuple(weights))


def derive_distribution(spec: ConformalMapSpec, tol: Optional[ToleranceSpec] = None) -> QuadratureDistribution:
    """Quadrature distribution of the domain ψ(ℍ₋).

    Each pole group b contributes a node at β = ψ(b̄). Its weights make
    ``Σ_j α_j f^(j)(β)`` equal ``π·Σ_j ā_j·Res((f∘ψ)·ψ′/(w − b̄)^(j+1), b̄)``
    for every test function; they are read off from the probes
    ``(z − β)^i``, whose jets at β are canonical.

    Each chain segment d → d′ contributes the image segment ψ(d̄) → ψ(d̄′)
    with weight π·c̄.

    Raises
    ------
    IllConditionedJetSystem
        If ψ′(b̄) nearly vanishes.
    """
    tol = tol or ToleranceSpec()
    points = tuple(_point_node(spec, index, tol) for index in range(len(spec.poles)))
    segments = []
    for chain in spec.segments:
        for d_from, d_to, c in chain.segments():
            delta_from = complex(eval_map(spec, d_from.conjugate()))
            delta_to = complex(eval_map(spec, d_to.conjugate()))
            segments.append(SegmentNode(delta_from, delta_to, math.pi * c.conjugate()))
    logger.info("derived distribution: %d point node(s), %d segment(s)", len(points), len(segments))
    return QuadratureDistribution(points, tuple(segments))


def evaluate_distribution(
    T: QuadratureDistribution, f: TestFunctionLike, tol: Optional[ToleranceSpec] = None
) -> complex:
    """T(f) with exact derivatives at the point nodes and adaptive segment integrals.

    Raises
    ------
    NodeAtPole
        If a pole of ``f`` lies within 1e-10 of a node or segment.
    """
    tol = tol or ToleranceSpec()
    for z0 in f.poles:
        for node in T.points:
            if abs(node.beta - z0) < NODE_POLE_DISTANCE:
                raise NodeAtPole(f"test-function pole {z0!r} coincides with the node {node.beta!r}")
        for seg in T.segments:
            if point_segment_distance(z0, seg.delta_from, seg.delta_to) < NODE_POLE_DISTANCE:
                raise NodeAtPole(f"test-function pole {z0!r} lies on a segment node")

    value = 0j
    for node in T.points:
        for j, alpha in enumerate(node.weights):
            value += alpha * complex(f.derivative(node.beta, j))
    for seg in T.segments:
        value += seg.weight * integrate_segment(f, seg.delta_from, seg.delta_to, tol)
    return value


# ---------------------------------------------------------------------------
# Schwarz function residues
# ---------------------------------------------------------------------------

def schwarz_residue(
    spec: ConformalMapSpec,
    pole_index: int,
    tol: Optional[ToleranceSpec] = None,
    radius: Optional[float] = None,
) -> tuple[complex, complex]:
    """Location ψ(b̄) and residue of the Schwarz function there.

    Computed as (1/2πi)·∮ ψ*(w)·ψ′(w) dw around b̄, the pullback of the
    contour integral of S(z) around ψ(b̄).
    """
    if not 0 <= pole_index < len(spec.poles):
        raise IndexError(f"pole index {pole_index} out of range for {len(spec.poles)} pole group(s)")
    tol = tol or ToleranceSpec()
    bbar = spec.poles[pole_index].preimage
    r = residue_radius(spec, pole_index) if radius is None else float(radius)
    logger.debug("Schwarz residue contour: centre %s, radius %.4g", bbar, r)
    residue = residue_numeric(lambda w: eval_star(spec, w) * eval_map_derivative(spec, w), bbar, r, tol)
    return complex(eval_map(spec, bbar)), residue


# ---------------------------------------------------------------------------
# Logarithmic charges
# ---------------------------------------------------------------------------

def log_to_segments(gammas: Sequence[complex], nodes: Sequence[complex]) -> list[complex]:
    """Chain weights c_k = γ_1 + … + γ_k for a zero-sum charge configuration.

    Σ_k γ_k·log(w − d_k) equals Σ_k c_k·Log((w − d_k)/(w − d_{k+1})) off the
    chain, so a single-valued logarithmic part can always be written with
    segment terms.

    Raises
    ------
    NonzeroTotalCharge
        If ``|Σ γ_k| >= 1e-12``.
    """
    gammas = [complex(g) for g in gammas]
    nodes = [complex(d) for d in nodes]
    if len(gammas) != len(nodes):
        raise ValueError(f"{len(gammas)} charges for {len(nodes)} nodes")
    if len(set(nodes)) != len(nodes):
        raise ValueError("charge nodes must be distinct")
    total = sum(gammas, 0j)
    if abs(total) >= ZERO_CHARGE_TOLERANCE:
        raise NonzeroTotalCharge(f"charges sum to {total!r}; the logarithm would be multivalued")
    return [complex(c) for c in np.cumsum(gammas)[:-1]]


def chain_from_charges(gammas: Sequence[complex], nodes: Sequence[complex]) -> SegmentChain:
    """SegmentChain representing Σ γ_k·log(w − d_k)."""
    return SegmentChain(tuple(nodes), tuple(log_to_segments(gammas, nodes)))
