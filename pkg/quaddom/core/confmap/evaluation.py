"""
Map Evaluation
==============
Vectorized evaluation of ψ, ψ′ and the reflected map ψ*(w) = conj ψ(conj w).

Every function accepts a scalar or an array of points and returns the same
shape; scalars come back as Python ``complex``.
"""
from __future__ import annotations

import logging

import numpy as np

from ..exceptions import OnSegment, SingularArgument
from ..numerics.geometry import point_segment_distance
from .map_spec import SINGULAR_DISTANCE, ConformalMapSpec

logger = logging.getLogger(__name__)

__all__ = [
    "segment_log_term",
    "eval_map",
    "eval_map_derivative",
    "eval_star",
    "characteristic_scale",
]


def _restore(value: np.ndarray, like):
    """Return a Python complex when the caller passed a scalar."""
    if np.ndim(like) == 0:
        return complex(np.asarray(value).reshape(()))
    return value


def segment_log_term(d_from: complex, d_to: complex, w):
    """Principal Log((w − d_from)/(w − d_to)), the integral of 1/(w − s) over [d_from, d_to].

    Raises
    ------
    OnSegment
        If some ``w`` lies within 1e-12 of the closed segment.
    """
    w_arr = np.asarray(w, dtype=complex)
    if np.any(point_segment_distance(w_arr, d_from, d_to) < SINGULAR_DISTANCE):
        raise OnSegment(f"evaluation point lies on the segment [{d_from!r}, {d_to!r}]")
    if d_from == d_to:
        return _restore(np.zeros_like(w_arr), w)
    return _restore(np.log((w_arr - d_from) / (w_arr - d_to)), w)


def _check_regular(spec: ConformalMapSpec, w: np.ndarray) -> None:
    for group in spec.poles:
        if np.any(np.abs(w - group.b) < SINGULAR_DISTANCE):
            raise SingularArgument(f"evaluation point coincides with the pole at {group.b!r}")
    if spec.segments and np.any(spec.distance_to_chains(w) < SINGULAR_DISTANCE):
        raise OnSegment("evaluation point lies on a segment chain")


def eval_map(spec: ConformalMapSpec, w):
    """ψ(w) for scalar or array ``w``."""
    w_arr = np.asarray(w, dtype=complex)
    _check_regular(spec, w_arr)
    value = spec.q(w_arr)
    for group in spec.poles:
        inv = 1.0 / (w_arr - group.b)
        power = inv
        for coeff in group.coeffs:
            value = value + coeff * power
            power = power * inv
    for chain in spec.segments:
        for d_from, d_to, c in chain.segments():
            value = value + c * np.log((w_arr - d_from) / (w_arr - d_to))
    return _restore(value, w)


def eval_map_derivative(spec: ConformalMapSpec, w):
    """ψ′(w) in closed form.

    Each chain segment contributes c·(1/(w − d_from) − 1/(w − d_to)).
    """
    w_arr = np.asarray(w, dtype=complex)
    _check_regular(spec, w_arr)
    value = spec.q.derivative(w_arr) + np.zeros_like(w_arr)
    for group in spec.poles:
        inv = 1.0 / (w_arr - group.b)
        power = inv * inv
        for j, coeff in enumerate(group.coeffs):
            value = value - (j + 1) * coeff * power
            power = power * inv
    for chain in spec.segments:
        for d_from, d_to, c in chain.segments():
            value = value + c * (1.0 / (w_arr - d_from) - 1.0 / (w_arr - d_to))
    return _restore(value, w)


def eval_star(spec: ConformalMapSpec, w):
    """ψ*(w) = conj ψ(conj w); its singularities sit at the reflections in ℍ₋."""
    w_arr = np.asarray(w, dtype=complex)
    return _restore(np.conj(np.asarray(eval_map(spec, np.conj(w_arr)))), w)


def characteristic_scale(spec: ConformalMapSpec) -> float:
    """Length scale of the compact perturbation: smallest Im over poles and nodes (1 if none)."""
    heights = [s.imag for s in spec.singularities()]
    return float(min(heights)) if heights else 1.0
