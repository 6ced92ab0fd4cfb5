"""
Map Documents
=============
JSON form of a :class:`ConformalMapSpec`. Complex numbers are ``[re, im]``
pairs::

    {
      "version": 1,
      "q": {"A0": [0, 0.5858], "A1": [1, 0], "A2": [0, 0]},
      "poles": [{"b": [0, 1], "coeffs": [[0.8284, 0]]}],
      "segments": [{"nodes": [[0, 1], [1, 2]], "coeffs": [[0.1, 0]]}]
    }

``q`` entries that are left out are zero; ``poles`` and ``segments`` may be
omitted. Every schema problem raises :class:`SchemaError` naming the field.
"""
from __future__ import annotations

import json
import logging
import numbers
from pathlib import Path
from typing import Any, Union

from ..confmap.map_spec import ConformalMapSpec, PoleGroup, QuadraticPoly, SegmentChain
from ..exceptions import SchemaError

logger = logging.getLogger(__name__)

DOCUMENT_VERSION: int = 1

__all__ = [
    "DOCUMENT_VERSION",
    "pair",
    "parse_pair",
    "spec_to_document",
    "document_to_spec",
    "dumps_canonical",
    "load_map_spec",
    "dump_map_spec",
]


def pair(z: complex) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def parse_pair(value: Any, field: str) -> complex:
    """``[re, im]`` → complex, with the failing field named in the error."""
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise SchemaError(f"{field}: expected an [re, im] pair, got {value!r}")
    if not all(isinstance(v, numbers.Real) and not isinstance(v, bool) for v in value):
        raise SchemaError(f"{field}: pair entries must be numbers, got {value!r}")
    return complex(float(value[0]), float(value[1]))


def _pair_list(value: Any, field: str) -> tuple[complex, ...]:
    if not isinstance(value, list):
        raise SchemaError(f"{field}: expected a list of [re, im] pairs")
    return tuple(parse_pair(item, f"{field}[{i}]") for i, item in enumerate(value))


def _mapping(value: Any, field: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(f"{field}: expected an object, got {type(value).__name__}")
    return value


def _known_keys(doc: dict, allowed: set[str], field: str) -> None:
    extra = sorted(set(doc) - allowed)
    if extra:
        raise SchemaError(f"{field}: unknown key(s) {', '.join(extra)}")


def spec_to_document(spec: ConformalMapSpec) -> dict:
    return {
        "version": DOCUMENT_VERSION,
        "q": {"A0": pair(spec.q.A0), "A1": pair(spec.q.A1), "A2": pair(spec.q.A2)},
        "poles": [
            {"b": pair(group.b), "coeffs": [pair(a) for a in group.coeffs]}
            for group in spec.poles
        ],
        "segments": [
            {"nodes": [pair(d) for d in chain.nodes], "coeffs": [pair(c) for c in chain.coeffs]}
            for chain in spec.segments
        ],
    }


def document_to_spec(doc: Any) -> ConformalMapSpec:
    """Build and validate a spec from a parsed document.

    Raises
    ------
    SchemaError
        On a malformed document or a spec that violates its invariants.
    """
    doc = _mapping(doc, "document")
    _known_keys(doc, {"version", "q", "poles", "segments"}, "document")
    version = doc.get("version")
    if version != DOCUMENT_VERSION:
        raise SchemaError(f"version: expected {DOCUMENT_VERSION}, got {version!r}")
    if "q" not in doc:
        raise SchemaError("q: missing")
    q_doc = _mapping(doc["q"], "q")
    _known_keys(q_doc, {"A0", "A1", "A2"}, "q")

    coefficients = [parse_pair(q_doc.get(key, [0, 0]), f"q.{key}") for key in ("A0", "A1", "A2")]
    try:
        q = QuadraticPoly(*coefficients)
    except ValueError as exc:
        raise SchemaError(f"q: {exc}") from exc

    poles = []
    for i, item in enumerate(doc.get("poles", [])):
        field = f"poles[{i}]"
        item = _mapping(item, field)
        _known_keys(item, {"b", "coeffs"}, field)
        b = parse_pair(item.get("b"), f"{field}.b")
        coeffs = _pair_list(item.get("coeffs"), f"{field}.coeffs")
        try:
            poles.append(PoleGroup(b, coeffs))
        except ValueError as exc:
            raise SchemaError(f"{field}: {exc}") from exc

    segments = []
    for i, item in enumerate(doc.get("segments", [])):
        field = f"segments[{i}]"
        item = _mapping(item, field)
        _known_keys(item, {"nodes", "coeffs"}, field)
        nodes = _pair_list(item.get("nodes"), f"{field}.nodes")
        coeffs = _pair_list(item.get("coeffs"), f"{field}.coeffs")
        try:
            segments.append(SegmentChain(nodes, coeffs))
        except ValueError as exc:
            raise SchemaError(f"{field}: {exc}") from exc

    try:
        return ConformalMapSpec(q, tuple(poles), tuple(segments))
    except ValueError as exc:
        raise SchemaError(f"document: {exc}") from exc


def dumps_canonical(obj: Any) -> str:
    """Sorted keys, shortest round-trip floats, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"


def load_map_spec(path: Union[str, Path]) -> ConformalMapSpec:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise SchemaError(f"{path}: cannot read map document ({exc.strerror})") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path.name}: not valid JSON ({exc.msg} at line {exc.lineno})") from exc
    spec = document_to_spec(doc)
    logger.debug("loaded map spec from %s", path)
    return spec


def dump_map_spec(spec: ConformalMapSpec, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_canonical(spec_to_document(spec)), encoding="utf-8")
    return path
