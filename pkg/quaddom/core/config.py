"""
core/config.py
==============
Run configuration for the command line.

Defaults live in the packaged ``configs/base_config.yaml``. A user YAML file
is merged on top of them key by key, then the environment is applied:

    QUADDOM_TOL   relative tolerance (``tolerance.rel_tol``), default 1e-8
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Mapping, Optional, Union

import yaml

from .confmap.boundary import MIN_TRACE_POINTS, Grading
from .exceptions import SchemaError
from .numerics.integration import ToleranceSpec

logger = logging.getLogger(__name__)

BASE_CONFIG_PATH: Path = Path(__file__).resolve().parent.parent / "configs" / "base_config.yaml"

TOLERANCE_ENV_VAR: str = "QUADDOM_TOL"

__all__ = [
    "TraceSettings",
    "WindowSettings",
    "RunConfig",
    "merge_config",
    "load_run_config",
]


@dataclass(frozen=True)
class TraceSettings:
    n: int = 4096
    t_span: float = 1.0e3
    grading: Grading = Grading.TAN_GRADED


@dataclass(frozen=True)
class WindowSettings:
    """Plot window; ``x`` also clips the limit-set comparison."""

    x: tuple[float, float] = (-5.0, 5.0)
    y: tuple[float, float] = (-3.0, 7.0)


@dataclass(frozen=True)
class RunConfig:
    tolerance: ToleranceSpec = field(default_factory=lambda: ToleranceSpec(rel_tol=1e-8))
    trace: TraceSettings = field(default_factory=TraceSettings)
    pullback_radius: float = 500.0
    window: WindowSettings = field(default_factory=WindowSettings)
    sweeps: Mapping[str, Mapping[str, tuple[float, ...]]] = field(default_factory=dict)
    output_dir: Path = Path("results")

    def with_rel_tol(self, rel_tol: float) -> RunConfig:
        return replace(self, tolerance=replace(self.tolerance, rel_tol=rel_tol))

    def sweep_grid(self, kind: str) -> tuple[str, tuple[float, ...]]:
        """Default (parameter name, values) for a family kind."""
        try:
            (name, values), = self.sweeps[kind].items()
        except (KeyError, ValueError):
            raise SchemaError(f"sweeps.{kind}: expected exactly one parameter grid") from None
        return name, values


def merge_config(base: dict, override: Mapping) -> dict:
    """Nested-dict merge; ``override`` wins on leaves."""
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, Mapping) and isinstance(merged.get(key), Mapping):
            merged[key] = merge_config(dict(merged[key]), value)
        else:
            merged[key] = value
    return merged


def _read_yaml(path: Path) -> dict:
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except yaml.YAMLError as exc:
        raise SchemaError(f"{path.name}: invalid YAML ({exc})") from exc
    if not isinstance(data, dict):
        raise SchemaError(f"{path.name}: top level must be a mapping")
    return data


def _section(raw: Mapping, key: str, allowed: set[str]) -> dict:
    value = raw.get(key, {}) or {}
    if not isinstance(value, Mapping):
        raise SchemaError(f"{key}: expected a mapping")
    unknown = sorted(set(value) - allowed)
    if unknown:
        raise SchemaError(f"{key}: unknown key(s) {', '.join(unknown)}")
    return dict(value)


def _range(value: Any, key: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in value)
    except (TypeError, ValueError):
        raise SchemaError(f"{key}: expected [low, high]") from None
    if not lo < hi:
        raise SchemaError(f"{key}: low must be below high, got [{lo}, {hi}]")
    return lo, hi


def _build(raw: Mapping) -> RunConfig:
    unknown = sorted(set(raw) - {"tolerance", "trace", "pullback", "window", "sweeps", "output"})
    if unknown:
        raise SchemaError(f"unknown section(s) {', '.join(unknown)}")
    try:
        tol = _section(raw, "tolerance", {"abs_tol", "rel_tol", "max_subdivisions"})
        tolerance = ToleranceSpec(
            abs_tol=float(tol.get("abs_tol", 1e-12)),
            rel_tol=float(tol.get("rel_tol", 1e-8)),
            max_subdivisions=int(tol.get("max_subdivisions", 2000)),
        )
        tr = _section(raw, "trace", {"n", "t_span", "grading"})
        trace = TraceSettings(
            n=int(tr.get("n", 4096)),
            t_span=float(tr.get("t_span", 1e3)),
            grading=Grading(tr.get("grading", Grading.TAN_GRADED.value)),
        )
        radius = float(_section(raw, "pullback", {"radius"}).get("radius", 500.0))
    except SchemaError:
        raise
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"invalid configuration value: {exc}") from exc
    if trace.n < MIN_TRACE_POINTS or not trace.t_span > 0 or not radius > 0:
        raise SchemaError(f"trace.n must be >= {MIN_TRACE_POINTS}; trace.t_span and pullback.radius "
                          "must be positive")

    win = _section(raw, "window", {"x", "y"})
    window = WindowSettings(
        x=_range(win.get("x", (-5.0, 5.0)), "window.x"),
        y=_range(win.get("y", (-3.0, 7.0)), "window.y"),
    )

    sweeps: dict[str, dict[str, tuple[float, ...]]] = {}
    for kind, grid in _section(raw, "sweeps", {"conchoid", "parabola", "ray"}).items():
        if not isinstance(grid, Mapping) or len(grid) != 1:
            raise SchemaError(f"sweeps.{kind}: expected one parameter name with a list of values")
        (name, values), = grid.items()
        try:
            values = tuple(float(v) for v in values)
        except (TypeError, ValueError):
            raise SchemaError(f"sweeps.{kind}.{name}: values must be numbers") from None
        if not values:
            raise SchemaError(f"sweeps.{kind}.{name}: grid is empty")
        sweeps[kind] = {str(name): values}

    output = _section(raw, "output", {"directory"})
    return RunConfig(
        tolerance=tolerance,
        trace=trace,
        pullback_radius=radius,
        window=window,
        sweeps=sweeps,
        output_dir=Path(output.get("directory", "results")),
    )


def load_run_config(
    path: Optional[Union[str, Path]] = None,
    env: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """Packaged defaults, then ``path`` (if any), then environment overrides.

    Raises
    ------
    SchemaError
        On unreadable files, unknown keys or invalid values.
    """
    env = os.environ if env is None else env
    raw = _read_yaml(BASE_CONFIG_PATH)
    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise SchemaError(f"config file {path} does not exist")
        user = _read_yaml(path)
        raw = merge_config(raw, user)
        # a grid names its own parameter, so it replaces the default grid whole
        if isinstance(user.get("sweeps"), Mapping):
            raw["sweeps"] = {**(raw.get("sweeps") or {}), **user["sweeps"]}
        logger.debug("merged configuration from %s", path)
    config = _build(raw)

    override = env.get(TOLERANCE_ENV_VAR)
    if override:
        try:
            config = config.with_rel_tol(float(override))
        except ValueError as exc:
            raise SchemaError(f"{TOLERANCE_ENV_VAR}: {exc}") from exc
        logger.debug("relative tolerance %s taken from %s", override, TOLERANCE_ENV_VAR)
    return config
