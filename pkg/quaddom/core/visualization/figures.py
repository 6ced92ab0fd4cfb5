"""
Figures
=======
Static SVG figures of traced boundaries. Output is reproducible: no
timestamp, a fixed hash salt and text converted to paths, so identical
inputs give byte-identical files.
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Sequence, Union

import matplotlib
from matplotlib.figure import Figure

from ..confmap.asymptote import RayAsymptote, classify_asymptote
from ..confmap.boundary import Grading, trace_boundary
from ..confmap.map_spec import ConformalMapSpec
from ..config import WindowSettings
from ..families.limits import limit_curves
from ..families.solution import FamilyKind, FamilySolution

logger = logging.getLogger(__name__)

SVG_RC: dict = {"svg.hashsalt": "quaddom", "svg.fonttype": "path"}

FAMILY_TITLES: dict[FamilyKind, str] = {
    FamilyKind.CONCHOID: "Conchoid family",
    FamilyKind.PARABOLA: "Parabola family",
    FamilyKind.RAY: "Ray family",
}

__all__ = ["member_label", "plot_boundaries", "plot_family"]


def member_label(solution: FamilySolution, name: str) -> str:
    label = f"{name} = {solution.param:g}"
    tag = solution.derived.get("type")
    return f"{label} ({tag})" if tag else label


def _draw_trace(ax, spec: ConformalMapSpec, window: WindowSettings, n: int, **style) -> None:
    span = 10.0 * max(abs(v) for v in (*window.x, *window.y))
    trace = trace_boundary(spec, -span, span, n, Grading.TAN_GRADED)
    label = style.pop("label", None)
    for run in trace.window_runs(window.x):
        ax.plot(run.real, run.imag, label=label, **style)
        label = None


def _save(fig: Figure, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with matplotlib.rc_context(SVG_RC):
        fig.savefig(path, format="svg", metadata={"Date": None})
    logger.info("figure saved to %s", path)
    return path


def _frame(title: str, window: WindowSettings):
    fig = Figure(figsize=(7, 7))
    ax = fig.add_subplot()
    ax.set_xlim(*window.x)
    ax.set_ylim(*window.y)
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    return fig, ax


def plot_boundaries(
    specs: Sequence[tuple[str, ConformalMapSpec]],
    path: Union[str, Path],
    window: Optional[WindowSettings] = None,
    title: str = "Boundary",
    n: int = 4096,
) -> Path:
    """Overlay the traced boundaries of labelled maps."""
    window = window or WindowSettings()
    fig, ax = _frame(title, window)
    for label, spec in specs:
        _draw_trace(ax, spec, window, n, label=label, linewidth=1.2)
    if specs:
        ax.legend(loc="upper right", fontsize="small")
    return _save(fig, path)


def plot_family(
    kind: FamilyKind,
    members: Sequence[FamilySolution],
    path: Union[str, Path],
    name: str,
    window: Optional[WindowSettings] = None,
    n: int = 4096,
) -> Path:
    """Family members in one figure, with the limit set (or the ray) dashed."""
    window = window or WindowSettings()
    fig, ax = _frame(FAMILY_TITLES[kind], window)
    for solution in members:
        _draw_trace(ax, solution.spec, window, n, label=member_label(solution, name), linewidth=1.2)

    if kind is FamilyKind.RAY:
        if members:
            asymptote = classify_asymptote(members[0].spec)
            if isinstance(asymptote, RayAsymptote):
                apex = asymptote.apex
                ax.plot([apex.real, window.x[1]], [apex.imag, apex.imag], "k--", linewidth=0.8,
                        label="asymptote")
    else:
        circle, curve = limit_curves(kind, window=max(abs(v) for v in window.x))
        ax.plot(circle.real, circle.imag, "k--", linewidth=0.8, label="limit set")
        ax.plot(curve.real, curve.imag, "k--", linewidth=0.8)
    ax.legend(loc="upper right", fontsize="small")
    return _save(fig, path)
