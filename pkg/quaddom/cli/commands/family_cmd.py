"""``quaddom family``: sweep one of the example families over a parameter grid."""
from __future__ import annotations

import argparse
import logging

from ...core.config import RunConfig
from ...core.exceptions import NumericalFailure, UnsupportedKind
from ...core.families.solution import FamilyKind
from ...core.families.sweep import failed_everywhere, sweep_family
from ...core.io.reports import write_csv
from ...core.visualization.figures import plot_family
from ..parsing import grid_arg

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("family", help="solve and sweep an example family")
    parser.add_argument("--kind", required=True,
                        help="1/conchoid, 2/parabola or 3/ray")
    parser.add_argument("--grid", type=grid_arg, default=None,
                        help="parameter grid name=v1,v2,... (default from the config)")
    parser.add_argument("--limits", action="store_true",
                        help="add the distance to the family's limit set")
    parser.add_argument("--figure", nargs="?", const="", default=None,
                        help="write an SVG of the members (optional path)")
    parser.add_argument("--out", default=None, help="CSV path (default: <output>/family_<kind>.csv)")
    parser.set_defaults(handler=cmd_family)


def cmd_family(args: argparse.Namespace, config: RunConfig) -> int:
    try:
        kind = FamilyKind.parse(args.kind)
    except ValueError as exc:
        raise UnsupportedKind(str(exc)) from None
    label = kind.name.lower()
    if args.limits and kind is FamilyKind.RAY:
        raise UnsupportedKind("the ray family has no limit set to compare against")
    name, values = args.grid if args.grid is not None else config.sweep_grid(label)

    sweep = sweep_family(kind, values, name=name, limits=args.limits,
                         window=max(abs(v) for v in config.window.x), tol=config.tolerance)
    out = args.out or config.output_dir / f"family_{label}.csv"
    write_csv(sweep.frame, out)

    if args.figure is not None:
        figure = args.figure or config.output_dir / f"family_{label}.svg"
        plot_family(kind, sweep.members, figure, name, config.window, n=config.trace.n)

    if failed_everywhere(sweep.frame):
        raise NumericalFailure(f"no {label} member could be solved on the grid {name}={values}")
    return 0
