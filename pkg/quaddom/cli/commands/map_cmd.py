"""``quaddom map``: evaluate, trace, classify and screen a map document."""
from __future__ import annotations

import argparse
import logging

from ...core.config import RunConfig
from ...core.confmap.asymptote import asymptote_deviation, classify_asymptote
from ...core.confmap.boundary import Grading, trace_boundary
from ...core.confmap.evaluation import eval_map, eval_map_derivative
from ...core.confmap.map_spec import describe
from ...core.confmap.univalence import check_univalence_boundary
from ...core.io.map_document import DOCUMENT_VERSION, load_map_spec, pair
from ...core.io.reports import write_csv, write_json
from ...core.visualization.figures import plot_boundaries
from ..parsing import complex_arg

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("map", help="work with a single map document")
    actions = parser.add_subparsers(dest="action", required=True)

    p_eval = actions.add_parser("eval", help="print ψ(w) and ψ′(w)")
    p_eval.add_argument("spec", help="map document (JSON)")
    p_eval.add_argument("--w", type=complex_arg, action="append", required=True,
                        help="evaluation point re,im (repeatable)")
    p_eval.set_defaults(handler=cmd_map_eval)

    p_trace = actions.add_parser("trace", help="write the boundary trace as CSV (t, x, y)")
    p_trace.add_argument("spec")
    p_trace.add_argument("--t-min", type=float, default=None)
    p_trace.add_argument("--t-max", type=float, default=None)
    p_trace.add_argument("--n", type=int, default=None)
    p_trace.add_argument("--grading", choices=[g.value for g in Grading], default=None)
    p_trace.add_argument("--out", default=None, help="CSV path (default: stdout)")
    p_trace.add_argument("--figure", default=None, help="also draw the trace to this SVG")
    p_trace.set_defaults(handler=cmd_map_trace)

    p_class = actions.add_parser("classify", help="print the asymptote class as JSON")
    p_class.add_argument("spec")
    p_class.set_defaults(handler=cmd_map_classify)

    p_uni = actions.add_parser("univalence", help="screen the map for univalence")
    p_uni.add_argument("spec")
    p_uni.add_argument("--n", type=int, default=None)
    p_uni.add_argument("--t-span", type=float, default=None)
    p_uni.set_defaults(handler=cmd_map_univalence)


def cmd_map_eval(args: argparse.Namespace, config: RunConfig) -> int:
    spec = load_map_spec(args.spec)
    logger.info("map: %s", describe(spec))
    points = [
        {"w": pair(w), "psi": pair(eval_map(spec, w)), "dpsi": pair(eval_map_derivative(spec, w))}
        for w in args.w
    ]
    write_json({"version": DOCUMENT_VERSION, "points": points})
    return 0


def cmd_map_trace(args: argparse.Namespace, config: RunConfig) -> int:
    spec = load_map_spec(args.spec)
    t_min = -config.trace.t_span if args.t_min is None else args.t_min
    t_max = config.trace.t_span if args.t_max is None else args.t_max
    n = config.trace.n if args.n is None else args.n
    grading = config.trace.grading if args.grading is None else Grading(args.grading)
    trace = trace_boundary(spec, t_min, t_max, n, grading)
    write_csv(trace.to_frame(), args.out)
    if args.figure:
        plot_boundaries([("boundary", spec)], args.figure, config.window, title=describe(spec))
    return 0


def cmd_map_classify(args: argparse.Namespace, config: RunConfig) -> int:
    spec = load_map_spec(args.spec)
    asymptote = classify_asymptote(spec)
    out = {"version": DOCUMENT_VERSION, **asymptote.to_dict()}
    if not spec.is_polynomial:
        T = 10.0 * (1.0 + spec.max_node_modulus())
        out["deviation"] = {"T": T, "max": asymptote_deviation(spec, T)}
    write_json(out)
    return 0


def cmd_map_univalence(args: argparse.Namespace, config: RunConfig) -> int:
    spec = load_map_spec(args.spec)
    n = max(config.trace.n, 1024) if args.n is None else args.n
    t_span = config.trace.t_span if args.t_span is None else args.t_span
    verdict = check_univalence_boundary(spec, n, t_span)
    write_json({"version": DOCUMENT_VERSION, **verdict.to_dict()})
    return 0 if verdict.passed else 1
