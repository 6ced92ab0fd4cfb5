"""``quaddom contact``: field of a contact curve above its strip."""
from __future__ import annotations

import argparse
import logging
from pathlib import Path

from ...core.config import RunConfig
from ...core.contact.field import ContactConfig, contact_equivalence_report, cross_member_deviation
from ...core.exceptions import SchemaError
from ...core.families.conchoid import solve_family1
from ...core.io.map_document import DOCUMENT_VERSION, load_map_spec, pair
from ...core.io.reports import read_curve_csv, write_csv, write_json
from ..parsing import complex_arg, grid_arg, range_arg

logger = logging.getLogger(__name__)

#: Largest field difference between members accepted as "the same field"
CROSS_MEMBER_THRESHOLD: float = 1.0e-7


def register(subparsers) -> None:
    parser = subparsers.add_parser("contact", help="field of a contact curve above its strip")
    parser.add_argument("source", nargs="?", default=None,
                        help="map document (.json) or sampled curve (.csv with t, x, y)")
    parser.add_argument("--sigma", type=float, default=1.0, help="density contrast")
    parser.add_argument("--z", type=complex_arg, action="append", required=True,
                        help="field point re,im above the strip (repeatable)")
    parser.add_argument("--strip", type=range_arg, default=None,
                        help="declared strip h1,h2 (default: the curve's extent)")
    parser.add_argument("--h", type=float, default=None,
                        help="asymptote height of a CSV curve (default: mean of its end heights)")
    parser.add_argument("--sweep", type=grid_arg, default=None,
                        help="Conchoid members b=v1,v2,... compared at the same points")
    parser.add_argument("--out", default=None, help="CSV path (default: stdout)")
    parser.set_defaults(handler=cmd_contact)


def _load_config(args: argparse.Namespace) -> ContactConfig:
    path = Path(args.source)
    if path.suffix.lower() == ".csv":
        _, curve = read_curve_csv(path)
        return ContactConfig.from_polyline(curve, args.sigma, args.h, args.strip)
    return ContactConfig.from_spec(load_map_spec(path), args.sigma, args.strip)


def cmd_contact(args: argparse.Namespace, config: RunConfig) -> int:
    if args.sweep is not None:
        return _cmd_sweep(args, config)
    if args.source is None:
        raise SchemaError("source: a map document or CSV curve is required without --sweep")
    cfg = _load_config(args)
    report = contact_equivalence_report(cfg, args.z, config.tolerance)
    write_csv(report.to_frame(), args.out)
    return 0 if report.passed else 1


def _cmd_sweep(args: argparse.Namespace, config: RunConfig) -> int:
    name, values = args.sweep
    if name != "b":
        raise SchemaError(f"sweep: Conchoid members are selected by b, got {name!r}")
    cfgs = [ContactConfig.from_spec(solve_family1(b).spec, args.sigma) for b in values]
    report = cross_member_deviation(cfgs, args.z, config.tolerance)
    out = {
        "version": DOCUMENT_VERSION,
        "b": list(values),
        "z": [pair(z) for z in report.zs],
        "fields": [[pair(value) for value in row] for row in report.fields],
        "max_deviation": report.max_deviation,
    }
    write_json(out, args.out)
    return 0 if report.max_deviation < CROSS_MEMBER_THRESHOLD else 1
