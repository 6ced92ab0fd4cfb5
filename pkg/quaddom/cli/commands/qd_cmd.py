"""``quaddom qd``: derive a map's quadrature distribution and verify the identity."""
from __future__ import annotations

import argparse
import logging

from ...core.config import RunConfig
from ...core.io.map_document import load_map_spec, pair
from ...core.io.reports import distribution_to_dict, write_json
from ...core.quadrature.distribution import derive_distribution
from ...core.quadrature.identity import pullback_area_integral, verify_quadrature_identity
from ..parsing import testfn_arg

logger = logging.getLogger(__name__)

#: Exit code when a test function fails the outside-domain screen
EXIT_INADMISSIBLE: int = 4


def register(subparsers) -> None:
    parser = subparsers.add_parser("qd", help="quadrature distribution of a map")
    actions = parser.add_subparsers(dest="action", required=True)

    p_derive = actions.add_parser("derive", help="print the distribution T as JSON")
    p_derive.add_argument("spec")
    p_derive.add_argument("--out", default=None, help="JSON path (default: stdout)")
    p_derive.set_defaults(handler=cmd_qd_derive)

    p_verify = actions.add_parser("verify", help="compare T(f) with the boundary integral")
    p_verify.add_argument("spec")
    p_verify.add_argument("--testfn", type=testfn_arg, action="append", required=True,
                          help="test function (z - z0)^-k as re,im,k (repeatable)")
    p_verify.add_argument("--pullback", action="store_true",
                          help="also report the area integral over the lower half-plane")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(handler=cmd_qd_verify)


def cmd_qd_derive(args: argparse.Namespace, config: RunConfig) -> int:
    spec = load_map_spec(args.spec)
    T = derive_distribution(spec, config.tolerance.tightened(10.0))
    write_json(distribution_to_dict(T), args.out)
    return 0


def cmd_qd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    spec = load_map_spec(args.spec)
    T = derive_distribution(spec, config.tolerance.tightened(10.0))
    report = verify_quadrature_identity(spec, T, args.testfn, config.tolerance)
    out = report.to_dict()
    if args.pullback:
        for record, entry in zip(report.records, out["records"]):
            f = next(f for f in args.testfn if f.z0 == record.z0 and f.k == record.k)
            entry["pullback_area"] = pair(pullback_area_integral(spec, f, config.pullback_radius))
    write_json(out, args.out)
    if report.rejected:
        logger.error("%d test function(s) failed the outside-domain screen", len(report.rejected))
        return EXIT_INADMISSIBLE
    return 0 if report.passed else 1
