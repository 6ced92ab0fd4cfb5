"""
cli/main.py
===========
``quaddom`` command line.

Exit codes: 0 success, 1 verification failed, 2 bad input (schema or
arguments), 3 numerical failure, 4 inadmissible test function, 5 evaluation
point inside the contact strip.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence

from .. import __version__
from ..core.config import load_run_config
from ..core.exceptions import QuadDomError
from ..core.logging_config import configure_logging, parse_level
from .commands import SUBCOMMANDS

logger = logging.getLogger(__name__)

__all__ = ["build_parser", "main"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quaddom",
        description="Unbounded quadrature domains from conformal maps of the lower half-plane.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", default=None, help="YAML run configuration merged over the defaults")
    parser.add_argument("--log-level", default="warning", help="debug, info, warning or error")
    parser.add_argument("--log-file", default=None, help="also log to this file")
    parser.add_argument("--tol", type=float, default=None, help="relative tolerance (overrides QUADDOM_TOL)")
    parser.add_argument("--output-dir", default=None, help="directory for default output files")
    commands = parser.add_subparsers(dest="command", required=True)
    for module in SUBCOMMANDS:
        module.register(commands)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        configure_logging(parse_level(args.log_level), args.log_file)
    except ValueError as exc:
        parser.error(str(exc))

    try:
        config = load_run_config(args.config)
        if args.tol is not None:
            config = config.with_rel_tol(args.tol)
        if args.output_dir is not None:
            config = replace(config, output_dir=Path(args.output_dir))
        logger.info("quaddom %s: %s", args.command, " ".join(sys.argv[1:]) if argv is None else " ".join(argv))
        return int(args.handler(args, config))
    except QuadDomError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        print(f"quaddom: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        # invariant violations of hand-built inputs (e.g. a bad --tol)
        logger.error("invalid input: %s", exc)
        print(f"quaddom: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
