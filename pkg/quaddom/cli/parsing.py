"""
cli/parsing.py
==============
argparse ``type=`` converters for the command-line surface. Complex numbers
are written ``re,im``; test functions ``re,im,k``; parameter grids
``name=v1,v2,...``.
"""
from __future__ import annotations

import argparse
import math

from ..core.quadrature.testfunctions import TestFunction

__all__ = ["complex_arg", "testfn_arg", "grid_arg", "range_arg"]


def _floats(text: str, count: int, what: str) -> list[float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise argparse.ArgumentTypeError(f"{what} must have {count} comma-separated numbers, got {text!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be numeric, got {text!r}") from None
    if not all(math.isfinite(v) for v in values):
        raise argparse.ArgumentTypeError(f"{what} must be finite, got {text!r}")
    return values


def complex_arg(text: str) -> complex:
    """``"0,-1"`` → ``-1j``."""
    re, im = _floats(text, 2, "complex value")
    return complex(re, im)


def range_arg(text: str) -> tuple[float, float]:
    lo, hi = _floats(text, 2, "range")
    if not lo <= hi:
        raise argparse.ArgumentTypeError(f"range must be ordered low,high, got {text!r}")
    return lo, hi


def testfn_arg(text: str) -> TestFunction:
    """``"0,3,3"`` → (z − 3i)^(−3)."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"test function must be re,im,k, got {text!r}")
    re, im = _floats(",".join(parts[:2]), 2, "test-function pole")
    try:
        k = int(parts[2])
        return TestFunction(complex(re, im), k)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid test function {text!r}: {exc}") from None


def grid_arg(text: str) -> tuple[str, tuple[float, ...]]:
    """``"r=0.5,0.7"`` → ``("r", (0.5, 0.7))``."""
    name, sep, values = text.partition("=")
    name = name.strip()
    if not sep or not name or not values.strip():
        raise argparse.ArgumentTypeError(f"grid must look like name=v1,v2,..., got {text!r}")
    parts = [p.strip() for p in values.split(",") if p.strip()]
    return name, tuple(_floats(",".join(parts), len(parts), f"grid {name}"))
