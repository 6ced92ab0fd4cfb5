"""quaddom - unbounded quadrature domains from conformal maps of the lower half-plane."""

from __future__ import annotations

__version__ = "0.1.0"
__author__ = "quaddom Development Team"

from . import core, validation  # noqa: E402

__all__ = ["core", "validation", "__version__"]
