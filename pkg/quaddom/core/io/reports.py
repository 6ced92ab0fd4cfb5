"""
Reports
=======
Writers for JSON reports and CSV tables, and the CSV curve reader used for
externally supplied contact curves.
"""
from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Any, Optional, TextIO, Union

import numpy as np
import pandas as pd

from ..exceptions import SchemaError
from ..numerics.geometry import Polyline
from ..quadrature.distribution import QuadratureDistribution
from .map_document import DOCUMENT_VERSION, dumps_canonical, pair

logger = logging.getLogger(__name__)

#: Every float in a CSV report is written with this many significant digits
CSV_FLOAT_FORMAT: str = "%.17g"

CURVE_COLUMNS: tuple[str, ...] = ("t", "x", "y")

__all__ = [
    "CSV_FLOAT_FORMAT",
    "distribution_to_dict",
    "write_json",
    "write_csv",
    "read_curve_csv",
]


def distribution_to_dict(T: QuadratureDistribution) -> dict:
    return {
        "version": DOCUMENT_VERSION,
        "points": [
            {"beta": pair(node.beta), "weights": [pair(a) for a in node.weights]}
            for node in T.points
        ],
        "segments": [
            {"delta_from": pair(seg.delta_from), "delta_to": pair(seg.delta_to),
             "weight": pair(seg.weight)}
            for seg in T.segments
        ],
    }


def write_json(obj: Any, path: Optional[Union[str, Path]] = None, stream: Optional[TextIO] = None) -> None:
    """Canonical JSON to ``path``, or to ``stream`` (stdout) when no path is given."""
    text = dumps_canonical(obj)
    if path is None:
        (stream or sys.stdout).write(text)
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("wrote %s", path)


def write_csv(frame: pd.DataFrame, path: Optional[Union[str, Path]] = None,
              stream: Optional[TextIO] = None) -> None:
    if path is None:
        frame.to_csv(stream or sys.stdout, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    logger.info("wrote %s (%d rows)", path, len(frame))


def read_curve_csv(path: Union[str, Path]) -> tuple[np.ndarray, Polyline]:
    """Read a sampled curve with columns ``t, x, y``; rows are sorted by t.

    Raises
    ------
    SchemaError
        If a column is missing, a value is not numeric, or t repeats.
    """
    path = Path(path)
    try:
        frame = pd.read_csv(path)
    except OSError as exc:
        raise SchemaError(f"{path}: cannot read curve ({exc.strerror})") from exc
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise SchemaError(f"{path.name}: unreadable CSV ({exc})") from exc
    frame.columns = [str(c).strip() for c in frame.columns]
    for column in CURVE_COLUMNS:
        if column not in frame.columns:
            raise SchemaError(f"{path.name}: missing column {column!r}")
        values = pd.to_numeric(frame[column], errors="coerce")
        if values.isna().any():
            row = int(values.isna().to_numpy().argmax())
            raise SchemaError(f"{path.name}: column {column!r} row {row} is not a number")
        frame[column] = values
    frame = frame.sort_values("t", kind="mergesort")
    t = frame["t"].to_numpy(dtype=float)
    if np.any(np.diff(t) == 0):
        raise SchemaError(f"{path.name}: column 't' has repeated values")
    try:
        curve = Polyline.from_xy(frame["x"].to_numpy(), frame["y"].to_numpy())
    except ValueError as exc:
        raise SchemaError(f"{path.name}: {exc}") from exc
    return t, curve
