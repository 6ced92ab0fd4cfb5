"""
Polyline Geometry
=================
Sampled plane curves stored as complex arrays, with the two geometric
queries the rest of the package needs: self-intersection (for the univalence
screen) and Hausdorff distance (for family limits).

Segment intersection runs through shapely 2 (GEOS robust predicates with an
STR-tree bounding-box prefilter); nearest-point distances use scipy's
``cKDTree``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
import shapely
from scipy.spatial import cKDTree
from shapely import LineString, STRtree

logger = logging.getLogger(__name__)

__all__ = [
    "Polyline",
    "SelfIntersection",
    "polyline_self_intersects",
    "hausdorff_distance",
    "point_segment_distance",
]

PointSet = Union["Polyline", np.ndarray]


@dataclass(frozen=True, eq=False)
class Polyline:
    """Ordered vertices of a plane curve, held as a 1-D complex array.

    Consecutive vertices must be distinct; use :meth:`from_points` to drop
    repeats from sampled data first.
    """

    points: np.ndarray

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=complex).ravel()
        if pts.size < 2:
            raise ValueError(f"a polyline needs at least 2 points, got {pts.size}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("polyline points must be finite")
        repeats = np.flatnonzero(pts[1:] == pts[:-1])
        if repeats.size:
            raise ValueError(f"consecutive polyline points coincide at index {int(repeats[0])}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_points(cls, points) -> Polyline:
        """Build from raw samples, dropping consecutive duplicates."""
        pts = np.asarray(points, dtype=complex).ravel()
        if pts.size:
            keep = np.concatenate(([True], pts[1:] != pts[:-1]))
            pts = pts[keep]
        return cls(pts)

    @classmethod
    def from_xy(cls, x, y) -> Polyline:
        return cls.from_points(np.asarray(x, dtype=float) + 1j * np.asarray(y, dtype=float))

    def __len__(self) -> int:
        return int(self.points.size)

    @property
    def x(self) -> np.ndarray:
        return self.points.real

    @property
    def y(self) -> np.ndarray:
        return self.points.imag

    @property
    def is_closed(self) -> bool:
        return bool(self.points[0] == self.points[-1])

    def coords(self) -> np.ndarray:
        """Vertices as an ``(n, 2)`` float array."""
        return np.column_stack([self.x, self.y])

    def to_linestring(self) -> LineString:
        return LineString(self.coords())

    def densified(self, max_segment_length: float) -> Polyline:
        """Insert vertices so that no segment is longer than ``max_segment_length``."""
        if not max_segment_length > 0:
            raise ValueError("max_segment_length must be positive")
        dense = shapely.segmentize(self.to_linestring(), max_segment_length)
        xy = shapely.get_coordinates(dense)
        return Polyline.from_xy(xy[:, 0], xy[:, 1])


@dataclass(frozen=True)
class SelfIntersection:
    """Outcome of :func:`polyline_self_intersects`."""

    found: bool
    location: Optional[complex] = None
    segments: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.found


def polyline_self_intersects(p: Polyline) -> SelfIntersection:
    """Test whether ``p`` meets itself anywhere other than at a shared vertex.

    Non-adjacent segments may not touch at all. Adjacent segments ``i`` and
    ``i + 1`` (and, for a closed polyline, the last and the first) may share
    only their common vertex, so a fold-back along the same line counts. When
    several pairs meet, the one with the smallest ``(i, j)`` is reported.
    """
    if len(p) < 4:
        raise ValueError(f"self-intersection test needs at least 4 points, got {len(p)}")
    xy = p.coords()
    segs = shapely.linestrings(np.stack([xy[:-1], xy[1:]], axis=1))
    tree = STRtree(segs)
    left, right = tree.query(segs, predicate="intersects")

    adjacent = right == left + 1
    if p.is_closed:
        adjacent |= (left == 0) & (right == len(segs) - 1)
    # adjacent segments overlap only when they run back along the same line
    overlap = np.zeros_like(adjacent)
    if adjacent.any():
        shared = shapely.intersection(segs[left[adjacent]], segs[right[adjacent]])
        overlap[adjacent] = shapely.length(shared) > 0.0
    mask = (right > left) & (~adjacent | overlap)
    if not mask.any():
        return SelfIntersection(False)

    left, right = left[mask], right[mask]
    first = np.lexsort((right, left))[0]
    i, j = int(left[first]), int(right[first])
    hit = shapely.intersection(segs[i], segs[j]).representative_point()
    logger.debug("segments %d and %d cross at (%.6g, %.6g)", i, j, hit.x, hit.y)
    return SelfIntersection(True, complex(hit.x, hit.y), (i, j))


def _vertex_xy(points: PointSet) -> np.ndarray:
    pts = points.points if isinstance(points, Polyline) else np.asarray(points, dtype=complex).ravel()
    if pts.size == 0:
        raise ValueError("point set is empty")
    return np.column_stack([pts.real, pts.imag])


def hausdorff_distance(p: PointSet, q: PointSet) -> float:
    """Symmetric Hausdorff distance between the vertex sets of ``p`` and ``q``.

    Either argument may be a :class:`Polyline` or an array of complex points;
    sampling densely enough is the caller's job.
    """
    a, b = _vertex_xy(p), _vertex_xy(q)
    d_ab, _ = cKDTree(b).query(a)
    d_ba, _ = cKDTree(a).query(b)
    return float(max(d_ab.max(), d_ba.max()))


def point_segment_distance(w, a: complex, b: complex) -> np.ndarray:
    """Euclidean distance from each ``w`` to the closed segment ``[a, b]``."""
    w = np.asarray(w, dtype=complex)
    delta = b - a
    if delta == 0:
        return np.abs(w - a)
    u = np.clip(((w - a) * np.conj(delta)).real / abs(delta) ** 2, 0.0, 1.0)
    return np.abs(w - (a + u * delta))
