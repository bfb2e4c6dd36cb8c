"""Exact integer geometric primitives and convex polygon validation.

All arithmetic is exact signed integer arithmetic (Python ints).  Coordinates
are bounded so the compiled fast paths, which work on int64 arrays, can never
overflow: with |x|, |y| <= 10**9 every doubled area of a triangle fits in a
signed 64-bit integer.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

import numpy as np

#: Default coordinate bound enforced by validation.
DEFAULT_COORD_BOUND = 1 << 25

#: Hard ceiling on coordinates.  2 * (2 * MAX_COORD_BOUND)**2 < 2**63, so the
#: int64 kernels are exact for any polygon that passes validation.
MAX_COORD_BOUND = 10**9


class GeometryError(ValueError):
    """Base class for all geometric input errors."""


class TooFewPoints(GeometryError):
    pass


class DuplicatePoint(GeometryError):
    pass


class CollinearPoints(GeometryError):
    pass


class NotConvex(GeometryError):
    pass


class CoordinateOverflow(GeometryError):
    pass


class PointNotOnHull(GeometryError):
    pass


class Point(NamedTuple):
    x: int
    y: int


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p).

    +1 for a counter-clockwise turn, -1 for clockwise, 0 for collinear.
    """
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def doubled_triangle_area(p: Point, q: Point, r: Point) -> int:
    """Signed doubled area of triangle pqr: (q - p) x (r - p), exact."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def doubled_polygon_area(points: Sequence[Point]) -> int:
    """Signed doubled area of a polygon by the shoelace sum.

    Positive for counter-clockwise vertex order, negative for clockwise.
    """
    if len(points) < 3:
        raise TooFewPoints(f"need at least 3 points, got {len(points)}")
    total = 0
    px, py = points[-1]
    for qx, qy in points:
        total += px * qy - qx * py
        px, py = qx, qy
    return total


def index_tuple(indices: Iterable[int], n: int, k: int | None = None) -> tuple[int, ...]:
    """Canonical form of a k-tuple of vertex indices.

    Indices must be pairwise distinct and in range; the canonical form lists
    them in increasing order (equivalently: increasing cyclic order starting
    from the smallest index).
    """
    t = tuple(sorted(indices))
    if len(set(t)) != len(t):
        raise GeometryError(f"indices are not pairwise distinct: {t}")
    if k is not None and len(t) != k:
        raise GeometryError(f"expected {k} indices, got {len(t)}")
    if t and (t[0] < 0 or t[-1] >= n):
        raise GeometryError(f"index out of range for n={n}: {t}")
    return t


class ConvexPolygon:
    """A strictly convex polygon stored in counter-clockwise cyclic order.

    Instances are produced by :func:`validate_convex_polygon` or
    :func:`canonical_cyclic_order` and are immutable.
    """

    __slots__ = ("vertices", "n", "_xs", "_ys")

    def __init__(self, vertices: tuple[Point, ...], _validated: bool = False):
        if not _validated:
            raise TypeError(
                "construct ConvexPolygon via validate_convex_polygon()"
            )
        self.vertices = vertices
        self.n = len(vertices)
        self._xs: np.ndarray | None = None
        self._ys: np.ndarray | None = None

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> Point:
        return self.vertices[i]

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, ConvexPolygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"ConvexPolygon(n={self.n})"

    def next_index(self, i: int) -> int:
        return (i + 1) % self.n

    def prev_index(self, i: int) -> int:
        return (i - 1) % self.n

    def coord_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Vertex coordinates as int64 arrays (cached)."""
        if self._xs is None:
            self._xs = np.fromiter((p.x for p in self.vertices), dtype=np.int64, count=self.n)
            self._ys = np.fromiter((p.y for p in self.vertices), dtype=np.int64, count=self.n)
        return self._xs, self._ys

    def doubled_area_of(self, indices: Sequence[int]) -> int:
        """Absolute doubled area of the sub-polygon on the given indices."""
        pts = [self.vertices[i] for i in indices]
        if len(pts) == 3:
            return abs(doubled_triangle_area(*pts))
        return abs(doubled_polygon_area(pts))


def _check_coordinates(points: Sequence[Point], coord_bound: int) -> None:
    if coord_bound > MAX_COORD_BOUND:
        raise CoordinateOverflow(
            f"coordinate bound {coord_bound} exceeds hard ceiling {MAX_COORD_BOUND}"
        )
    for i, (x, y) in enumerate(points):
        if abs(x) > coord_bound or abs(y) > coord_bound:
            raise CoordinateOverflow(
                f"vertex {i} = ({x}, {y}) outside |coord| <= {coord_bound}"
            )


def validate_convex_polygon(
    points: Sequence[Point | tuple[int, int]],
    declared_orientation: str = "CCW",
    coord_bound: int = DEFAULT_COORD_BOUND,
) -> ConvexPolygon:
    """Validate a strictly convex vertex cycle and normalize it to CCW.

    ``declared_orientation`` states the order of the input list; clockwise
    input is stored reversed.  Raises :class:`TooFewPoints`,
    :class:`DuplicatePoint`, :class:`CollinearPoints`, :class:`NotConvex` or
    :class:`CoordinateOverflow` on bad input.
    """
    if declared_orientation not in ("CW", "CCW"):
        raise GeometryError(f"orientation must be 'CW' or 'CCW', got {declared_orientation!r}")
    pts = [Point(int(p[0]), int(p[1])) for p in points]
    n = len(pts)
    if n < 3:
        raise TooFewPoints(f"polygon needs at least 3 vertices, got {n}")
    _check_coordinates(pts, coord_bound)
    if len(set(pts)) != n:
        raise DuplicatePoint("polygon has repeated vertices")
    if declared_orientation == "CW":
        pts.reverse()

    for i in range(n):
        p, q, r = pts[i - 2], pts[i - 1], pts[i]
        s = orientation(p, q, r)
        if s == 0:
            raise CollinearPoints(f"vertices {(i - 2) % n}, {(i - 1) % n}, {i} are collinear")
        if s < 0:
            raise NotConvex(f"vertices {(i - 2) % n}, {(i - 1) % n}, {i} turn clockwise")

    # All-left turns alone admit self-intersecting cycles that wind more than
    # once; a convex CCW cycle has exactly one upper->lower and one
    # lower->upper transition of edge directions.
    halves = []
    for i in range(n):
        dx = pts[(i + 1) % n].x - pts[i].x
        dy = pts[(i + 1) % n].y - pts[i].y
        halves.append(0 if (dy > 0 or (dy == 0 and dx > 0)) else 1)
    transitions = sum(1 for i in range(n) if halves[i] != halves[i - 1])
    if transitions > 2:
        raise NotConvex("vertex cycle winds around more than once")

    return ConvexPolygon(tuple(pts), _validated=True)


def convex_hull(points: Iterable[Point | tuple[int, int]]) -> list[Point]:
    """Strict convex hull in CCW order, starting at the lexicographically
    smallest point.  Collinear boundary points are not hull vertices."""
    pts = sorted(set(Point(int(p[0]), int(p[1])) for p in points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and orientation(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def canonical_cyclic_order(
    points: Iterable[Point | tuple[int, int]],
    coord_bound: int = DEFAULT_COORD_BOUND,
) -> ConvexPolygon:
    """Recover the CCW cyclic order of a set of points in convex position.

    The first stored vertex is the lexicographically smallest point.  Raises
    :class:`PointNotOnHull` if any input point is not a hull vertex (strictly
    inside, or on the interior of a hull edge).
    """
    pts = [Point(int(p[0]), int(p[1])) for p in points]
    hull = convex_hull(pts)
    missing = set(pts) - set(hull)
    if missing:
        raise PointNotOnHull(f"points not in strictly convex position: {sorted(missing)}")
    return validate_convex_polygon(hull, "CCW", coord_bound=coord_bound)
