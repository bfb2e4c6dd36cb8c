"""Bundled counter-example polygons.

``fixture9`` is a 9-vertex polygon on which the classic triangle sweep
reports the 2-stable triangle (c0, c1, c2) instead of the optimum
(a0, b0, c0), from every starting root.  ``fixture16`` is a 16-vertex polygon
on which the classic quadrilateral sweep reports (a1, a4, a8, a12) instead of
the optimum (a4, a8, a12, a16).

The 9 points are published as labeled coordinates without a cyclic order;
the order below is their convex hull, CCW, starting at the lexicographically
smallest point, and is frozen (a test re-derives it).  The 16 points are
listed in polygon order already and are taken as the CCW cycle.
"""

from __future__ import annotations

from .geometry import ConvexPolygon, Point, validate_convex_polygon

#: 9-vertex triangle counter-example, hull-derived CCW order.
FIXTURE9_LABELED = (
    ("b1", Point(759, 2927)),
    ("b0", Point(1000, 1000)),
    ("c1", Point(1213, 691)),
    ("a2", Point(3383, 413)),
    ("c0", Point(5000, 1000)),
    ("a1", Point(4752, 4262)),
    ("b2", Point(4745, 4322)),
    ("a0", Point(3040, 4460)),
    ("c2", Point(2506, 4423)),
)

#: 16-vertex quadrilateral counter-example, CCW as listed.  a1 is printed
#: with a leading zero in the source material and is read as (26096, 6750).
FIXTURE16_LABELED = (
    ("a1", Point(26096, 6750)),
    ("a2", Point(26130, 9933)),
    ("a3", Point(25940, 10728)),
    ("a4", Point(23090, 22189)),
    ("a5", Point(18106, 23681)),
    ("a6", Point(13484, 24407)),
    ("a7", Point(13174, 24343)),
    ("a8", Point(3090, 22189)),
    ("a9", Point(0, 17308)),
    ("a10", Point(80, 14350)),
    ("a11", Point(323, 13331)),
    ("a12", Point(3090, 2189)),
    ("a13", Point(8459, 385)),
    ("a14", Point(12837, 0)),
    ("a15", Point(13392, 114)),
    ("a16", Point(23090, 2189)),
)


def fixture9() -> tuple[ConvexPolygon, dict[str, int]]:
    """The 9-vertex fixture and its label -> index map."""
    polygon = validate_convex_polygon([p for _, p in FIXTURE9_LABELED], "CCW")
    return polygon, {label: i for i, (label, _) in enumerate(FIXTURE9_LABELED)}


def fixture16() -> tuple[ConvexPolygon, dict[str, int]]:
    """The 16-vertex fixture and its label -> index map."""
    polygon = validate_convex_polygon([p for _, p in FIXTURE16_LABELED], "CCW")
    return polygon, {label: i for i, (label, _) in enumerate(FIXTURE16_LABELED)}


def labels_of(label_map: dict[str, int], indices: tuple[int, ...]) -> tuple[str, ...]:
    """Map vertex indices back to fixture labels, in the order given."""
    rev = {i: label for label, i in label_map.items()}
    return tuple(rev[i] for i in indices)
