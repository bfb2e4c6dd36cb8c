"""Maximum-area inscribed polygons in convex polygons, exactly.

The package implements and differentially tests algorithms for the
maximum-area triangle (and quadrilateral) inscribed in a convex polygon:

- :func:`ds_triangle` / :func:`ds_quadrilateral` — faithful reproductions of
  the classic 1979 linear-time sweeps, including the control flow that makes
  them wrong on the bundled counter-example fixtures;
- :func:`quadratic_triangle` — a corrected O(n^2) algorithm;
- :func:`dnc_triangle` — a corrected O(n log n) divide-and-conquer algorithm;
- :func:`brute_force_max_kgon` — exhaustive oracles used as ground truth;
- :func:`random_convex_polygon` / :func:`differential_fuzz` — seeded random
  polygon generation and a differential-testing campaign runner.

All geometry is exact: integer coordinates, doubled areas (twice the
Euclidean area) computed with integer cross products, no floating point in
any comparison.
"""

from .geometry import (
    DEFAULT_COORD_BOUND,
    MAX_COORD_BOUND,
    CollinearPoints,
    ConvexPolygon,
    CoordinateOverflow,
    DuplicatePoint,
    GeometryError,
    NotConvex,
    Point,
    PointNotOnHull,
    TooFewPoints,
    canonical_cyclic_order,
    convex_hull,
    doubled_polygon_area,
    doubled_triangle_area,
    index_tuple,
    orientation,
    validate_convex_polygon,
)
from .stability import (
    StableTriangleSet,
    enumerate_2_stable_rooted,
    interleaves,
    is_2_stable,
    is_3_stable,
    is_k_stable,
    largest_rooted_triangle,
)
from .triangles import RunTrace, TraceStep, ds_triangle, quadratic_triangle
from .dnc import (
    DEFAULT_LEAF_SIZE,
    SplitBoundViolation,
    SubproblemSplit,
    dnc_triangle,
    split_subproblems,
)
from .quads import ds_quadrilateral
from .oracle import brute_force_max_kgon
from .randgen import ResourceExhausted, random_convex_polygon
from .fuzz import FuzzConfig, FuzzFailure, FuzzReport, differential_fuzz
from .fixtures import fixture9, fixture16, labels_of
from .polyfile import ParseError, format_polygon_file, parse_polygon_file

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_COORD_BOUND",
    "DEFAULT_LEAF_SIZE",
    "MAX_COORD_BOUND",
    "CollinearPoints",
    "ConvexPolygon",
    "CoordinateOverflow",
    "DuplicatePoint",
    "FuzzConfig",
    "FuzzFailure",
    "FuzzReport",
    "GeometryError",
    "NotConvex",
    "ParseError",
    "Point",
    "PointNotOnHull",
    "ResourceExhausted",
    "RunTrace",
    "SplitBoundViolation",
    "StableTriangleSet",
    "SubproblemSplit",
    "TooFewPoints",
    "TraceStep",
    "brute_force_max_kgon",
    "canonical_cyclic_order",
    "convex_hull",
    "differential_fuzz",
    "dnc_triangle",
    "doubled_polygon_area",
    "doubled_triangle_area",
    "ds_quadrilateral",
    "ds_triangle",
    "enumerate_2_stable_rooted",
    "fixture16",
    "fixture9",
    "format_polygon_file",
    "index_tuple",
    "interleaves",
    "is_2_stable",
    "is_3_stable",
    "is_k_stable",
    "labels_of",
    "largest_rooted_triangle",
    "orientation",
    "parse_polygon_file",
    "quadratic_triangle",
    "random_convex_polygon",
    "split_subproblems",
    "validate_convex_polygon",
]
