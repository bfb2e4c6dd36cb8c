"""Exhaustive ground-truth search for the largest inscribed k-gon.

This module is deliberately naive: it scans every k-subset of vertices and is
used as the independent oracle that every fast algorithm is compared against.
Keep it free of any shared machinery with the sweep-based algorithms.
"""

from __future__ import annotations

from itertools import combinations

from .geometry import ConvexPolygon, GeometryError


def brute_force_max_kgon(polygon: ConvexPolygon, k: int) -> tuple[int, ...]:
    """Maximum doubled-area P-aligned k-gon by exhaustive C(n, k) scan.

    Vertices of the polygon are in CCW order, so every increasing index
    combination is a CCW k-gon and the shoelace sum is non-negative.  Ties are
    broken by the first maximum in lexicographic index order.
    """
    n = polygon.n
    if k not in (3, 4):
        raise GeometryError(f"k must be 3 or 4, got {k}")
    if n < k:
        raise GeometryError(f"polygon has {n} vertices, need at least {k}")
    xs = [p.x for p in polygon.vertices]
    ys = [p.y for p in polygon.vertices]

    best = -1
    best_idx: tuple[int, ...] = ()
    if k == 3:
        for i, j, l in combinations(range(n), 3):
            a2 = (xs[j] - xs[i]) * (ys[l] - ys[i]) - (ys[j] - ys[i]) * (xs[l] - xs[i])
            if a2 > best:
                best = a2
                best_idx = (i, j, l)
    else:
        for i, j, l, m in combinations(range(n), 4):
            a2 = (
                xs[i] * ys[j] - xs[j] * ys[i]
                + xs[j] * ys[l] - xs[l] * ys[j]
                + xs[l] * ys[m] - xs[m] * ys[l]
                + xs[m] * ys[i] - xs[i] * ys[m]
            )
            if a2 > best:
                best = a2
                best_idx = (i, j, l, m)
    return best_idx
