"""Divide-and-conquer maximum triangle in O(n log n).

Each step finds the largest rooted triangle at an arbitrary vertex and at the
median of the largest boundary interval it induces (the dividing triangles).
Their vertices cut the boundary into at most six closed intervals; a
*compatible triple* of intervals is one that meets every gap of both dividing
triangles exactly once.  Every optimum must interleave both dividing
triangles, so its vertices lie inside one compatible triple, and it suffices
to recurse on the sub-polygons the triples span: two when the dividing
triangles interleave, one otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .geometry import ConvexPolygon, GeometryError, index_tuple, validate_convex_polygon
from ._kernels import brute_triangle, quadratic_scan, root_sweep

#: Brute-force threshold for recursion leaves.
DEFAULT_LEAF_SIZE = 5


class SplitBoundViolation(RuntimeError):
    """A recursion node produced parts exceeding the guaranteed size bounds."""


@dataclass
class SubproblemSplit:
    """Sub-polygons induced by a pair of dividing triangles.

    Each part carries an index map back to the parent polygon.
    """

    parts: list[tuple[ConvexPolygon, tuple[int, ...]]]
    interleaving: bool


def _compatible_interval_triples(
    n: int, ta: tuple[int, int, int], tm: tuple[int, int, int]
) -> list[list[tuple[int, int]]]:
    """Triples of closed boundary intervals meeting every gap of both
    dividing triangles exactly once, in deterministic scan order.

    The six dividing vertices are kept with multiplicity: a Tm vertex that
    coincides with a Ta vertex is treated as displaced by an infinitesimal
    amount, so the six-interval structure of the generic configuration (and
    its one-or-two compatible triples) survives coincidences; a coincident
    pair simply bounds a one-vertex interval.  Since a triangle vertex
    sitting exactly on a coincident pair belongs to two gaps of each
    dividing triangle, both displacement directions are enumerated and the
    resulting triples are merged.
    """
    shared = sorted(set(ta) & set(tm))
    triples = []
    seen = set()
    for bits in range(1 << len(shared)):
        flipped = {shared[i] for i in range(len(shared)) if bits >> i & 1}
        items = sorted(
            [(p, 1 if p in flipped else 0) for p in ta]
            + [(p, 0 if p in flipped else 1) for p in tm]
        )
        k = len(items)  # always 6
        # interval i runs from items[i] to items[i + 1] (closed positions)
        intervals = [(items[i][0], items[(i + 1) % k][0]) for i in range(k)]
        seq = [
            [i for i in range(k) if (items[i][1] == 1) == (items[i][0] in flipped)],
            [i for i in range(k) if (items[i][1] == 1) != (items[i][0] in flipped)],
        ]

        def gap_labels(s: list[int]) -> list[int]:
            labels = [0] * k
            for j in range(3):
                i = s[j]
                while i != s[(j + 1) % 3]:
                    labels[i] = j
                    i = (i + 1) % k
            return labels

        la = gap_labels(seq[0])
        lm = gap_labels(seq[1])
        for combo in combinations(range(k), 3):
            if sorted(la[i] for i in combo) == [0, 1, 2] and sorted(
                lm[i] for i in combo
            ) == [0, 1, 2]:
                triple = sorted(intervals[i] for i in combo)
                key = tuple(triple)
                if key not in seen:
                    seen.add(key)
                    triples.append(triple)
    return triples


def _interval_mask(n: int, triple: list[tuple[int, int]]) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    for lo, hi in triple:
        if lo <= hi:
            mask[lo : hi + 1] = True
        else:
            mask[lo:] = True
            mask[: hi + 1] = True
    return mask


def _part_size_bound(n: int) -> int:
    return -(-5 * (n + 6) // 6)  # ceil(5/6 * (n + 6))


def _check_split_bounds(n: int, sizes: list[int]) -> None:
    bound = _part_size_bound(n)
    for s in sizes:
        if s > bound:
            raise SplitBoundViolation(f"part of size {s} exceeds {bound} for n={n}")
    if len(sizes) == 2 and sum(sizes) > n + 6:
        raise SplitBoundViolation(f"parts of sizes {sizes} exceed n+6={n + 6}")


def _median_of_largest_interval(n: int, ta: tuple[int, int, int]) -> int:
    best_count = -1
    best_lo = 0
    for j in range(3):
        lo, hi = ta[j], ta[(j + 1) % 3]
        count = (hi - lo) % n + 1
        if count > best_count:
            best_count = count
            best_lo = lo
    return (best_lo + best_count // 2) % n


def split_subproblems(
    polygon: ConvexPolygon, ta: tuple[int, ...], tm: tuple[int, ...]
) -> SubproblemSplit:
    """Sub-polygons spanned by the compatible interval triples of two
    dividing triangles."""
    n = polygon.n
    ta_t = index_tuple(ta, n, k=3)
    tm_t = index_tuple(tm, n, k=3)
    triples = _compatible_interval_triples(n, ta_t, tm_t)
    if not triples:
        raise GeometryError("dividing triangles admit no compatible interval triple")
    parts = []
    sizes = []
    seen_positions = set()
    for triple in triples:
        positions = tuple(int(i) for i in np.flatnonzero(_interval_mask(n, triple)))
        if positions in seen_positions:
            continue
        seen_positions.add(positions)
        sizes.append(len(positions))
        part = validate_convex_polygon([polygon.vertices[i] for i in positions], "CCW")
        parts.append((part, positions))
    _check_split_bounds(n, sizes)
    from .stability import interleaves

    return SubproblemSplit(parts=parts, interleaving=interleaves(ta_t, tm_t, polygon))


def _dnc(xs, ys, idx, leaf_size: int, stats: dict) -> tuple[int, int, int, int]:
    """Returns (i, j, k, doubled_area) with indices into the original arrays."""
    m = idx.shape[0]
    gxs = xs[idx]
    gys = ys[idx]
    if m <= leaf_size:
        if m <= 8:
            bi, bj, bk, area = brute_triangle(gxs, gys)
        else:
            bi, bj, bk, area = quadratic_scan(gxs, gys)
        return int(idx[bi]), int(idx[bj]), int(idx[bk]), int(area)

    b, c, _ = root_sweep(gxs, gys, 0)
    ta = tuple(sorted((0, int(b), int(c))))
    med = _median_of_largest_interval(m, ta)
    b2, c2, _ = root_sweep(gxs, gys, med)
    tm = tuple(sorted((med, int(b2), int(c2))))

    triples = _compatible_interval_triples(m, ta, tm)
    masks = []
    for t in triples:
        mk = _interval_mask(m, t)
        if not any(np.array_equal(mk, other) for other in masks):
            masks.append(mk)
    sizes = [int(mk.sum()) for mk in masks]
    if not triples or any(s >= m for s in sizes):
        # degenerate configuration: no usable shrink, solve the node directly
        stats["fallbacks"] = stats.get("fallbacks", 0) + 1
        bi, bj, bk, area = quadratic_scan(gxs, gys)
        return int(idx[bi]), int(idx[bj]), int(idx[bk]), int(area)
    _check_split_bounds(m, sizes)
    stats["nodes"] = stats.get("nodes", 0) + 1
    if len(sizes) == 2:
        stats["two_way"] = stats.get("two_way", 0) + 1

    best = None
    for mk in masks:
        res = _dnc(xs, ys, idx[mk], leaf_size, stats)
        if best is None or res[3] > best[3]:
            best = res
    return best


def dnc_triangle(
    polygon: ConvexPolygon,
    leaf_size: int = DEFAULT_LEAF_SIZE,
    stats: dict | None = None,
) -> tuple[int, ...]:
    """A maximum-area inscribed triangle in O(n log n) by divide and conquer.

    ``leaf_size`` is a brute-force cutoff for recursion leaves (any value
    >= 5 is exact; larger values trade recursion overhead for leaf work).
    ``stats``, when given, collects recursion counters.
    """
    if leaf_size < 5:
        raise GeometryError("leaf_size must be at least 5")
    if stats is None:
        stats = {}
    xs, ys = polygon.coord_arrays()
    idx = np.arange(polygon.n, dtype=np.int64)
    i, j, k, _ = _dnc(xs, ys, idx, leaf_size, stats)
    return index_tuple((i, j, k), polygon.n)
