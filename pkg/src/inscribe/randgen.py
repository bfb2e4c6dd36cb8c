"""Random strictly convex lattice polygons.

Generation follows the classic random-convex-position recipe: draw two random
coordinate multisets, partition each into signed deltas (two monotone chains
per axis), pair the deltas, sort by angle and walk.  Everything is integer
from the start, so the only failure modes are repeated delta directions
(which would create collinear vertices) and unlucky degeneracies; repeated
directions are repaired by merging parallel deltas and splitting long ones,
anything else is rejected and retried.
"""

from __future__ import annotations

import heapq
from math import gcd

import numpy as np

from .geometry import DEFAULT_COORD_BOUND, ConvexPolygon, GeometryError, Point


class ResourceExhausted(RuntimeError):
    """Raised when the retry budget for polygon generation is spent."""


def _axis_deltas(rng: np.random.Generator, n: int, bound: int) -> np.ndarray:
    """n signed integer deltas that sum to zero, with total extent <= bound."""
    vals = np.sort(rng.integers(0, bound + 1, size=n, dtype=np.int64))
    lo, hi = vals[0], vals[-1]
    interior = vals[1:-1]
    mask = rng.integers(0, 2, size=n - 2, dtype=np.int64).astype(bool)
    up = np.concatenate(([lo], interior[mask], [hi]))
    down = np.concatenate(([hi], interior[~mask][::-1], [lo]))
    return np.concatenate((np.diff(up), np.diff(down)))


def _repair_directions(
    groups: dict[tuple[int, int], tuple[int, int]], n: int
) -> bool:
    """Split long deltas until there are exactly n distinct directions.

    ``groups`` maps a primitive direction to the summed delta vector for that
    direction.  Returns False if the top-up budget is exhausted.
    """
    budget = 16 * n
    # lazily-repaired max-heap over delta lengths; stale entries are skipped
    heap = [(-abs(v[0]) - abs(v[1]), k) for k, v in groups.items()]
    heapq.heapify(heap)

    def pop_longest() -> tuple[int, int] | None:
        while heap:
            neg, k = heapq.heappop(heap)
            v = groups.get(k)
            if v is not None and -neg == abs(v[0]) + abs(v[1]):
                return k
        return None

    def push(k: tuple[int, int]) -> None:
        v = groups[k]
        heapq.heappush(heap, (-abs(v[0]) - abs(v[1]), k))

    while len(groups) < n and budget > 0:
        # split the longest delta into two fresh directions
        key = pop_longest()
        if key is None:
            return False
        vx, vy = groups.pop(key)
        done = False
        for jx, jy in _split_offsets():
            budget -= 1
            ax, ay = vx // 2 + jx, vy // 2 + jy
            bx, by = vx - ax, vy - ay
            if (ax, ay) == (0, 0) or (bx, by) == (0, 0):
                continue
            ka = _primitive(ax, ay)
            kb = _primitive(bx, by)
            if ka == kb or ka in groups or kb in groups:
                continue
            groups[ka] = (ax, ay)
            groups[kb] = (bx, by)
            push(ka)
            push(kb)
            done = True
            break
        if not done:
            groups[key] = (vx, vy)  # give it back; try the next candidate
            push(key)
            budget -= 1
            if len(groups) < 2:
                return False
            # merge the two shortest groups to change the shape, then retry
            k1, k2 = heapq.nsmallest(
                2, groups, key=lambda k: abs(groups[k][0]) + abs(groups[k][1])
            )
            v1, v2 = groups.pop(k1), groups.pop(k2)
            mx, my = v1[0] + v2[0], v1[1] + v2[1]
            if (mx, my) == (0, 0):
                return False
            km = _primitive(mx, my)
            prev = groups.get(km, (0, 0))
            groups[km] = (prev[0] + mx, prev[1] + my)
            push(km)
    return len(groups) == n


def _split_offsets(max_radius: int = 48):
    """Integer offsets in rings of increasing Chebyshev radius.

    Small offsets keep the extent overhead of a split negligible, while the
    larger rings get a split unstuck when every direction near the exact half
    is already in use.
    """
    yield 0, 0
    for r in range(1, max_radius + 1):
        for jx in range(-r, r + 1):
            yield jx, -r
            yield jx, r
        for jy in range(-r + 1, r):
            yield -r, jy
            yield r, jy


def _primitive(dx: int, dy: int) -> tuple[int, int]:
    g = gcd(abs(dx), abs(dy))
    return (dx // g, dy // g)


def _attempt(rng: np.random.Generator, n: int, coord_bound: int) -> ConvexPolygon | None:
    slack = max(2, coord_bound // 8)
    inner = coord_bound - slack
    if inner < n:
        inner = coord_bound
    dxs = _axis_deltas(rng, n, inner)
    dys = _axis_deltas(rng, n, inner)
    rng.shuffle(dys)

    groups: dict[tuple[int, int], tuple[int, int]] = {}
    for dx, dy in zip(dxs.tolist(), dys.tolist()):
        if dx == 0 and dy == 0:
            continue
        key = _primitive(dx, dy)
        px, py = groups.get(key, (0, 0))
        groups[key] = (px + dx, py + dy)
    if not _repair_directions(groups, n):
        return None

    deltas = list(groups.values())
    vx = np.fromiter((d[0] for d in deltas), dtype=np.int64, count=n)
    vy = np.fromiter((d[1] for d in deltas), dtype=np.int64, count=n)
    order = np.argsort(np.arctan2(vy.astype(np.float64), vx.astype(np.float64)), kind="stable")
    vx, vy = vx[order], vy[order]
    # exact CCW check between angle-sorted neighbours; float ties are rare
    cross = vx * np.roll(vy, -1) - vy * np.roll(vx, -1)
    if np.any(cross <= 0):
        if n <= 4096:
            import functools

            def cmp(i, j):
                # half-plane first, then exact cross: a total angular order
                hi = 0 if (vy[i] > 0 or (vy[i] == 0 and vx[i] > 0)) else 1
                hj = 0 if (vy[j] > 0 or (vy[j] == 0 and vx[j] > 0)) else 1
                if hi != hj:
                    return hi - hj
                c = int(vx[i]) * int(vy[j]) - int(vy[i]) * int(vx[j])
                return -1 if c > 0 else (1 if c < 0 else 0)

            idx = sorted(range(n), key=functools.cmp_to_key(cmp))
            vx, vy = vx[idx], vy[idx]
            cross = vx * np.roll(vy, -1) - vy * np.roll(vx, -1)
            if np.any(cross <= 0):
                return None
        else:
            return None

    xs = np.cumsum(vx)
    ys = np.cumsum(vy)
    xs -= xs.min()
    ys -= ys.min()
    if xs.max() > coord_bound or ys.max() > coord_bound:
        return None
    # all exact neighbour crosses are positive and the edge directions make a
    # single CCW revolution, so the polygon is already strictly convex;
    # re-validation would only repeat those checks in pure Python
    vertices = tuple(
        Point(int(x), int(y)) for x, y in zip(xs.tolist(), ys.tolist())
    )
    poly = ConvexPolygon(vertices, _validated=True)
    poly._xs = xs
    poly._ys = ys
    return poly


def random_convex_polygon(
    n: int,
    coord_bound: int = DEFAULT_COORD_BOUND,
    seed: int = 0,
    max_retries: int = 64,
) -> ConvexPolygon:
    """Strictly convex polygon with exactly n integer vertices.

    Deterministic given (n, coord_bound, seed).  Raises
    :class:`ResourceExhausted` when the bound is too tight for n vertices in
    strictly convex lattice position.
    """
    if n < 3:
        raise GeometryError(f"need n >= 3, got {n}")
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(max_retries):
        poly = _attempt(rng, n, coord_bound)
        if poly is not None:
            return poly
    raise ResourceExhausted(
        f"could not generate a convex {n}-gon within |coord| <= {coord_bound} "
        f"after {max_retries} attempts"
    )
