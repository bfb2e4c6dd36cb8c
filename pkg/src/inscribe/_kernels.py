"""Numba-compiled inner loops shared by the fast triangle algorithms.

The kernels operate on int64 coordinate arrays in CCW order.  Coordinate
validation (|coord| <= 10**9) guarantees every doubled area fits in int64.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _area2(xs, ys, i, j, k):
    v = (xs[j] - xs[i]) * (ys[k] - ys[i]) - (ys[j] - ys[i]) * (xs[k] - xs[i])
    return v if v >= 0 else -v


@njit(cache=True)
def root_sweep(xs, ys, a):
    """Best triangle rooted at ``a`` found by a single two-pointer pass.

    b starts at next(a), c at next(b); c advances while moving it does not
    shrink the triangle (ties advance) and never resets while b advances.
    The c pointer stops at prev(a), the b pointer when its successor is a.
    Returns (b, c, doubled_area) of the largest triangle visited, first
    encountered on ties.
    """
    n = xs.shape[0]
    stop_c = a - 1 if a > 0 else n - 1
    b = a + 1 if a + 1 < n else 0
    c = b + 1 if b + 1 < n else 0
    xa = xs[a]
    ya = ys[a]
    dbx = xs[b] - xa
    dby = ys[b] - ya
    best_b, best_c = b, c
    cur = dbx * (ys[c] - ya) - dby * (xs[c] - xa)
    if cur < 0:
        cur = -cur
    best = cur
    while True:
        while c != stop_c:
            nc = c + 1 if c + 1 < n else 0
            nxt = dbx * (ys[nc] - ya) - dby * (xs[nc] - xa)
            if nxt < 0:
                nxt = -nxt
            if nxt >= cur:
                c = nc
                cur = nxt
                if cur > best:
                    best = cur
                    best_b, best_c = b, c
            else:
                break
        nb = b + 1 if b + 1 < n else 0
        if nb == a:
            break
        b = nb
        dbx = xs[b] - xa
        dby = ys[b] - ya
        if b == c:
            if c == stop_c:
                break
            c = c + 1 if c + 1 < n else 0
        cur = dbx * (ys[c] - ya) - dby * (xs[c] - xa)
        if cur < 0:
            cur = -cur
        if cur > best:
            best = cur
            best_b, best_c = b, c
    return best_b, best_c, best


@njit(cache=True)
def quadratic_scan(xs, ys):
    """Largest-area triangle by running root_sweep from every vertex.

    Returns (i, j, k, doubled_area); first maximum in root order on ties.
    """
    n = xs.shape[0]
    bi = 0
    bj = 1
    bk = 2
    best = np.int64(-1)
    for a in range(n):
        b, c, area = root_sweep(xs, ys, a)
        if area > best:
            best = area
            bi, bj, bk = a, b, c
    return bi, bj, bk, best


@njit(cache=True)
def brute_triangle(xs, ys):
    """Exhaustive largest triangle; used for small divide-and-conquer leaves."""
    n = xs.shape[0]
    bi = 0
    bj = 1
    bk = 2
    best = np.int64(-1)
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                a2 = _area2(xs, ys, i, j, k)
                if a2 > best:
                    best = a2
                    bi, bj, bk = i, j, k
    return bi, bj, bk, best
