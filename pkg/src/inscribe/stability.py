"""Interleaving and stability predicates for inscribed polygons.

A rooted triangle is 2-stable when replacing either non-root vertex by any
other polygon vertex never strictly increases its area; 3-stable (and, for
k-gons, k-stable) extends the same single-vertex-replacement test to every
vertex.  Interleaving of two equal-size vertex tuples allows coincident
vertices: between two successive vertices of one tuple (closed interval)
there must be a vertex of the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import ConvexPolygon, GeometryError, index_tuple
from ._kernels import root_sweep


def _in_closed_cyclic(lo: int, hi: int, x: int) -> bool:
    if lo <= hi:
        return lo <= x <= hi
    return x >= lo or x <= hi


def interleaves(a: tuple[int, ...], b: tuple[int, ...], polygon: ConvexPolygon) -> bool:
    """True iff every closed interval between consecutive vertices of one
    tuple contains a vertex of the other, and symmetrically."""
    n = polygon.n
    ta = index_tuple(a, n)
    tb = index_tuple(b, n)
    if len(ta) != len(tb):
        raise GeometryError(f"tuple sizes differ: {len(ta)} vs {len(tb)}")
    k = len(ta)
    for one, other in ((ta, tb), (tb, ta)):
        for i in range(k):
            lo, hi = one[i], one[(i + 1) % k]
            if not any(_in_closed_cyclic(lo, hi, x) for x in other):
                return False
    return True


def is_2_stable(polygon: ConvexPolygon, t: tuple[int, ...], root: int) -> bool:
    """Replacing either non-root vertex by any other vertex of the polygon
    never yields a strictly larger (absolute) doubled area."""
    tt = index_tuple(t, polygon.n, k=3)
    if root not in tt:
        raise GeometryError(f"root {root} is not a vertex of triangle {tt}")
    p, q = (i for i in tt if i != root)
    return _stable_at(polygon, tt, (p, q))


def is_3_stable(polygon: ConvexPolygon, t: tuple[int, ...]) -> bool:
    """Single-vertex replacement never strictly increases the area."""
    tt = index_tuple(t, polygon.n, k=3)
    return _stable_at(polygon, tt, tt)


def _stable_at(polygon: ConvexPolygon, t: tuple[int, ...], movable: tuple[int, ...]) -> bool:
    xs = [p.x for p in polygon.vertices]
    ys = [p.y for p in polygon.vertices]
    base = polygon.doubled_area_of(t)
    for v in movable:
        i, j = (u for u in t if u != v)
        xi, yi, xj, yj = xs[i], ys[i], xs[j], ys[j]
        for x, y in zip(xs, ys):
            a2 = (xj - xi) * (y - yi) - (yj - yi) * (x - xi)
            if a2 < 0:
                a2 = -a2
            if a2 > base:
                return False
    return True


def is_k_stable(polygon: ConvexPolygon, q: tuple[int, ...]) -> bool:
    """k-gon variant: replacing any single vertex by any other vertex of the
    polygon, preserving cyclic order, never strictly increases the area."""
    n = polygon.n
    tq = index_tuple(q, n)
    base = polygon.doubled_area_of(tq)
    others_all = set(tq)
    for v in tq:
        kept = [u for u in tq if u != v]
        for x in range(n):
            if x in others_all:
                continue
            candidate = sorted(kept + [x])
            if polygon.doubled_area_of(candidate) > base:
                return False
    return True


@dataclass
class StableTriangleSet:
    """All 2-stable triangles sharing a common root, in sweep order."""

    root: int
    triangles: list[tuple[int, ...]] = field(default_factory=list)

    def __iter__(self):
        return iter(self.triangles)

    def __len__(self):
        return len(self.triangles)


def _sweep_candidates(polygon: ConvexPolygon, a: int) -> list[tuple[int, int]]:
    """(b, c) pairs visited by the rooted two-pointer sweep at which neither
    pointer can be advanced without shrinking the triangle."""
    n = polygon.n
    xs = [p.x for p in polygon.vertices]
    ys = [p.y for p in polygon.vertices]

    def area2(i, j, k):
        v = (xs[j] - xs[i]) * (ys[k] - ys[i]) - (ys[j] - ys[i]) * (xs[k] - xs[i])
        return v if v >= 0 else -v

    out: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    def consider(b, c):
        if (b, c) in seen:
            return
        seen.add((b, c))
        base = area2(a, b, c)
        if area2(a, b, (c + 1) % n) <= base and area2(a, (b + 1) % n, c) <= base:
            out.append((b, c))

    stop_c = (a - 1) % n
    b = (a + 1) % n
    c = (a + 2) % n
    consider(b, c)
    while True:
        while c != stop_c and area2(a, b, (c + 1) % n) >= area2(a, b, c):
            c = (c + 1) % n
            consider(b, c)
        consider(b, c)
        nb = (b + 1) % n
        if nb == a:
            break
        b = nb
        if b == c:
            if c == stop_c:
                break
            c = (c + 1) % n
        consider(b, c)
    return out


def enumerate_2_stable_rooted(polygon: ConvexPolygon, root: int) -> StableTriangleSet:
    """Exactly the 2-stable triangles rooted at ``root``.

    A single linear two-pointer sweep generates the locally-maximal
    candidates (b advances, c never resets); each candidate is then confirmed
    with the full replacement scan, since forward-local maximality alone does
    not rule out a larger replacement elsewhere on the cycle.
    """
    n = polygon.n
    if not 0 <= root < n:
        raise GeometryError(f"root {root} out of range for n={n}")
    result = StableTriangleSet(root=root)
    for b, c in _sweep_candidates(polygon, root):
        if b == c or b == root or c == root:
            continue
        t = index_tuple((root, b, c), n)
        if is_2_stable(polygon, t, root) and t not in result.triangles:
            result.triangles.append(t)
    return result


def largest_rooted_triangle(polygon: ConvexPolygon, root: int) -> tuple[int, ...]:
    """Maximum-area triangle containing ``root``, in O(n) by the rooted
    sweep; ties broken by first encounter in sweep order."""
    n = polygon.n
    if not 0 <= root < n:
        raise GeometryError(f"root {root} out of range for n={n}")
    xs, ys = polygon.coord_arrays()
    b, c, _ = root_sweep(xs, ys, root)
    return index_tuple((root, int(b), int(c)), n)
