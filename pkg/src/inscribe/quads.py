"""The classic Dobkin-Snyder quadrilateral sweep, reproduced as published.

Four pointers advance counter-clockwise; the c- and b-advance loops are
nested inside the d-advance loop exactly as in the original listing (not
normalized), all comparisons are <= (ties advance), and pointer collisions
after an a-advance are resolved by the published guard cascade.  The
reported quadrilateral is not guaranteed optimal.
"""

from __future__ import annotations

from .geometry import ConvexPolygon, GeometryError, doubled_polygon_area, index_tuple
from .triangles import RunTrace, TraceStep


def ds_quadrilateral(polygon: ConvexPolygon, root: int = 0) -> tuple[tuple[int, ...], RunTrace]:
    n = polygon.n
    if n < 4:
        raise GeometryError(f"need at least 4 vertices, got {n}")
    if not 0 <= root < n:
        raise GeometryError(f"root {root} out of range for n={n}")
    verts = polygon.vertices

    def nxt(i: int) -> int:
        return (i + 1) % n

    def area2(i: int, j: int, k: int, l: int) -> int:
        return abs(doubled_polygon_area([verts[i], verts[j], verts[k], verts[l]]))

    trace = RunTrace()
    a = root
    b = nxt(a)
    c = nxt(b)
    d = nxt(c)
    best = (a, b, c, d)
    best_area = area2(a, b, c, d)
    trace.checkpoints.append((index_tuple(best, n), best_area))

    guard = 100 * n + 200
    while True:
        while area2(a, b, c, d) <= area2(a, b, c, nxt(d)):
            trace.steps.append(TraceStep("d", d, nxt(d), area2(a, b, c, nxt(d))))
            d = nxt(d)
            while area2(a, b, c, d) <= area2(a, b, nxt(c), d):
                trace.steps.append(TraceStep("c", c, nxt(c), area2(a, b, nxt(c), d)))
                c = nxt(c)
                guard -= 1
                if guard <= 0:
                    raise RuntimeError("sweep exceeded its pointer-advance budget")
            while area2(a, b, c, d) <= area2(a, nxt(b), c, d):
                trace.steps.append(TraceStep("b", b, nxt(b), area2(a, nxt(b), c, d)))
                b = nxt(b)
                guard -= 1
                if guard <= 0:
                    raise RuntimeError("sweep exceeded its pointer-advance budget")
            guard -= 1
            if guard <= 0:
                raise RuntimeError("sweep exceeded its pointer-advance budget")
        if area2(a, b, c, d) >= best_area:
            best_area = area2(a, b, c, d)
            best = (a, b, c, d)
            trace.checkpoints.append((index_tuple(best, n), best_area))
        trace.steps.append(TraceStep("a", a, nxt(a), area2(nxt(a), b, c, d)))
        a = nxt(a)
        if a == root:
            return index_tuple(best, n), trace
        if b == a:
            b = nxt(b)
            if c == b:
                c = nxt(c)
                if d == c:
                    d = nxt(d)
