"""Triangle algorithms: the classic 1979 Dobkin-Snyder sweep (reproduced
faithfully, flaws included) and the corrected quadratic algorithm.

The classic sweep advances three pointers a, b, c clockwise around the
polygon, never resetting b and c when a advances, and keeps the best triangle
seen.  It reports the best *anchored* triangle per vertex, which is not
always the best rooted triangle there; on some polygons the result is not
the global optimum.  The quadratic algorithm resets b and c to the two
successors of a each time a advances, which makes it visit every 2-stable
triangle and hence every candidate optimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import ConvexPolygon, GeometryError, doubled_triangle_area, index_tuple
from ._kernels import quadratic_scan


@dataclass
class TraceStep:
    pointer: str
    source: int
    dest: int
    area_after: int


@dataclass
class RunTrace:
    """Pointer-move log and best-so-far checkpoints of a sweep run."""

    steps: list[TraceStep] = field(default_factory=list)
    checkpoints: list[tuple[tuple[int, ...], int]] = field(default_factory=list)

    def checkpoint_areas(self) -> list[int]:
        return [a for _, a in self.checkpoints]


def ds_triangle(polygon: ConvexPolygon, root: int = 0) -> tuple[tuple[int, ...], RunTrace]:
    """The classic linear-time triangle sweep, control-flow faithful.

    The published pseudo-code walks the polygon clockwise; vertices are
    stored CCW, so ``next`` here is the clockwise successor (index - 1).
    Both advance tests use >= (ties advance) and are re-evaluated per inner
    iteration; b and c persist when a advances.  The reported triangle is NOT
    guaranteed optimal.
    """
    n = polygon.n
    if not 0 <= root < n:
        raise GeometryError(f"root {root} out of range for n={n}")
    verts = polygon.vertices

    def nxt(i: int) -> int:
        return (i - 1) % n

    def area2(i: int, j: int, k: int) -> int:
        return abs(doubled_triangle_area(verts[i], verts[j], verts[k]))

    trace = RunTrace()
    a = root
    b = nxt(a)
    c = nxt(b)
    best = (a, b, c)
    best_area = area2(a, b, c)
    trace.checkpoints.append((index_tuple(best, n), best_area))

    guard = 50 * n + 100
    while True:
        while area2(a, b, nxt(c)) >= area2(a, b, c) or area2(a, nxt(b), c) >= area2(a, b, c):
            if area2(a, b, nxt(c)) >= area2(a, b, c):
                trace.steps.append(TraceStep("c", c, nxt(c), area2(a, b, nxt(c))))
                c = nxt(c)
            if area2(a, nxt(b), c) >= area2(a, b, c):
                trace.steps.append(TraceStep("b", b, nxt(b), area2(a, nxt(b), c)))
                b = nxt(b)
            guard -= 1
            if guard <= 0:
                raise RuntimeError("sweep exceeded its pointer-advance budget")
        if area2(a, b, c) >= best_area:
            best_area = area2(a, b, c)
            best = (a, b, c)
            trace.checkpoints.append((index_tuple(best, n), best_area))
        trace.steps.append(TraceStep("a", a, nxt(a), area2(nxt(a), b, c)))
        a = nxt(a)
        if a == root:
            return index_tuple(best, n), trace


def quadratic_triangle(polygon: ConvexPolygon) -> tuple[int, ...]:
    """A maximum-area inscribed triangle in O(n^2).

    Runs the rooted two-pointer sweep from every vertex; b and c reset when
    the root advances, c never resets while b advances.  First maximum in
    scan order on ties.
    """
    xs, ys = polygon.coord_arrays()
    i, j, k, _ = quadratic_scan(xs, ys)
    return index_tuple((int(i), int(j), int(k)), polygon.n)
