"""Benchmark harness for the scaling properties of the fast algorithms.

Times are wall-clock medians over ``reps`` runs on seeded random polygons.
This is a trend check (quadratic vs linearithmic growth), not a
microbenchmark; the CSV it emits is consumed by the acceptance suite with
generous tolerances.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from statistics import median

from .dnc import dnc_triangle
from .geometry import MAX_COORD_BOUND
from .randgen import random_convex_polygon
from .triangles import quadratic_triangle

#: leaf size used for timing runs; recursion overhead dominates below this
BENCH_LEAF_SIZE = 128

#: coordinate bound for benchmark polygons; large n needs a spread-out
#: lattice to realize that many strictly convex integer vertices
BENCH_COORD_BOUND = MAX_COORD_BOUND


@dataclass
class BenchRow:
    n: int
    median_seconds: float


def _solver(alg: str):
    if alg == "quadratic":
        return quadratic_triangle
    if alg == "dnc":
        return lambda p: dnc_triangle(p, leaf_size=BENCH_LEAF_SIZE)
    raise ValueError(f"unknown benchmark algorithm {alg!r}")


def run_bench(alg: str, sizes: list[int], seed: int = 0, reps: int = 5) -> list[BenchRow]:
    """Median-of-``reps`` wall time for ``alg`` on one polygon per size."""
    solve = _solver(alg)
    rows = []
    warm = random_convex_polygon(64, 10**6, seed=seed)
    solve(warm)  # compile kernels outside the timed region
    for n in sizes:
        polygon = random_convex_polygon(n, BENCH_COORD_BOUND, seed=seed)
        times = []
        for _ in range(reps):
            t0 = time.perf_counter()
            solve(polygon)
            times.append(time.perf_counter() - t0)
        rows.append(BenchRow(n=n, median_seconds=median(times)))
    return rows


def bench_csv(rows: list[BenchRow]) -> str:
    out = ["n,median_seconds"]
    for row in rows:
        out.append(f"{row.n},{row.median_seconds:.6f}")
    return "\n".join(out) + "\n"
