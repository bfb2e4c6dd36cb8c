"""Differential fuzzing of the triangle and quadrilateral algorithms.

Each trial generates a seeded random polygon, runs every target algorithm
and the exhaustive oracle, and records a failure whenever a target reports a
strictly smaller doubled area.  Trials derive independent sub-seeds from
(campaign seed, trial index), so reports are deterministic regardless of
scheduling and every failure replays from its recorded numbers alone.

For the corrected algorithms (``quadratic``, ``dnc``) any failure is an
implementation bug.  For the classic sweeps (``ds``, ``ds-quad``) failures
are the expected counter-example class; the report records their observed
frequency without asserting anything about it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dnc import dnc_triangle
from .geometry import DEFAULT_COORD_BOUND, ConvexPolygon, GeometryError
from .oracle import brute_force_max_kgon
from .quads import ds_quadrilateral
from .randgen import random_convex_polygon
from .triangles import ds_triangle, quadratic_triangle
from .geometry import validate_convex_polygon

#: targets whose failures indicate broken code rather than a refuted paper
CORRECTED_TARGETS = frozenset({"quadratic", "dnc"})

_TRIANGLE_TARGETS = {
    "ds": lambda p: ds_triangle(p)[0],
    "quadratic": quadratic_triangle,
    "dnc": dnc_triangle,
}
_QUAD_TARGETS = {
    "ds-quad": lambda p: ds_quadrilateral(p)[0],
}


@dataclass(frozen=True)
class FuzzConfig:
    trials: int
    n_range: tuple[int, int]
    coord_bound: int = DEFAULT_COORD_BOUND
    seed: int = 0
    targets: tuple[str, ...] = ("quadratic", "dnc")
    k: int = 3
    shrink: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise GeometryError(f"trials must be >= 1, got {self.trials}")
        if self.k not in (3, 4):
            raise GeometryError(f"k must be 3 or 4, got {self.k}")
        if self.n_range[0] < self.k or self.n_range[0] > self.n_range[1]:
            raise GeometryError(f"bad n_range {self.n_range} for k={self.k}")
        if not 1 <= self.coord_bound <= DEFAULT_COORD_BOUND:
            raise GeometryError(
                f"coord_bound must be in [1, {DEFAULT_COORD_BOUND}], got {self.coord_bound}"
            )
        valid = _TRIANGLE_TARGETS if self.k == 3 else _QUAD_TARGETS
        for t in self.targets:
            if t not in valid:
                raise GeometryError(f"unknown target {t!r} for k={self.k}")


@dataclass
class FuzzFailure:
    trial: int
    target: str
    n: int
    polygon_seed: int
    vertices: list[tuple[int, int]]
    target_result: tuple[int, ...]
    oracle_result: tuple[int, ...]
    target_area2: int
    oracle_area2: int

    @property
    def deficit(self) -> int:
        return self.oracle_area2 - self.target_area2

    def to_dict(self) -> dict:
        return {
            "trial": self.trial,
            "target": self.target,
            "n": self.n,
            "polygon_seed": self.polygon_seed,
            "vertices": [[x, y] for x, y in self.vertices],
            "target_result": list(self.target_result),
            "oracle_result": list(self.oracle_result),
            "target_area2": str(self.target_area2),
            "oracle_area2": str(self.oracle_area2),
            "deficit": str(self.deficit),
        }


@dataclass
class FuzzReport:
    config: FuzzConfig
    trials_run: int = 0
    failures: list[FuzzFailure] = field(default_factory=list)
    per_target: dict[str, dict[str, int]] = field(default_factory=dict)

    @property
    def corrected_failures(self) -> list[FuzzFailure]:
        return [f for f in self.failures if f.target in CORRECTED_TARGETS]

    def to_dict(self) -> dict:
        return {
            "config": {
                "trials": self.config.trials,
                "n_range": list(self.config.n_range),
                "coord_bound": self.config.coord_bound,
                "seed": self.config.seed,
                "targets": list(self.config.targets),
                "k": self.config.k,
                "shrink": self.config.shrink,
            },
            "trials_run": self.trials_run,
            "failures": [f.to_dict() for f in self.failures],
            "per_target": self.per_target,
        }


def _trial_params(cfg: FuzzConfig, trial: int) -> tuple[int, int]:
    """Deterministic (n, polygon_seed) for a trial index."""
    words = np.random.SeedSequence((cfg.seed, trial)).generate_state(2)
    lo, hi = cfg.n_range
    return lo + int(words[0]) % (hi - lo + 1), int(words[1])


def _shrink(
    polygon: ConvexPolygon, run, k: int
) -> tuple[ConvexPolygon, tuple[int, ...], tuple[int, ...]]:
    """Greedy vertex deletion while the target still loses to the oracle.

    Any subsequence of a strictly convex cycle is strictly convex, but the
    validator stays in the loop as a guard against shrinking into a polygon
    the target rejects.
    """
    current = polygon
    t_res = run(current)
    o_res = brute_force_max_kgon(current, k)
    improved = True
    while improved and current.n > k:
        improved = False
        for i in range(current.n):
            candidate_points = [
                v for j, v in enumerate(current.vertices) if j != i
            ]
            try:
                candidate = validate_convex_polygon(candidate_points, "CCW")
            except GeometryError:
                continue
            ct = run(candidate)
            co = brute_force_max_kgon(candidate, k)
            if candidate.doubled_area_of(ct) < candidate.doubled_area_of(co):
                current, t_res, o_res = candidate, ct, co
                improved = True
                break
    return current, t_res, o_res


def differential_fuzz(cfg: FuzzConfig) -> FuzzReport:
    """Run the campaign described by ``cfg``; deterministic given ``cfg``."""
    runners = _TRIANGLE_TARGETS if cfg.k == 3 else _QUAD_TARGETS
    report = FuzzReport(config=cfg)
    for name in cfg.targets:
        report.per_target[name] = {"runs": 0, "failures": 0}

    for trial in range(cfg.trials):
        n, polygon_seed = _trial_params(cfg, trial)
        polygon = random_convex_polygon(n, cfg.coord_bound, seed=polygon_seed)
        oracle = brute_force_max_kgon(polygon, cfg.k)
        oracle_area = polygon.doubled_area_of(oracle)
        for name in cfg.targets:
            run = runners[name]
            result = run(polygon)
            area = polygon.doubled_area_of(result)
            report.per_target[name]["runs"] += 1
            if area < oracle_area:
                report.per_target[name]["failures"] += 1
                failed_polygon, result, oracle_res = polygon, result, oracle
                if cfg.shrink:
                    failed_polygon, result, oracle_res = _shrink(
                        polygon, run, cfg.k
                    )
                report.failures.append(
                    FuzzFailure(
                        trial=trial,
                        target=name,
                        n=n,
                        polygon_seed=polygon_seed,
                        vertices=[(p.x, p.y) for p in failed_polygon.vertices],
                        target_result=result,
                        oracle_result=oracle_res,
                        target_area2=failed_polygon.doubled_area_of(result),
                        oracle_area2=failed_polygon.doubled_area_of(oracle_res),
                    )
                )
        report.trials_run += 1
    return report
