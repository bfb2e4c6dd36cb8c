"""Command-line interface.

Subcommands:

- ``solve``    run one algorithm on a polygon file, emit a ResultRecord JSON
- ``fuzz``     run a differential campaign, emit a FuzzReport JSON
- ``bench``    time an algorithm over a size ladder, emit CSV
- ``fixtures`` verify the bundled counter-example fixtures

``--in`` accepts a path or the magic names ``fixture9`` / ``fixture16`` for
the bundled counter-examples.  Exit codes: 0 success, 1 for fixture
mismatches or corrected-target fuzz failures, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from importlib import resources

from .bench import bench_csv, run_bench
from .dnc import dnc_triangle
from .fixtures import fixture9, fixture16, labels_of
from .fuzz import FuzzConfig, differential_fuzz
from .geometry import GeometryError
from .oracle import brute_force_max_kgon
from .polyfile import ParseError, parse_polygon_file
from .quads import ds_quadrilateral
from .stability import is_k_stable
from .svg import render_svg
from .triangles import ds_triangle, quadratic_triangle

_MAGIC_INPUTS = {"fixture9": "fixture9.poly", "fixture16": "fixture16.poly"}


def _read_input(name: str) -> bytes:
    if name in _MAGIC_INPUTS:
        return (
            resources.files("inscribe.data").joinpath(_MAGIC_INPUTS[name]).read_bytes()
        )
    with open(name, "rb") as fh:
        return fh.read()


def _solve_one(alg: str, polygon, want_trace: bool):
    """Returns (index tuple, trace-or-None)."""
    if alg == "ds":
        result, trace = ds_triangle(polygon)
        return result, trace if want_trace else None
    if alg == "ds-quad":
        result, trace = ds_quadrilateral(polygon)
        return result, trace if want_trace else None
    if alg == "quadratic":
        return quadratic_triangle(polygon), None
    if alg == "dnc":
        return dnc_triangle(polygon), None
    if alg == "oracle":
        return brute_force_max_kgon(polygon, 3), None
    if alg == "oracle-quad":
        return brute_force_max_kgon(polygon, 4), None
    raise AssertionError(alg)


def _cmd_solve(args) -> int:
    data = _read_input(args.infile)
    try:
        polygon = parse_polygon_file(data)
    except (ParseError, GeometryError) as exc:
        print(f"error: {args.infile}: {exc}", file=sys.stderr)
        return 1
    t0 = time.perf_counter_ns()
    result, trace = _solve_one(args.alg, polygon, args.trace)
    elapsed_ns = time.perf_counter_ns() - t0
    record = {
        "algorithm": args.alg,
        "input_digest": hashlib.sha256(data).hexdigest(),
        "n": polygon.n,
        "result_indices": list(result),
        "doubled_area": str(polygon.doubled_area_of(result)),
        "wall_time_ns": elapsed_ns,
    }
    if trace is not None:
        record["trace"] = {
            "steps": len(trace.steps),
            "checkpoints": [
                {"indices": list(t), "doubled_area": str(a)}
                for t, a in trace.checkpoints
            ],
        }
    text = json.dumps(record, indent=2, sort_keys=True)
    print(text)
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(text + "\n")
    if args.svg_out:
        checkpoints = [t for t, _ in trace.checkpoints] if trace is not None else None
        with open(args.svg_out, "w") as fh:
            fh.write(render_svg(polygon, result, checkpoints))
    return 0


def _cmd_fuzz(args) -> int:
    cfg = FuzzConfig(
        trials=args.trials,
        n_range=(args.nmin, args.nmax),
        coord_bound=args.bound,
        seed=args.seed,
        targets=tuple(args.targets.split(",")),
        k=args.k,
        shrink=args.shrink,
    )
    report = differential_fuzz(cfg)
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    return 1 if report.corrected_failures else 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = run_bench(args.alg, sizes, seed=args.seed, reps=args.reps)
    sys.stdout.write(bench_csv(rows))
    return 0


def _cmd_fixtures(args) -> int:
    if args.action != "verify":
        print(f"error: unknown fixtures action {args.action!r}", file=sys.stderr)
        return 2
    failures = []

    def check(name: str, ok: bool, detail: str = ""):
        line = f"{'ok' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        print(line)
        if not ok:
            failures.append(name)

    poly9, lab9 = fixture9()
    oracle9 = brute_force_max_kgon(poly9, 3)
    check(
        "fixture9 oracle is {a0,b0,c0}",
        set(labels_of(lab9, oracle9)) == {"a0", "b0", "c0"},
        f"got {labels_of(lab9, oracle9)}",
    )
    ds_ok = True
    for root in range(poly9.n):
        result, _ = ds_triangle(poly9, root=root)
        if set(labels_of(lab9, result)) != {"c0", "c1", "c2"}:
            ds_ok = False
    check("fixture9 classic sweep reports {c0,c1,c2} from every root", ds_ok)
    check(
        "fixture9 oracle area strictly exceeds sweep area",
        poly9.doubled_area_of(oracle9) > poly9.doubled_area_of(ds_triangle(poly9)[0]),
    )

    poly16, lab16 = fixture16()
    oracle16 = brute_force_max_kgon(poly16, 4)
    check(
        "fixture16 oracle is {a4,a8,a12,a16}",
        set(labels_of(lab16, oracle16)) == {"a4", "a8", "a12", "a16"},
        f"got {labels_of(lab16, oracle16)}",
    )
    dsq_ok = True
    for root in range(poly16.n):
        result, _ = ds_quadrilateral(poly16, root=root)
        if set(labels_of(lab16, result)) != {"a1", "a4", "a8", "a12"}:
            dsq_ok = False
    check("fixture16 classic sweep reports {a1,a4,a8,a12} from every root", dsq_ok)
    check(
        "fixture16 sweep output is not 4-stable",
        not is_k_stable(poly16, ds_quadrilateral(poly16)[0]),
    )
    if failures:
        print(f"{len(failures)} fixture check(s) failed", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inscribe",
        description="Maximum-area inscribed triangles and quadrilaterals, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="run one algorithm on a polygon file")
    p_solve.add_argument(
        "--alg",
        required=True,
        choices=["ds", "quadratic", "dnc", "oracle", "ds-quad", "oracle-quad"],
    )
    p_solve.add_argument(
        "--in", dest="infile", required=True, help="polygon file, or fixture9/fixture16"
    )
    p_solve.add_argument("--json", dest="json_out", help="also write the JSON record here")
    p_solve.add_argument("--svg", dest="svg_out", help="write an SVG drawing here")
    p_solve.add_argument(
        "--trace", action="store_true", help="include sweep checkpoints (ds algorithms)"
    )
    p_solve.set_defaults(func=_cmd_solve)

    p_fuzz = sub.add_parser("fuzz", help="run a differential campaign")
    p_fuzz.add_argument("--trials", type=int, required=True)
    p_fuzz.add_argument("--nmin", type=int, default=4)
    p_fuzz.add_argument("--nmax", type=int, default=64)
    p_fuzz.add_argument("--bound", type=int, default=10**6)
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--targets", default="quadratic,dnc", help="comma-separated")
    p_fuzz.add_argument("--k", type=int, choices=[3, 4], default=3)
    p_fuzz.add_argument("--shrink", action="store_true")
    p_fuzz.set_defaults(func=_cmd_fuzz)

    p_bench = sub.add_parser("bench", help="time an algorithm over a size ladder")
    p_bench.add_argument("--alg", required=True, choices=["quadratic", "dnc"])
    p_bench.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--reps", type=int, default=5)
    p_bench.set_defaults(func=_cmd_bench)

    p_fix = sub.add_parser("fixtures", help="verify the bundled counter-examples")
    p_fix.add_argument("action", choices=["verify"])
    p_fix.set_defaults(func=_cmd_fixtures)

    return parser


def run_command(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; propagate as-is
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, GeometryError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
