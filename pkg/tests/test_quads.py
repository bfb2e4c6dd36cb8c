"""The classic quadrilateral sweep, reproduced with its original nesting."""

import pytest

from inscribe import (
    GeometryError,
    Point,
    brute_force_max_kgon,
    ds_quadrilateral,
    fixture16,
    labels_of,
    random_convex_polygon,
    validate_convex_polygon,
)


def test_n4_returns_whole_polygon():
    square = validate_convex_polygon(
        [Point(0, 0), Point(3, 0), Point(3, 3), Point(0, 3)], "CCW"
    )
    result, _ = ds_quadrilateral(square)
    assert result == (0, 1, 2, 3)


def test_rejects_n3():
    tri = validate_convex_polygon([Point(0, 0), Point(3, 0), Point(0, 3)], "CCW")
    with pytest.raises(GeometryError):
        ds_quadrilateral(tri)


def test_symmetric_pentagon_matches_oracle():
    # unit square plus a far apex: not a counter-example shape
    pent = validate_convex_polygon(
        [Point(0, 0), Point(10, 0), Point(10, 10), Point(5, 40), Point(0, 10)], "CCW"
    )
    result, _ = ds_quadrilateral(pent)
    oracle = brute_force_max_kgon(pent, 4)
    assert pent.doubled_area_of(result) == pent.doubled_area_of(oracle)


def test_fixture16_reports_trap_from_every_root():
    poly, labels = fixture16()
    trap = {"a1", "a4", "a8", "a12"}
    for root in range(poly.n):
        result, _ = ds_quadrilateral(poly, root=root)
        assert set(labels_of(labels, result)) == trap


def test_fixture16_strictly_loses_to_oracle():
    poly, _ = fixture16()
    reported, _ = ds_quadrilateral(poly)
    oracle = brute_force_max_kgon(poly, 4)
    assert poly.doubled_area_of(reported) < poly.doubled_area_of(oracle)


def test_never_beats_oracle():
    for seed in range(25):
        poly = random_convex_polygon(5 + seed, 10**5, seed=seed)
        reported, _ = ds_quadrilateral(poly)
        oracle = brute_force_max_kgon(poly, 4)
        assert poly.doubled_area_of(reported) <= poly.doubled_area_of(oracle)


def test_trace_checkpoints_non_decreasing():
    poly, _ = fixture16()
    for root in range(poly.n):
        _, trace = ds_quadrilateral(poly, root=root)
        areas = trace.checkpoint_areas()
        assert areas == sorted(areas)
