"""Interleaving and stability predicates plus the rooted enumerations."""

import pytest

from inscribe import (
    GeometryError,
    Point,
    brute_force_max_kgon,
    enumerate_2_stable_rooted,
    fixture9,
    fixture16,
    interleaves,
    is_2_stable,
    is_3_stable,
    is_k_stable,
    largest_rooted_triangle,
    random_convex_polygon,
    validate_convex_polygon,
)

HEXAGON = validate_convex_polygon(
    [Point(2, 0), Point(4, 1), Point(4, 3), Point(2, 4), Point(0, 3), Point(0, 1)],
    "CCW",
)


class TestInterleaves:
    def test_alternating(self):
        assert interleaves((0, 2, 4), (1, 3, 5), HEXAGON)

    def test_blocked(self):
        assert not interleaves((0, 1, 2), (3, 4, 5), HEXAGON)

    def test_coincident_vertices_count(self):
        # closed intervals: shared vertices satisfy both sides
        assert interleaves((0, 2, 4), (0, 2, 4), HEXAGON)

    def test_symmetric(self):
        for a, b in [((0, 2, 4), (1, 3, 5)), ((0, 1, 3), (2, 4, 5))]:
            assert interleaves(a, b, HEXAGON) == interleaves(b, a, HEXAGON)

    def test_size_mismatch_rejected(self):
        with pytest.raises(GeometryError):
            interleaves((0, 2, 4), (1, 3), HEXAGON)


class TestFixtureStability:
    def test_optimum_is_3_stable(self):
        poly, labels = fixture9()
        optimum = brute_force_max_kgon(poly, 3)
        assert is_3_stable(poly, optimum)

    def test_sweep_result_is_2_stable_at_c0(self):
        poly, labels = fixture9()
        trap = tuple(sorted(labels[l] for l in ("c0", "c1", "c2")))
        assert is_2_stable(poly, trap, root=labels["c0"])

    def test_fixture16_sweep_not_4_stable_optimum_is(self):
        from inscribe import ds_quadrilateral

        poly, labels = fixture16()
        reported, _ = ds_quadrilateral(poly)
        optimum = brute_force_max_kgon(poly, 4)
        assert not is_k_stable(poly, reported)
        assert is_k_stable(poly, optimum)


class TestRootedEnumeration:
    @pytest.mark.parametrize("seed", range(8))
    def test_members_are_2_stable_and_rooted(self, seed):
        poly = random_convex_polygon(6 + seed * 5, 10**4, seed=seed)
        root = seed % poly.n
        result = enumerate_2_stable_rooted(poly, root)
        assert result.root == root
        assert result.triangles
        for t in result.triangles:
            assert root in t
            assert is_2_stable(poly, t, root)

    @pytest.mark.parametrize("seed", range(8))
    def test_against_exhaustive_reference(self, seed):
        poly = random_convex_polygon(5 + seed * 3, 10**4, seed=100 + seed)
        root = 0
        got = set(enumerate_2_stable_rooted(poly, root).triangles)
        want = set()
        for b in range(poly.n):
            for c in range(b + 1, poly.n):
                if root in (b, c):
                    continue
                t = tuple(sorted((root, b, c)))
                if is_2_stable(poly, t, root):
                    want.add(t)
        assert got == want

    @pytest.mark.parametrize("seed", range(6))
    def test_count_bounded_by_n(self, seed):
        poly = random_convex_polygon(8 + seed * 7, 10**5, seed=200 + seed)
        result = enumerate_2_stable_rooted(poly, 0)
        assert len(result.triangles) <= poly.n

    @pytest.mark.parametrize("seed", range(6))
    def test_rooted_members_pairwise_interleave(self, seed):
        poly = random_convex_polygon(9 + seed * 6, 10**5, seed=300 + seed)
        triangles = enumerate_2_stable_rooted(poly, 0).triangles
        for i, a in enumerate(triangles):
            for b in triangles[i + 1 :]:
                assert interleaves(a, b, poly)


class TestLargestRooted:
    @pytest.mark.parametrize("seed", range(6))
    def test_matches_exhaustive_maximum(self, seed):
        poly = random_convex_polygon(5 + seed * 4, 10**4, seed=400 + seed)
        for root in range(0, poly.n, 3):
            got = largest_rooted_triangle(poly, root)
            best = max(
                (
                    poly.doubled_area_of((root, b, c))
                    for b in range(poly.n)
                    for c in range(b + 1, poly.n)
                    if root not in (b, c)
                ),
            )
            assert poly.doubled_area_of(got) == best
            assert root in got
