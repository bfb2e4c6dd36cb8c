"""Polygon file format, SVG emitter, and the CLI surface."""

import json

import pytest

from inscribe import (
    ParseError,
    Point,
    canonical_cyclic_order,
    format_polygon_file,
    parse_polygon_file,
    validate_convex_polygon,
)
from inscribe.cli import run_command
from inscribe.svg import render_svg

TRIANGLE_FILE = "n 3 CCW\n0 0\n1 0\n0 1\n"


class TestPolygonFile:
    def test_parse_triangle(self):
        poly = parse_polygon_file(TRIANGLE_FILE)
        assert poly.n == 3

    def test_parse_bytes(self):
        assert parse_polygon_file(TRIANGLE_FILE.encode()).n == 3

    def test_cw_input_normalized(self):
        poly = parse_polygon_file("n 3 CW\n0 0\n0 1\n1 0\n")
        ccw = parse_polygon_file(TRIANGLE_FILE)
        assert canonical_cyclic_order(poly.vertices).vertices == (
            canonical_cyclic_order(ccw.vertices).vertices
        )

    def test_comments_and_blank_lines_ignored(self):
        text = "# a comment\n\nn 3 CCW\n0 0\n# interior comment\n1 0\n0 1\n"
        assert parse_polygon_file(text).n == 3

    def test_count_mismatch(self):
        with pytest.raises(ParseError, match="declares 4"):
            parse_polygon_file("n 4 CCW\n0 0\n1 0\n0 1\n")

    def test_bad_header(self):
        with pytest.raises(ParseError, match="header"):
            parse_polygon_file("polygon 3\n0 0\n1 0\n0 1\n")

    def test_bad_orientation(self):
        with pytest.raises(ParseError, match="orientation"):
            parse_polygon_file("n 3 ccw\n0 0\n1 0\n0 1\n")

    def test_non_integer_coordinate_names_line(self):
        with pytest.raises(ParseError, match="line 3"):
            parse_polygon_file("n 3 CCW\n0 0\n1.5 0\n0 1\n")

    def test_round_trip(self):
        poly = parse_polygon_file(TRIANGLE_FILE)
        assert parse_polygon_file(format_polygon_file(poly)).vertices == poly.vertices


class TestSvg:
    def test_byte_identical_reruns(self):
        poly = validate_convex_polygon(
            [Point(0, 0), Point(40, 0), Point(40, 40), Point(0, 40)], "CCW"
        )
        a = render_svg(poly, (0, 1, 2))
        b = render_svg(poly, (0, 1, 2))
        assert a == b
        assert a.startswith("<?xml") and "</svg>" in a

    def test_contains_result_polygon(self):
        poly = validate_convex_polygon(
            [Point(0, 0), Point(40, 0), Point(40, 40), Point(0, 40)], "CCW"
        )
        assert 'fill-opacity="0.35"' in render_svg(poly, (0, 1, 2))


class TestCli:
    def test_solve_fixture9_ds(self, capsys):
        assert run_command(["solve", "--alg", "ds", "--in", "fixture9"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["doubled_area"] == "13733547"

    def test_solve_dnc_matches_oracle_on_fixture(self, capsys):
        assert run_command(["solve", "--alg", "dnc", "--in", "fixture9"]) == 0
        dnc = json.loads(capsys.readouterr().out)
        assert run_command(["solve", "--alg", "oracle", "--in", "fixture9"]) == 0
        oracle = json.loads(capsys.readouterr().out)
        assert dnc["doubled_area"] == oracle["doubled_area"]

    def test_solve_json_round_trip(self, tmp_path, capsys):
        infile = tmp_path / "poly.txt"
        infile.write_text(TRIANGLE_FILE)
        out = tmp_path / "result.json"
        assert (
            run_command(
                ["solve", "--alg", "oracle", "--in", str(infile), "--json", str(out)]
            )
            == 0
        )
        capsys.readouterr()
        record = json.loads(out.read_text())
        poly = parse_polygon_file(infile.read_text())
        assert poly.doubled_area_of(record["result_indices"]) == int(
            record["doubled_area"]
        )

    def test_solve_svg_deterministic(self, tmp_path, capsys):
        svg1, svg2 = tmp_path / "a.svg", tmp_path / "b.svg"
        for out in (svg1, svg2):
            assert (
                run_command(
                    ["solve", "--alg", "ds", "--in", "fixture9", "--svg", str(out), "--trace"]
                )
                == 0
            )
        capsys.readouterr()
        assert svg1.read_bytes() == svg2.read_bytes()

    def test_fuzz_exit_zero_and_deterministic(self, capsys):
        argv = ["fuzz", "--trials", "5", "--nmin", "4", "--nmax", "12", "--seed", "9"]
        assert run_command(argv) == 0
        first = capsys.readouterr().out
        assert run_command(argv) == 0
        second = capsys.readouterr().out
        assert first == second
        assert json.loads(first)["failures"] == []

    def test_bench_csv_shape(self, capsys):
        assert (
            run_command(
                ["bench", "--alg", "dnc", "--sizes", "64,128", "--reps", "2"]
            )
            == 0
        )
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "n,median_seconds"
        assert [row.split(",")[0] for row in lines[1:]] == ["64", "128"]

    def test_fixtures_verify(self, capsys):
        assert run_command(["fixtures", "verify"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out

    def test_usage_error_exit_2(self, capsys):
        assert run_command(["nosuch"]) == 2
        assert run_command(["solve", "--alg", "bogus", "--in", "fixture9"]) == 2

    def test_missing_file_exit_1(self, capsys):
        assert run_command(["solve", "--alg", "ds", "--in", "/nope/missing"]) == 1

    def test_malformed_file_exit_1(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("n 4 CCW\n0 0\n1 0\n0 1\n")
        assert run_command(["solve", "--alg", "ds", "--in", str(bad)]) == 1
