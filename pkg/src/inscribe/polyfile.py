"""The polygon file format.

A polygon file is plain text: a header line ``n <count> <CW|CCW>`` followed
by ``<count>`` lines of ``x y`` (decimal integers, single-space separated).
Lines starting with ``#`` and blank lines are ignored everywhere, so bundled
fixtures can carry a label comment block.  Parsing validates the polygon and
normalizes it to CCW storage.
"""

from __future__ import annotations

from .geometry import (
    ConvexPolygon,
    GeometryError,
    MAX_COORD_BOUND,
    Point,
    validate_convex_polygon,
)


class ParseError(ValueError):
    """Malformed polygon file; the message carries a 1-based line number."""


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def parse_polygon_file(
    data: bytes | str, coord_bound: int = MAX_COORD_BOUND
) -> ConvexPolygon:
    """Parse and validate a polygon file; returns a CCW polygon.

    Raises :class:`ParseError` for format problems and the
    :func:`validate_convex_polygon` error family (tagged with line context)
    for geometric ones.
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = _meaningful_lines(text)
    if not lines:
        raise ParseError("line 1: empty polygon file")

    lineno, header = lines[0]
    fields = header.split()
    if len(fields) != 3 or fields[0] != "n":
        raise ParseError(
            f"line {lineno}: header must be 'n <count> <CW|CCW>', got {header!r}"
        )
    try:
        count = int(fields[1])
    except ValueError:
        raise ParseError(f"line {lineno}: vertex count {fields[1]!r} is not an integer")
    orientation = fields[2]
    if orientation not in ("CW", "CCW"):
        raise ParseError(f"line {lineno}: orientation must be CW or CCW, got {fields[2]!r}")
    if count < 3:
        raise ParseError(f"line {lineno}: vertex count must be >= 3, got {count}")

    body = lines[1:]
    if len(body) != count:
        raise ParseError(
            f"line {lineno}: header declares {count} vertices, file has {len(body)}"
        )

    points = []
    for vline, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {vline}: expected 'x y', got {line!r}")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {vline}: non-integer coordinate in {line!r}")
        points.append(Point(x, y))

    try:
        return validate_convex_polygon(points, orientation, coord_bound=coord_bound)
    except GeometryError as exc:
        raise type(exc)(f"line {lines[1][0]}..{body[-1][0]}: {exc}") from exc


def format_polygon_file(
    polygon: ConvexPolygon, comments: list[str] | None = None
) -> str:
    """Serialize a polygon in the file format (always CCW)."""
    out = []
    for comment in comments or []:
        out.append(f"# {comment}")
    out.append(f"n {polygon.n} CCW")
    for p in polygon.vertices:
        out.append(f"{p.x} {p.y}")
    return "\n".join(out) + "\n"
