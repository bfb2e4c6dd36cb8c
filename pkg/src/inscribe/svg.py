"""Deterministic SVG rendering of a polygon and a result tuple.

Pure presentation: a fixed viewport from the polygon's bounding box with a
5% margin, the polygon outline, the result k-gon as a filled translucent
polygon, and (optionally) the trace checkpoints as thin outlines.  Output is
byte-identical across runs for identical inputs.
"""

from __future__ import annotations

from .geometry import ConvexPolygon

_POLYGON_STYLE = 'fill="none" stroke="#1f3a5f" stroke-width="{w}"'
_RESULT_STYLE = 'fill="#d94f3d" fill-opacity="0.35" stroke="#d94f3d" stroke-width="{w}"'
_TRACE_STYLE = 'fill="none" stroke="#7a7a7a" stroke-opacity="0.6" stroke-width="{w}"'


def _viewport(polygon: ConvexPolygon) -> tuple[int, int, int, int]:
    xs = [p.x for p in polygon.vertices]
    ys = [p.y for p in polygon.vertices]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    # 5% margin on the larger span, at least 1 unit, all integer arithmetic
    span = max(max_x - min_x, max_y - min_y, 1)
    margin = max(span // 20, 1)
    return (min_x - margin, min_y - margin, max_x + margin, max_y + margin)


def _points_attr(polygon: ConvexPolygon, indices: tuple[int, ...], flip_y: int) -> str:
    return " ".join(
        f"{polygon.vertices[i].x},{flip_y - polygon.vertices[i].y}" for i in indices
    )


def render_svg(
    polygon: ConvexPolygon,
    result: tuple[int, ...],
    trace_checkpoints: list[tuple[int, ...]] | None = None,
) -> str:
    """SVG drawing of ``polygon`` with ``result`` filled translucently.

    ``trace_checkpoints`` (index tuples) are drawn as grey outlines under
    the result, oldest first.
    """
    x0, y0, x1, y1 = _viewport(polygon)
    width = x1 - x0
    height = y1 - y0
    # flip the y axis so larger y is drawn upward, staying in integers
    flip = y0 + y1
    stroke = max((max(width, height) + 399) // 400, 1)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {y0} {width} {height}">',
        f'<polygon points="{_points_attr(polygon, tuple(range(polygon.n)), flip)}" '
        + _POLYGON_STYLE.format(w=stroke)
        + "/>",
    ]
    for checkpoint in trace_checkpoints or []:
        parts.append(
            f'<polygon points="{_points_attr(polygon, checkpoint, flip)}" '
            + _TRACE_STYLE.format(w=stroke)
            + "/>"
        )
    parts.append(
        f'<polygon points="{_points_attr(polygon, result, flip)}" '
        + _RESULT_STYLE.format(w=stroke)
        + "/>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
