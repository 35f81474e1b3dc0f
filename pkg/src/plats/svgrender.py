"""Static SVG rendering of plat grids with an optional sphere-arc overlay.

The drawing shows labeled twist boxes in their staggered layout, the
strand verticals, and the closure bridges; a sphere spec overlays a red
arc through its strand gaps.  All coordinates are integers so output is
byte-stable across platforms.
"""

from __future__ import annotations

from .grid import Closure, PlatGrid, require_valid
from .spheres import VerticalSphereSpec

_UNIT = 40
_MARGIN = 60
_ROW_PITCH = 80
_BOX_H = 40


def _x(col: int) -> int:
    return _MARGIN + col * _UNIT


def _gap_x(gap: int) -> int:
    return _MARGIN + gap * _UNIT - _UNIT // 2


def _row_y(row: int) -> int:
    return _MARGIN + _UNIT + (row - 1) * _ROW_PITCH


def render_svg(grid: PlatGrid, overlay: VerticalSphereSpec | None = None) -> str:
    """Render the grid as an SVG 1.1 document string."""
    require_valid(grid)
    m, n = grid.width, grid.length
    cols = 2 * m
    y_top = _MARGIN
    y_bot = _row_y(n - 1) + _BOX_H + _UNIT
    width = 2 * _MARGIN + (cols - 1) * _UNIT
    height = y_bot + _MARGIN
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    for col in range(cols):
        parts.append(
            f'<line x1="{_x(col)}" y1="{y_top}" x2="{_x(col)}" y2="{y_bot}" '
            'stroke="black" stroke-width="2"/>'
        )
    radius = _UNIT // 2
    for b in range(m):
        x1, x2 = _x(2 * b), _x(2 * b + 1)
        parts.append(
            f'<path d="M {x1} {y_top} A {radius} {radius} 0 0 1 {x2} {y_top}" '
            'fill="none" stroke="black" stroke-width="2"/>'
        )
    if grid.closure is Closure.STANDARD:
        bottom_pairs = [(2 * b, 2 * b + 1) for b in range(m)]
    else:
        bottom_pairs = [(2 * b + 1, 2 * b + 2) for b in range(m - 1)]
    for left, right in bottom_pairs:
        x1, x2 = _x(left), _x(right)
        parts.append(
            f'<path d="M {x1} {y_bot} A {radius} {radius} 0 0 0 {x2} {y_bot}" '
            'fill="none" stroke="black" stroke-width="2"/>'
        )
    if grid.closure is Closure.EVEN:
        drop = y_bot + _UNIT
        parts.append(
            f'<polyline points="{_x(cols - 1)},{y_bot} {_x(cols - 1)},{drop} '
            f'{_x(0)},{drop} {_x(0)},{y_bot}" fill="none" stroke="black" stroke-width="2"/>'
        )
    for i, row in enumerate(grid.rows, start=1):
        first = 1 if i % 2 == 1 else 0
        y = _row_y(i)
        for j, coefficient in enumerate(row, start=1):
            pair = first + 2 * (j - 1)
            x1 = _x(pair) - _UNIT // 4
            box_w = _UNIT + _UNIT // 2
            parts.append(
                f'<rect x="{x1}" y="{y}" width="{box_w}" height="{_BOX_H}" '
                'fill="white" stroke="black" stroke-width="2"/>'
            )
            cx = (_x(pair) + _x(pair + 1)) // 2
            parts.append(
                f'<text x="{cx}" y="{y + _BOX_H // 2 + 5}" font-size="16" '
                f'font-family="monospace" text-anchor="middle">{coefficient}</text>'
            )
    if overlay is not None:
        gaps = overlay.gaps()
        points = [(_gap_x(gaps[0]), y_top - _UNIT // 2)]
        for i, gap in enumerate(gaps, start=1):
            points.append((_gap_x(gap), _row_y(i) + _BOX_H // 2))
        points.append((_gap_x(gaps[-1]), y_bot + _UNIT // 2))
        point_text = " ".join(f"{x},{y}" for x, y in points)
        parts.append(
            f'<polyline points="{point_text}" fill="none" stroke="red" stroke-width="2"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
