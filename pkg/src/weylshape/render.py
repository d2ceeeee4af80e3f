"""Newton-polygon pictures of a support: SVG 1.1 and a plain-text fallback.

All coordinates are integers. One grid step is 32 px and represents 1 in the
y direction and ``1/level`` in the x direction, so fractional exponents land
on grid lines without any floating point.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .geometry import Direction, MAX_DIRECTION, MIN_DIRECTION, _convex_hull, en, hull_edges, st
from .weyl import Point, _Element, format_point

__all__ = ["render_svg", "render_ascii", "CELL"]

CELL = 32
MARGIN = 48


class _Frame:
    """Integer lattice frame covering the support and the origin."""

    def __init__(self, P: _Element):
        self.level = P.level
        xs = [int(x * P.level) for x, _ in P.terms] + [0]
        ys = [y for _, y in P.terms] + [0]
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(ys), max(ys)

    def ix(self, x: Fraction) -> int:
        return int(x * self.level)

    def px(self, p: Point) -> tuple[int, int]:
        return (
            MARGIN + (self.ix(p[0]) - self.x0) * CELL,
            MARGIN + (self.y1 - p[1]) * CELL,
        )

    @property
    def width(self) -> int:
        return 2 * MARGIN + (self.x1 - self.x0) * CELL

    @property
    def height(self) -> int:
        return 2 * MARGIN + (self.y1 - self.y0) * CELL


def _markers(P: _Element, d: Direction | None) -> tuple[Point | None, Point | None]:
    if d is None:
        return None, None
    start = st(P, d) if d != MIN_DIRECTION else None
    end = en(P, d) if d != MAX_DIRECTION else None
    return start, end


def render_svg(P: _Element, d: Direction | None = None) -> str:
    """Support points, hull, edges labelled by direction, and optional st/en markers for ``d``."""
    frame = _Frame(P)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{frame.width}" '
        f'height="{frame.height}" viewBox="0 0 {frame.width} {frame.height}">',
        f'<rect x="0" y="0" width="{frame.width}" height="{frame.height}" fill="white"/>',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    top, bottom = MARGIN, frame.height - MARGIN
    left, right = MARGIN, frame.width - MARGIN
    for i in range(frame.x1 - frame.x0 + 1):
        x = MARGIN + i * CELL
        out.append(f'<line x1="{x}" y1="{top}" x2="{x}" y2="{bottom}"/>')
    for j in range(frame.y1 - frame.y0 + 1):
        y = MARGIN + j * CELL
        out.append(f'<line x1="{left}" y1="{y}" x2="{right}" y2="{y}"/>')
    out.append("</g>")

    ox, oy = frame.px((Fraction(0), 0))
    out.append(
        f'<g stroke="black" stroke-width="1"><line x1="{left}" y1="{oy}" x2="{right}" y2="{oy}"/>'
        f'<line x1="{ox}" y1="{top}" x2="{ox}" y2="{bottom}"/></g>'
    )

    hull = _convex_hull(list(P.terms))
    if len(hull) >= 2:
        pts = " ".join("{},{}".format(*frame.px(p)) for p in hull)
        out.append(f'<polygon points="{pts}" fill="#e8f0ff" stroke="#8899bb" stroke-width="1"/>')

    out.append('<g stroke="#1f4fbf" stroke-width="3">')
    labels = []
    for a, b, direction in hull_edges(P):
        (x1, y1), (x2, y2) = frame.px(a), frame.px(b)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        labels.append(
            f'<text x="{(x1 + x2) // 2 + 6}" y="{(y1 + y2) // 2 - 6}">{escape(str(direction))}</text>'
        )
    out.append("</g>")
    out.append('<g font-family="monospace" font-size="12" fill="#1f4fbf">')
    out.extend(labels)
    out.append("</g>")

    out.append('<g fill="black">')
    for p in sorted(P.terms):
        x, y = frame.px(p)
        out.append(f'<circle cx="{x}" cy="{y}" r="4"><title>{escape(format_point(p))}</title></circle>')
    out.append("</g>")

    start, end = _markers(P, d)
    for name, point, colour in (("st", start, "#c0392b"), ("en", end, "#27ae60")):
        if point is None:
            continue
        x, y = frame.px(point)
        out.append(
            f'<circle cx="{x}" cy="{y}" r="8" fill="none" stroke="{colour}" stroke-width="2"/>'
            f'<text x="{x + 10}" y="{y + 16}" font-family="monospace" font-size="12" '
            f'fill="{colour}">{name}{escape(format_point(point))}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ascii(P: _Element, d: Direction | None = None) -> str:
    """Character grid: ``*`` support, ``S``/``E`` start/end corner, ``B`` when they coincide."""
    frame = _Frame(P)
    cells = {(frame.ix(x), y): "*" for x, y in P.terms}
    start, end = _markers(P, d)
    if start is not None:
        cells[(frame.ix(start[0]), start[1])] = "S"
    if end is not None:
        key = (frame.ix(end[0]), end[1])
        cells[key] = "B" if cells.get(key) == "S" else "E"
    rows = []
    for y in range(frame.y1, frame.y0 - 1, -1):
        line = "".join(cells.get((i, y), "+" if i == 0 and y == 0 else ".") for i in range(frame.x0, frame.x1 + 1))
        rows.append(f"{y:>3} {line}")
    rows.append(f"x step 1/{frame.level}, origin at column {-frame.x0}")
    for a, b, direction in hull_edges(P):
        rows.append(f"{direction}: {format_point(a)} -- {format_point(b)}")
    return "\n".join(rows) + "\n"
