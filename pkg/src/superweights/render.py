"""Text, JSON and SVG renderings of diagrams."""

from __future__ import annotations

import json
import re
from typing import Sequence

from ._errors import ParseError
from .diagrams import Cell, WeightDiagram

__all__ = [
    "display_range",
    "render_ascii",
    "render_svg",
    "render_ctd_ascii",
    "render_ctd_svg",
    "diagram_to_json",
    "diagram_from_json",
    "parse_diagram",
]


def display_range(D: WeightDiagram, overlays: Sequence = (), lo=None, hi=None):
    pts = list(D.positions) + [p for pair in overlays for p in pair]
    if lo is None:
        lo = min(pts, default=0) - 1
    if hi is None:
        hi = max(pts, default=0) + 1
    return lo, hi


def _char(c: Cell) -> str:
    if c.x:
        return "X"
    if c.gt:
        return ">"
    if c.lt:
        return "<"
    return "o"


def _overlay_row(lo: int, hi: int, start: int, end: int, kind: str) -> str:
    row = [" "] * (hi - lo + 1)

    def put(p, ch):
        if lo <= p <= hi:
            row[p - lo] = ch

    for p in range(start + 1, end):
        put(p, "-" if kind == "arrow" else "_")
    if start == end:
        put(start, "*")
    elif kind == "arrow":
        put(start, "+")
        put(end, ">")
    else:
        put(start, "\\")
        put(end, "/")
    return "".join(row).rstrip()


def render_ascii(
    D: WeightDiagram,
    arrows: Sequence[tuple[int, int]] = (),
    caps: Sequence[tuple[int, int]] = (),
    lo: int | None = None,
    hi: int | None = None,
) -> str:
    """One column per position; overlays sit above the symbol line.

    Arrows are drawn ``+--->`` and caps ``\\__/``.  Cells holding more than
    one symbol are listed in a legend under the ruler.
    """
    lo, hi = display_range(D, list(arrows) + list(caps), lo, hi)
    lines = []
    for s, e in sorted(caps, key=lambda c: (c[0] - c[1], c)):
        lines.append(_overlay_row(lo, hi, s, e, "cap"))
    for s, e in sorted(arrows, key=lambda a: (a[0] - a[1], a)):
        lines.append(_overlay_row(lo, hi, s, e, "arrow"))
    lines.append("".join(_char(D[p]) for p in range(lo, hi + 1)))
    lines.append("".join(str(abs(p) % 10) for p in range(lo, hi + 1)))
    lines.append(f"positions {lo}..{hi}")
    for p, c in D.cells:
        if lo <= p <= hi and len(c.glyph) > 1:
            lines.append(f"{c.glyph} at {p}")
    return "\n".join(lines) + "\n"


def diagram_to_json(D: WeightDiagram) -> str:
    positions = []
    for p, c in D.cells:
        rec = {"p": p, "x": c.x, "marker": c.marker}
        count = c.gt or c.lt
        if count > 1:
            rec["count"] = count
        positions.append(rec)
    return json.dumps({"positions": positions})


def diagram_from_json(text: str) -> WeightDiagram:
    try:
        data = json.loads(text)
        cells = {}
        for rec in data["positions"]:
            count = rec.get("count", 1)
            marker = rec.get("marker")
            if marker not in (None, "gt", "lt"):
                raise ParseError(f"bad marker {marker!r}")
            cells[int(rec["p"])] = Cell(
                int(rec["x"]),
                count if marker == "gt" else 0,
                count if marker == "lt" else 0,
            )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad diagram JSON: {exc}") from exc
    return WeightDiagram.from_mapping(cells)


_GLYPH = re.compile(r"(?:(X|x)(\d*))?(?:([<>])(\d*))?$")


def parse_diagram(text: str) -> WeightDiagram:
    """Read ``"0:X2, 3:X, 5:>"`` or the JSON form."""
    text = text.strip()
    if text.startswith("{") and '"positions"' in text:
        return diagram_from_json(text)
    text = text.strip("{}")
    cells = {}
    for part in re.split(r"[\s,]+", text):
        if not part:
            continue
        if ":" not in part:
            raise ParseError(f"bad cell {part!r}, expected p:GLYPH")
        pos, glyph = part.split(":", 1)
        if glyph == "o" and re.fullmatch(r"-?\d+", pos):
            continue
        match = _GLYPH.match(glyph.replace("×", "X"))
        if not re.fullmatch(r"-?\d+", pos) or not match or not glyph:
            raise ParseError(f"bad cell {part!r}")
        xs, xn, mk, mn = match.groups()
        x = (int(xn) if xn else 1) if xs else 0
        cnt = (int(mn) if mn else 1) if mk else 0
        cells[int(pos)] = Cell(x, cnt if mk == ">" else 0, cnt if mk == "<" else 0)
    return WeightDiagram.from_mapping(cells)


_STEP = 40
_BASE = 120


def _x(p: int, lo: int) -> int:
    return 30 + (p - lo) * _STEP


def _glyph_svg(p: int, lo: int, c: Cell) -> list[str]:
    cx = _x(p, lo)
    out = [f'<g class="pos" data-p="{p}">']
    y = _BASE
    items = ["x"] * c.x + [">"] * c.gt + ["<"] * c.lt
    if not items:
        out.append(f'<circle cx="{cx}" cy="{y}" r="6" fill="none" stroke="black"/>')
    for k, kind in enumerate(items):
        yy = y - 18 * k
        if kind == "x":
            out.append(
                f'<path d="M{cx - 6},{yy - 6} L{cx + 6},{yy + 6} M{cx - 6},{yy + 6} '
                f'L{cx + 6},{yy - 6}" stroke="black" stroke-width="2"/>'
            )
        elif kind == ">":
            out.append(
                f'<path d="M{cx - 5},{yy - 7} L{cx + 6},{yy} L{cx - 5},{yy + 7}" '
                'fill="none" stroke="black" stroke-width="2"/>'
            )
        else:
            out.append(
                f'<path d="M{cx + 5},{yy - 7} L{cx - 6},{yy} L{cx + 5},{yy + 7}" '
                'fill="none" stroke="black" stroke-width="2"/>'
            )
    out.append(f'<text x="{cx}" y="{_BASE + 30}" font-size="11" text-anchor="middle">{p}</text>')
    out.append("</g>")
    return out


def render_svg(
    D: WeightDiagram,
    arrows: Sequence[tuple[int, int]] = (),
    caps: Sequence[tuple[int, int]] = (),
    lo: int | None = None,
    hi: int | None = None,
) -> str:
    """SVG document with one glyph group per position and one path per overlay."""
    lo, hi = display_range(D, list(arrows) + list(caps), lo, hi)
    width = _x(hi, lo) + 30
    height = _BASE + 45
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="{_x(lo, lo) - 15}" y1="{_BASE + 14}" x2="{_x(hi, lo) + 15}" '
        f'y2="{_BASE + 14}" stroke="gray"/>',
    ]
    dd = D.as_dict()
    for p in range(lo, hi + 1):
        out += _glyph_svg(p, lo, dd.get(p, Cell()))
    for s, e in sorted(caps):
        x1, x2 = _x(s, lo), _x(e, lo)
        h = 12 + 10 * abs(e - s)
        out.append(
            f'<path class="cap" d="M{x1},{_BASE - 10} C{x1},{_BASE - 10 - h} '
            f'{x2},{_BASE - 10 - h} {x2},{_BASE - 10}" fill="none" stroke="blue"/>'
        )
    for s, e in sorted(arrows):
        x1, x2 = _x(s, lo), _x(e, lo)
        h = 12 + 8 * abs(e - s)
        out.append(
            f'<path class="arrow" d="M{x1},{_BASE - 10} Q{(x1 + x2) // 2},{_BASE - 10 - h} '
            f'{x2},{_BASE - 10} M{x2 - 5},{_BASE - 17} L{x2},{_BASE - 10} L{x2 + 2},{_BASE - 18}" '
            'fill="none" stroke="red"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ctd_ascii(C) -> str:
    grid = C.dense()
    rows = [f"i={i + 1:<3}" + "".join("#" if v else "." for v in grid[i]) for i in range(C.m)]
    return "\n".join(rows) + "\n"


def render_ctd_svg(C) -> str:
    cell = 20
    width, height = 20 + cell * C.n, 20 + cell * C.m
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    grid = C.dense()
    for i in range(C.m):
        for j in range(C.n):
            fill = "black" if grid[i, j] else "white"
            out.append(
                f'<rect x="{10 + j * cell}" y="{10 + i * cell}" width="{cell}" '
                f'height="{cell}" fill="{fill}" stroke="gray"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
