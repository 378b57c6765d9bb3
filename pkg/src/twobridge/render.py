"""Deterministic SVG rendering of curves, strip decompositions, and models.

All layout constants are fixed and all coordinates are integers, so the
same input always renders to the same bytes.  Strip separators are drawn
as vertical lines, Type 2 strips are highlighted, and model renders add
the standard Reeb tree beneath every separator.  Rendering is one-way;
SVG is never imported.
"""

from __future__ import annotations

from .curves import ImmersedCurve, StripDecomposition
from .morse import StableMapModel

MARGIN = 16
COL_W = 28
CAP_W = 24
CURVE_TOP = 32
CURVE_BOT = 88
STRIP_W = 36
STRIP_TOP = 16
STRIP_BOT = 112
TREE_H = 48
TREE_W = 16

_HEADER = '<?xml version="1.0" encoding="UTF-8"?>'


def _svg(width: int, height: int, parts: list[str]) -> str:
    lines = [
        _HEADER,
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {width} {height}" width="{width}" height="{height}">',
    ]
    lines.extend(parts)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _line(x1, y1, x2, y2, cls, dashed=False) -> str:
    dash = ' stroke-dasharray="4 3"' if dashed else ""
    return (
        f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
        f'stroke="black" stroke-width="2"{dash}/>'
    )


def _render_curve(curve: ImmersedCurve) -> str:
    n = len(curve.columns)
    width = 2 * MARGIN + 2 * CAP_W + n * COL_W
    height = CURVE_BOT + CURVE_TOP
    mid = (CURVE_TOP + CURVE_BOT) // 2
    left = MARGIN + CAP_W
    right = left + n * COL_W
    parts = [
        f'<rect class="region-E" x="{MARGIN // 2}" y="{MARGIN // 2}" '
        f'width="{width - MARGIN}" height="{height - MARGIN}" '
        f'fill="none" stroke="gray" stroke-width="1"/>',
        f'<path class="cap" d="M {left} {CURVE_TOP} C {MARGIN} {CURVE_TOP} '
        f'{MARGIN} {CURVE_BOT} {left} {CURVE_BOT}" fill="none" stroke="black" stroke-width="2"/>',
        f'<path class="cap" d="M {right} {CURVE_TOP} C {width - MARGIN} {CURVE_TOP} '
        f'{width - MARGIN} {CURVE_BOT} {right} {CURVE_BOT}" fill="none" stroke="black" stroke-width="2"/>',
    ]
    for i, col in enumerate(curve.columns):
        x0 = left + i * COL_W
        x1 = x0 + COL_W
        if col.kind == "crossing":
            parts.append(
                '<g class="crossing">'
                + _line(x0, CURVE_TOP, x1, CURVE_BOT, "strand")
                + _line(x0, CURVE_BOT, x1, CURVE_TOP, "strand")
                + "</g>"
            )
        elif col.kind == "tangency":
            cx = (x0 + x1) // 2
            parts.append(
                '<g class="tangency">'
                f'<path d="M {x0} {CURVE_TOP} Q {cx} {mid} {x1} {CURVE_TOP}" '
                f'fill="none" stroke="black" stroke-width="2"/>'
                f'<path d="M {x0} {CURVE_BOT} Q {cx} {mid} {x1} {CURVE_BOT}" '
                f'fill="none" stroke="black" stroke-width="2"/>'
                "</g>"
            )
        else:
            parts.append(_line(x0, CURVE_TOP, x1, CURVE_TOP, "strand"))
            parts.append(_line(x0, CURVE_BOT, x1, CURVE_BOT, "strand"))
            cx = (x0 + x1) // 2
            parts.append(_line(cx, CURVE_TOP - 8, cx, CURVE_BOT + 8, "smoothed-mark", dashed=True))
    return _svg(width, height, parts)


def _strip_rects(strips, left: int) -> list[str]:
    parts = []
    for i, strip in enumerate(strips):
        x = left + i * STRIP_W
        if strip.kind == "type2":
            fill = "#ffd27f"
            cls = "strip strip-type2"
        elif strip.kind in ("type1", "type4"):
            fill = "#e8e8e8"
            cls = f"strip strip-{strip.kind}"
        else:
            fill = "white"
            cls = "strip strip-type3"
        parts.append(
            f'<rect class="{cls}" x="{x}" y="{STRIP_TOP}" width="{STRIP_W}" '
            f'height="{STRIP_BOT - STRIP_TOP}" fill="{fill}" stroke="none"/>'
        )
    return parts


def _gamma_lines(count: int, left: int) -> list[str]:
    parts = []
    for k in range(1, count):
        x = left + k * STRIP_W
        parts.append(_line(x, STRIP_TOP, x, STRIP_BOT, "gamma"))
    return parts


def _render_strips(decomposition: StripDecomposition) -> str:
    strips = decomposition.strips
    left = MARGIN
    width = 2 * MARGIN + len(strips) * STRIP_W
    height = STRIP_BOT + MARGIN
    parts = _strip_rects(strips, left)
    parts.append(
        f'<rect class="region-E" x="{left}" y="{STRIP_TOP}" '
        f'width="{len(strips) * STRIP_W}" height="{STRIP_BOT - STRIP_TOP}" '
        f'fill="none" stroke="black" stroke-width="2"/>'
    )
    parts.extend(_gamma_lines(len(strips), left))
    return _svg(width, height, parts)


def _tree_glyph(x: int, y: int) -> str:
    """The standard cross-section tree: two leaves above, two below."""
    half = TREE_W // 2
    top = y
    s_hi = y + TREE_H // 3
    s_lo = y + 2 * TREE_H // 3
    bot = y + TREE_H
    segs = [
        _line(x - half, top, x, s_hi, "reeb-edge"),
        _line(x + half, top, x, s_hi, "reeb-edge"),
        _line(x, s_hi, x, s_lo, "reeb-edge"),
        _line(x, s_lo, x - half, bot, "reeb-edge"),
        _line(x, s_lo, x + half, bot, "reeb-edge"),
    ]
    return '<g class="reeb-tree">' + "".join(segs) + "</g>"


def _render_model(model: StableMapModel) -> str:
    strips = model.strips.strips
    left = MARGIN
    width = 2 * MARGIN + len(strips) * STRIP_W
    height = STRIP_BOT + TREE_H + 3 * MARGIN
    parts = _strip_rects(strips, left)
    parts.append(
        f'<rect class="region-E" x="{left}" y="{STRIP_TOP}" '
        f'width="{len(strips) * STRIP_W}" height="{STRIP_BOT - STRIP_TOP}" '
        f'fill="none" stroke="black" stroke-width="2"/>'
    )
    parts.extend(_gamma_lines(len(strips), left))
    mid_y = (STRIP_TOP + STRIP_BOT) // 2
    for i, block in enumerate(model.blocks):
        cx = left + i * STRIP_W + STRIP_W // 2
        for j, event in enumerate(block.events):
            cy = mid_y + (j - len(block.events) // 2) * 14
            cls = "event-ii2" if event.kind == "II2" else "event-ii3"
            parts.append(
                f'<circle class="{cls}" cx="{cx}" cy="{cy}" r="4" fill="black"/>'
            )
    tree_y = STRIP_BOT + MARGIN
    for k in range(1, len(strips)):
        parts.append(_tree_glyph(left + k * STRIP_W, tree_y))
    return _svg(width, height, parts)


def render_svg(subject) -> str:
    """Render an ImmersedCurve, StripDecomposition, or StableMapModel."""
    if isinstance(subject, ImmersedCurve):
        return _render_curve(subject)
    if isinstance(subject, StripDecomposition):
        return _render_strips(subject)
    if isinstance(subject, StableMapModel):
        return _render_model(subject)
    raise TypeError(f"cannot render {type(subject).__name__}")
