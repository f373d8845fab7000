"""Strand diagrams in SVG or TikZ.

A word is drawn bottom to top, source at the bottom, one row per
generator.  A crossing swaps two neighbouring strands; a face (or ``r``
symbol, drawn dashed) splits one strand in two.  Each summand of an
element gets its own panel with the coefficient above it.
"""
from __future__ import annotations

from typing import NamedTuple

from .core import Element, Kind, Word
from .expr import format_scalar

SPACING = 30
ROW = 40
MARGIN = 20
LABEL = 20


class Row(NamedTuple):
    kind: Kind
    index: int
    strands_in: int
    strands_out: int


def layout(w: Word) -> list[Row]:
    """Rows from bottom to top; an empty word gives one row of straight strands."""
    if not w.gens:
        return [Row(Kind.CHI, -1, w.source + 1, w.source + 1)]
    return [Row(g.kind, g.index, g.source + 1, g.target + 1) for g in reversed(w.gens)]


def _segments(row: Row) -> list[tuple[int, int]]:
    """(bottom position, top position) pairs for one row."""
    k = row.index
    if row.kind == Kind.CHI:
        swap = {k: k + 1, k + 1: k} if k >= 0 else {}
        return [(p, swap.get(p, p)) for p in range(row.strands_in)]
    out = []
    for p in range(row.strands_in):
        if p < k:
            out.append((p, p))
        elif p == k:
            out += [(p, p), (p, p + 1)]
        else:
            out.append((p, p + 1))
    return out


def _panels(x: Element):
    for w, c in x:
        yield w, c, layout(w)


def _coef_text(c, first: bool) -> str:
    if c == 1:
        return "" if first else "+"
    if c == -1:
        return "-"
    s = format_scalar(c)
    return s if first or s.startswith("-") else "+" + s


def render_svg(x: Element) -> str:
    panels = list(_panels(x))
    widths = [max(r.strands_out for r in rows) * SPACING for _, _, rows in panels] or [SPACING]
    height = MARGIN * 2 + LABEL + ROW * max([len(rows) for _, _, rows in panels] or [1])
    total = sum(widths) + MARGIN * (len(widths) + 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total}" height="{height}" '
        f'viewBox="0 0 {total} {height}">',
        '<g stroke="black" stroke-width="2" fill="none">',
    ]
    texts = []
    if not panels:
        texts.append(f'<text x="{MARGIN}" y="{MARGIN + LABEL}">0</text>')
    left = MARGIN
    for n, (w, c, rows) in enumerate(panels):
        base = height - MARGIN
        label = _coef_text(c, n == 0)
        if label:
            texts.append(
                f'<text x="{left}" y="{MARGIN + LABEL // 2}" font-family="monospace" font-size="14">{label}</text>'
            )
        for r, row in enumerate(rows):
            y0, y1 = base - r * ROW, base - (r + 1) * ROW
            dash = ' stroke-dasharray="4 3"' if row.kind == Kind.RHO else ""
            for a, b in _segments(row):
                parts.append(
                    f'<line x1="{left + a * SPACING}" y1="{y0}" x2="{left + b * SPACING}" y2="{y1}"{dash}/>'
                )
            if row.kind != Kind.CHI:
                cx, cy = left + row.index * SPACING, y0
                parts.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="black"/>')
        left += widths[n] + MARGIN
    parts.append("</g>")
    parts += texts
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_tikz(x: Element) -> str:
    unit = 0.5
    lines = ["\\begin{tikzpicture}[line width=0.8pt]"]
    panels = list(_panels(x))
    if not panels:
        lines.append("\\node at (0,0) {$0$};")
    left = 0.0
    for n, (w, c, rows) in enumerate(panels):
        width = max(r.strands_out for r in rows)
        top = len(rows) * unit * 2
        label = _coef_text(c, n == 0)
        if label:
            lines.append(f"\\node[anchor=south west] at ({left:.2f},{top + 0.1:.2f}) {{${label}$}};")
        for r, row in enumerate(rows):
            y0, y1 = r * unit * 2, (r + 1) * unit * 2
            style = "[dashed]" if row.kind == Kind.RHO else ""
            for a, b in _segments(row):
                lines.append(
                    f"\\draw{style} ({left + a * unit:.2f},{y0:.2f}) -- ({left + b * unit:.2f},{y1:.2f});"
                )
            if row.kind != Kind.CHI:
                lines.append(f"\\fill ({left + row.index * unit:.2f},{y0:.2f}) circle (1.5pt);")
        left += (width + 1) * unit
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render(x: Element, fmt: str = "svg") -> str:
    if fmt == "svg":
        return render_svg(x)
    if fmt == "tikz":
        return render_tikz(x)
    raise ValueError(f"unknown diagram format {fmt!r}")
