"""Deterministic SVG word clouds.

The layout is a pure function of the frequency table: terms are ranked by
(count desc, term asc), the top 50 are kept, font sizes interpolate
linearly between 12 and 72 by count, and words flow left to right into
rows. Identical input therefore produces byte-identical SVG, which keeps
the output testable and diffable. No randomness, no font metrics: text
width is estimated from character count.
"""

from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape

from .errors import EmptyTable

MAX_TERMS = 50
MIN_FONT = 12
MAX_FONT = 72
CANVAS_WIDTH = 800
MARGIN = 10
WORD_GAP = 14
# Rough advance width of one character as a fraction of the font size.
CHAR_WIDTH = 0.6
LINE_SPACING = 1.25


def _font_size(count: int, lowest: int, highest: int) -> float:
    if highest == lowest:
        return float(MAX_FONT)
    scale = (count - lowest) / (highest - lowest)
    return MIN_FONT + scale * (MAX_FONT - MIN_FONT)


def _format_size(size: float) -> str:
    text = f"{size:.2f}".rstrip("0").rstrip(".")
    return text if text else "0"


def render_wordcloud_svg(table: dict[str, int], path: Path | str) -> int:
    """Render a frequency table to an SVG file; returns bytes written."""
    if not table:
        raise EmptyTable("cannot render a word cloud for an empty table")

    ranked = sorted(table.items(), key=lambda kv: (-kv[1], kv[0]))[:MAX_TERMS]
    counts = [count for _, count in ranked]
    lowest, highest = min(counts), max(counts)

    # Greedy row fill in rank order.
    rows: list[list[tuple[str, float, int]]] = []  # (term, size, width)
    row: list[tuple[str, float, int]] = []
    x = MARGIN
    for term, count in ranked:
        size = _font_size(count, lowest, highest)
        width = int(round(CHAR_WIDTH * size * len(term)))
        if row and x + width > CANVAS_WIDTH - MARGIN:
            rows.append(row)
            row = []
            x = MARGIN
        row.append((term, size, width))
        x += width + WORD_GAP
    if row:
        rows.append(row)

    elements: list[str] = []
    y = MARGIN
    for row in rows:
        row_height = max(size for _, size, _ in row) * LINE_SPACING
        baseline = int(round(y + max(size for _, size, _ in row)))
        x = MARGIN
        for term, size, width in row:
            elements.append(
                f'  <text x="{x}" y="{baseline}" font-family="sans-serif" '
                f'font-size="{_format_size(size)}">{escape(term)}</text>'
            )
            x += width + WORD_GAP
        y = int(round(y + row_height))
    height = y + MARGIN

    svg = "\n".join(
        [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{CANVAS_WIDTH}" height="{height}">',
            *elements,
            "</svg>",
            "",
        ]
    )
    data = svg.encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(data)
    return len(data)
