"""
SVG Rendering Service
Draws a d-interval representation as labelled horizontal segments on greedy rows
"""

import logging
from fractions import Fraction
from typing import List, Tuple

from models import DIntervalRep, Interval

logger = logging.getLogger(__name__)

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<svg
    width="%(width).2f"
    height="%(height).2f"
    viewBox="0 0 %(width).2f %(height).2f"
    version="1.1"
    xmlns="http://www.w3.org/2000/svg">
<rect x="0" y="0" width="%(width).2f" height="%(height).2f" style="fill:#ffffff"/>
"""

POSTAMBLE = """\
</svg>
"""

SEGMENT = (
    '<line class="segment" x1="%(x1).2f" y1="%(y).2f" x2="%(x2).2f" y2="%(y).2f" '
    'style="stroke:%(color)s;stroke-width:3;stroke-linecap:round"/>'
)
LABEL = (
    '<text x="%(x).2f" y="%(y).2f" fill="#333333" font-size="11" '
    'font-family="monospace" text-anchor="middle">%(text)s</text>'
)
TICK = '<line class="axis" x1="%(x).2f" y1="%(y1).2f" x2="%(x).2f" y2="%(y2).2f" style="stroke:#bbbbbb;stroke-width:1"/>'

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


class SvgService:
    """Deterministic SVG drawings of representations"""

    UNIT_PX = 28.0
    ROW_PX = 24.0
    MARGIN_PX = 20.0
    LABEL_CHAR_PX = 7.0

    def segment_label(self, vertex: int, index: int, parts: int) -> str:
        return str(vertex) if parts == 1 else f"{vertex}_{index}"

    def assign_rows(self, segments: List[Tuple[Interval, str]]) -> List[int]:
        """First-fit rows in (l, r, label) order; a row is free once the previous segment and its label end"""
        gap = Fraction(self.LABEL_CHAR_PX * 4) / Fraction(self.UNIT_PX)
        row_ends: List[Fraction] = []
        rows = []
        for iv, label in segments:
            width = max(iv.length, Fraction(len(label)) * Fraction(self.LABEL_CHAR_PX) / Fraction(self.UNIT_PX))
            for row, end in enumerate(row_ends):
                if end < iv.l:
                    break
            else:
                row = len(row_ends)
                row_ends.append(iv.l)
            row_ends[row] = iv.l + width + gap
            rows.append(row)
        return rows

    def render_svg(self, rep: DIntervalRep) -> str:
        """
        Render a representation

        Returns:
            SVG document text with one <line class="segment"> per interval
        """
        segments = []
        for v, ivs in rep.items():
            for j, iv in enumerate(ivs, start=1):
                segments.append((iv, self.segment_label(v, j, len(ivs)), v))
        segments.sort(key=lambda item: (item[0].l, item[0].r, item[1]))

        if not segments:
            width = height = 2 * self.MARGIN_PX
            return PREAMBLE % locals() + POSTAMBLE

        rows = self.assign_rows([(iv, label) for iv, label, _ in segments])
        lo = float(min(iv.l for iv, _, _ in segments))
        hi = float(max(iv.r for iv, _, _ in segments))
        width = (hi - lo) * self.UNIT_PX + 2 * self.MARGIN_PX + 40
        height = (max(rows) + 1) * self.ROW_PX + 2 * self.MARGIN_PX + 10

        def x_of(value: Fraction) -> float:
            return self.MARGIN_PX + (float(value) - lo) * self.UNIT_PX

        commands = []
        axis_y = height - self.MARGIN_PX
        for tick in range(int(lo // 1), int(-(-hi // 1)) + 1):
            x = x_of(Fraction(tick))
            y1, y2 = axis_y - 4, axis_y + 4
            commands.append(TICK % locals())

        for (iv, text, v), row in zip(segments, rows):
            x1, x2 = x_of(iv.l), x_of(iv.r)
            y = self.MARGIN_PX + row * self.ROW_PX + 12
            color = PALETTE[v % len(PALETTE)]
            commands.append(SEGMENT % locals())
            x, y = (x1 + x2) / 2, y - 5
            commands.append(LABEL % locals())

        logger.debug(f"Rendered {len(segments)} segments on {max(rows) + 1} rows")
        return PREAMBLE % locals() + "\n".join(commands) + "\n" + POSTAMBLE


# Global SVG service instance
svg_service = SvgService()
