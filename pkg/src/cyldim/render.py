"""SVG pictures of a configuration as a strip of rhombi on a 60 degree grid."""
from __future__ import annotations

import math

from .dimers import DimerConfiguration, to_lozenge_cells

COLORS = {"horizontal": "#d9892b", "vertical": "#3f6e9a", "empty": "#efeadb"}
H = math.sqrt(3) / 2


def _fmt(x: float) -> str:
    return f"{x:.3f}".rstrip("0").rstrip(".")


def render_svg(c: DimerConfiguration, scale: float = 32.0) -> str:
    n, k = c.shape.n, c.shape.k
    margin = 0.5
    width = (n + 0.5 * k + 2 * margin) * scale
    height = (k * H + 2 * margin) * scale

    def pt(x, y):
        # y counts rows upward from the bottom boundary
        return f"{_fmt((x + margin) * scale)},{_fmt((margin + (k - y) * H) * scale)}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f"<title>n={n} k={k} levels={' '.join(str(b) for b in c.levels)}</title>",
    ]
    for cell in to_lozenge_cells(c):
        y = cell.row - 1
        x0 = cell.column - 1 + 0.5 * y
        points = " ".join([pt(x0, y), pt(x0 + 1, y), pt(x0 + 1.5, y + 1), pt(x0 + 0.5, y + 1)])
        cls = cell.kind + (" straddle" if cell.straddles_seam else "")
        stroke = ' stroke-width="2.5" stroke="#b3261e"' if cell.straddles_seam else ' stroke="#555" stroke-width="0.6"'
        out.append(f'<polygon class="{cls}" points="{points}" fill="{COLORS[cell.kind]}"{stroke}/>')
    # the seam runs through the middle of column n, cutting every wrapping dimer
    seam = " ".join(pt(n - 0.5 + 0.5 * y, y) for y in range(k + 1))
    out.append(f'<polyline class="seam" points="{seam}" fill="none" stroke="#d11" stroke-dasharray="4 3" stroke-width="1.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
