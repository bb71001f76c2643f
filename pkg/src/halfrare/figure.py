"""SVG rendering of Fréchet-interval charts.

One bar pair per subset, in ascending bitmask order: a blue rectangle spans
[independence value, upper bound] and a red rectangle spans
[lower bound, independence value], so red always tops out exactly where blue
starts.  Dashed horizontal gridlines mark the unit interval in quarters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import BoundaryDistributions, boundary_distributions
from .core import MarginalSet, indicator_string, subset_iter
from .errors import TooLarge
from .transforms import independent_epd

#: Bars stop being legible past this many events.
MAX_FIGURE_EVENTS = 8


@dataclass(frozen=True)
class FigureSpec:
    width_px: int = 640
    height_px: int = 480
    margin_left: int = 42
    margin_right: int = 12
    margin_top: int = 12
    margin_bottom: int = 32

    @property
    def plot_width(self) -> float:
        return self.width_px - self.margin_left - self.margin_right

    @property
    def plot_height(self) -> float:
        return self.height_px - self.margin_top - self.margin_bottom

    def y(self, value: Fraction) -> float:
        return self.margin_top + (1 - float(value)) * self.plot_height


def render_figure(m: MarginalSet, spec: FigureSpec = FigureSpec()) -> str:
    """Fréchet-interval chart for a marginal set as an SVG 1.1 document."""
    if m.n > MAX_FIGURE_EVENTS:
        raise TooLarge(f"N={m.n} exceeds the figure cap {MAX_FIGURE_EVENTS}")
    bd: BoundaryDistributions = boundary_distributions(m)
    star = independent_epd(m)
    n = m.n
    ncells = 1 << n
    slot = spec.plot_width / ncells
    bar = slot * 0.6

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width_px}" height="{spec.height_px}" '
        f'viewBox="0 0 {spec.width_px} {spec.height_px}">',
        '<style>.grid{stroke:#888;stroke-width:1}'
        ".blue{fill:#2060c0}.red{fill:#c03030}"
        ".tick{font:9px sans-serif;fill:#444}"
        ".label{font:8px monospace;fill:#444;text-anchor:middle}</style>",
    ]
    for k in range(5):
        q = Fraction(k, 4)
        y = spec.y(q)
        parts.append(
            f'<line class="grid" stroke-dasharray="4 3" '
            f'x1="{spec.margin_left}" y1="{y:.2f}" '
            f'x2="{spec.width_px - spec.margin_right}" y2="{y:.2f}"/>'
        )
        parts.append(
            f'<text class="tick" x="4" y="{y + 3:.2f}">{k}/4</text>'
            if k % 4
            else f'<text class="tick" x="4" y="{y + 3:.2f}">{k // 4}</text>'
        )
    for x in subset_iter(n):
        cx = spec.margin_left + slot * (x + 0.5)
        left = cx - bar / 2
        y_up, y_star, y_lo = spec.y(bd.upper[x]), spec.y(star[x]), spec.y(bd.lower[x])
        parts.append(
            f'<rect class="blue" x="{left:.2f}" y="{y_up:.2f}" '
            f'width="{bar:.2f}" height="{y_star - y_up:.2f}"/>'
        )
        parts.append(
            f'<rect class="red" x="{left:.2f}" y="{y_star:.2f}" '
            f'width="{bar:.2f}" height="{y_lo - y_star:.2f}"/>'
        )
        parts.append(
            f'<text class="label" x="{cx:.2f}" y="{spec.height_px - 8}">'
            f"{indicator_string(x, n)}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts)
