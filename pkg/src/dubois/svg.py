"""Deterministic SVG 1.1 emission for chart layouts.

Output is a pure function of (layout, style): stable element order, fixed
2-decimal coordinates, no ids or timestamps, so renders are byte-identical
across runs and platforms and safe to pin as golden files.

The default palette leans on the hand-drawn charts this technique revives:
deep crimson bars on aged cream paper.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from xml.sax.saxutils import escape

from dubois.layout import ChartLayout

_HEX_COLOR = re.compile(r"^#[0-9a-fA-F]{6}$")


@dataclass(frozen=True)
class Style:
    bar_fill: str = "#AD2E24"
    background_fill: str = "#E9DFCE"
    grid_color: str = "#B8AE9C"
    text_color: str = "#3A3226"
    font_family: str = "Georgia, serif"
    font_size_px: float = 12.0
    show_gridlines: bool = True
    title: "str | None" = None

    def __post_init__(self) -> None:
        for name in ("bar_fill", "background_fill", "grid_color", "text_color"):
            value = getattr(self, name)
            if not _HEX_COLOR.match(value):
                raise ValueError(f"{name} must be a 6-digit hex color, got {value!r}")


DEFAULT_STYLE = Style()


def _f(x: float) -> str:
    """Fixed 2-decimal coordinate formatting; -0.00 normalizes to 0.00."""
    text = f"{x:.2f}"
    return "0.00" if text == "-0.00" else text


def render_svg(layout: ChartLayout, style: Style = DEFAULT_STYLE) -> str:
    """Serialize a ChartLayout to a standalone SVG document string."""
    w, h = _f(layout.width_px), _f(layout.height_px)
    box = layout.plot_box
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect class="background" x="0.00" y="0.00" width="{w}" height="{h}" fill="{style.background_fill}"/>',
    ]

    if style.show_gridlines:
        for tick in layout.ticks:
            out.append(
                f'<line class="grid" x1="{_f(box.x_px)}" y1="{_f(tick.y_px)}" '
                f'x2="{_f(box.right)}" y2="{_f(tick.y_px)}" stroke="{style.grid_color}" stroke-width="1"/>'
            )

    for cat in layout.categories:
        for seg in cat.segments:
            out.append(
                f'<rect class="seg" x="{_f(seg.x_px)}" y="{_f(seg.y_px)}" '
                f'width="{_f(seg.width_px)}" height="{_f(seg.height_px)}" fill="{style.bar_fill}"/>'
            )
        for conn in cat.connectors:
            out.append(
                f'<rect class="conn" x="{_f(conn.x_px)}" y="{_f(conn.y_px)}" '
                f'width="{_f(conn.width_px)}" height="{_f(conn.height_px)}" fill="{style.bar_fill}"/>'
            )

    font = f'font-family="{escape(style.font_family, {chr(34): "&quot;"})}" font-size="{_f(style.font_size_px)}" fill="{style.text_color}"'
    for tick in layout.ticks:
        out.append(
            f'<text class="tick" x="{_f(box.x_px - 6)}" y="{_f(tick.y_px + style.font_size_px / 3)}" '
            f'text-anchor="end" {font}>{escape(tick.label)}</text>'
        )
    for cat in layout.categories:
        out.append(
            f'<text class="label" x="{_f(cat.label_anchor.x_px)}" y="{_f(cat.label_anchor.y_px)}" '
            f'text-anchor="middle" {font}>{escape(cat.label)}</text>'
        )

    if style.title:
        out.append(
            f'<text class="title" x="{_f(layout.width_px / 2)}" y="{_f(max(box.y_px - 12, style.font_size_px))}" '
            f'text-anchor="middle" {font}>{escape(style.title)}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"
