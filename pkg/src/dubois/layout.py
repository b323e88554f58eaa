"""Chart geometry for standard and wrapped bar charts.

A wrapped chart caps the value axis at a threshold t1 and folds any larger
bar into a serpentine of vertical sub-bars: full segments each worth one
wrap unit (t1 * t2), then a tail worth the remainder. Segments alternate
direction, the first rising from the baseline, and consecutive segments are
joined by horizontal connectors that carry no value. The layout keeps the
defining contract of the technique: a bar's value is the sum of its vertical
segments only, so value maps linearly to total pixel height.

Everything here is pure geometry in pixel coordinates (y grows downward);
rendering backends consume the resulting ChartLayout.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from dubois.dataset import Dataset

STANDARD = "standard"
WRAPPED = "wrapped"

ORDER_GIVEN = "given"
ORDER_SORTED = "sorted"
ORDER_SHUFFLED = "shuffled"

UP = "up"
DOWN = "down"


class InvalidThreshold(ValueError):
    """Raised for t1 <= 0 or t2 outside (0, 1]."""


class LayoutOverflow(ValueError):
    """Raised when bars would be thinner than 1 px; a misleading chart is worse than none."""


class InvalidConfig(ValueError):
    """Raised for non-positive plot dimensions and similar config mistakes."""


@dataclass(frozen=True)
class Margins:
    top: float = 40.0
    right: float = 20.0
    bottom: float = 60.0
    left: float = 70.0

    def __post_init__(self) -> None:
        if min(self.top, self.right, self.bottom, self.left) < 0:
            raise InvalidConfig("margins must be non-negative")


@dataclass(frozen=True)
class ChartConfig:
    chart_kind: str = STANDARD
    t1: "float | None" = None  # axis max and first-wrap threshold, value units
    t2: float = 1.0  # wrap-length fraction of the axis
    plot_width_px: float = 710.0
    plot_height_px: float = 400.0
    margins: Margins = field(default_factory=Margins)
    tick_count: int = 5
    bar_order: str = ORDER_GIVEN
    shuffle_seed: int = 0

    def __post_init__(self) -> None:
        if self.chart_kind not in (STANDARD, WRAPPED):
            raise InvalidConfig(f"unknown chart_kind {self.chart_kind!r}")
        if self.bar_order not in (ORDER_GIVEN, ORDER_SORTED, ORDER_SHUFFLED):
            raise InvalidConfig(f"unknown bar_order {self.bar_order!r}")
        if self.plot_width_px <= 0 or self.plot_height_px <= 0:
            raise InvalidConfig("plot dimensions must be positive")
        if self.tick_count < 2:
            raise InvalidConfig("tick_count must be at least 2")
        if self.chart_kind == WRAPPED:
            if self.t1 is None or self.t1 <= 0:
                raise InvalidThreshold(f"wrapped charts need t1 > 0, got {self.t1}")
            if not 0 < self.t2 <= 1:
                raise InvalidThreshold(f"t2 must be in (0, 1], got {self.t2}")


@dataclass(frozen=True)
class WrapDecomposition:
    full_segments: int
    tail_value: float
    wrap_unit: float

    @property
    def sub_bar_count(self) -> int:
        """Columns this bar occupies; a zero value still occupies one."""
        count = self.full_segments + (1 if self.tail_value > 0 else 0)
        return max(count, 1)


def wrap_decompose(value: float, t1: float, t2: float = 1.0) -> WrapDecomposition:
    """Split a value into full wraps of t1*t2 plus a tail remainder.

    Exact multiples of the wrap unit come back with a zero tail rather than a
    degenerate extra segment: (3000, 1000, 1) is 3 full wraps, tail 0.
    """
    if t1 is None or t1 <= 0:
        raise InvalidThreshold(f"t1 must be positive, got {t1}")
    if not 0 < t2 <= 1:
        raise InvalidThreshold(f"t2 must be in (0, 1], got {t2}")
    if value < 0:
        raise ValueError(f"value must be non-negative, got {value}")
    w = t1 * t2
    f = int(math.floor(value / w))
    r = value - f * w
    if r < 0:
        # value/w rounded up across an integer; claim the exact multiple
        r = 0.0
    elif r >= w:
        f += 1
        r = 0.0
    return WrapDecomposition(full_segments=f, tail_value=r, wrap_unit=w)


@dataclass(frozen=True)
class Segment:
    x_px: float
    y_px: float
    width_px: float
    height_px: float
    value_units: float
    direction: str


@dataclass(frozen=True)
class Connector:
    x_px: float
    y_px: float
    width_px: float
    height_px: float


@dataclass(frozen=True)
class Tick:
    value_units: float
    y_px: float
    label: str


@dataclass(frozen=True)
class LabelAnchor:
    x_px: float
    y_px: float


@dataclass(frozen=True)
class CategoryLayout:
    label: str
    value: float
    full_segments: int
    tail_value: float
    segments: tuple[Segment, ...]
    connectors: tuple[Connector, ...]
    label_anchor: LabelAnchor


@dataclass(frozen=True)
class PlotBox:
    x_px: float
    y_px: float
    width_px: float
    height_px: float

    @property
    def bottom(self) -> float:
        return self.y_px + self.height_px

    @property
    def right(self) -> float:
        return self.x_px + self.width_px


@dataclass(frozen=True)
class ChartLayout:
    chart_kind: str
    axis_max: float
    wrap_unit: "float | None"
    bar_width_px: float
    plot_box: PlotBox
    width_px: float
    height_px: float
    categories: tuple[CategoryLayout, ...]
    ticks: tuple[Tick, ...]

    def to_json_dict(self) -> dict:
        """Wire format for the HTTP service and web UI (flat rect lists)."""
        segments = []
        connectors = []
        labels = []
        for cat in self.categories:
            for i, s in enumerate(cat.segments):
                segments.append(
                    {
                        "category": cat.label,
                        "index": i,
                        "x_px": s.x_px,
                        "y_px": s.y_px,
                        "width_px": s.width_px,
                        "height_px": s.height_px,
                        "value_units": s.value_units,
                        "direction": s.direction,
                    }
                )
            for i, c in enumerate(cat.connectors):
                connectors.append(
                    {
                        "category": cat.label,
                        "index": i,
                        "x_px": c.x_px,
                        "y_px": c.y_px,
                        "width_px": c.width_px,
                        "height_px": c.height_px,
                    }
                )
            labels.append(
                {
                    "category": cat.label,
                    "value": cat.value,
                    "full_segments": cat.full_segments,
                    "tail_value": cat.tail_value,
                    "x_px": cat.label_anchor.x_px,
                    "y_px": cat.label_anchor.y_px,
                }
            )
        return {
            "chart_kind": self.chart_kind,
            "axis_max": self.axis_max,
            "wrap_unit": self.wrap_unit,
            "bar_width_px": self.bar_width_px,
            "size": {"width_px": self.width_px, "height_px": self.height_px},
            "plot_box": {
                "x_px": self.plot_box.x_px,
                "y_px": self.plot_box.y_px,
                "width_px": self.plot_box.width_px,
                "height_px": self.plot_box.height_px,
            },
            "segments": segments,
            "connectors": connectors,
            "ticks": [{"value_units": t.value_units, "y_px": t.y_px, "label": t.label} for t in self.ticks],
            "labels": labels,
        }


def format_tick_label(value: float) -> str:
    """Thousands-separated, up to 2 decimals, no trailing zeros."""
    text = f"{value:,.2f}"
    return text.rstrip("0").rstrip(".") if "." in text else text


def axis_ticks(axis_max: float, tick_count: int, plot_height_px: float = 1.0, plot_bottom_px: float = 1.0) -> list[Tick]:
    """Evenly spaced ticks from 0 to axis_max inclusive, mapped onto the plot."""
    if axis_max <= 0:
        raise InvalidConfig(f"axis_max must be positive, got {axis_max}")
    if tick_count < 2:
        raise InvalidConfig("tick_count must be at least 2")
    ticks = []
    for i in range(tick_count):
        v = axis_max * i / (tick_count - 1)
        y = plot_bottom_px - (v / axis_max) * plot_height_px
        ticks.append(Tick(value_units=v, y_px=y, label=format_tick_label(v)))
    return ticks


def _ordered_categories(d: Dataset, cfg: ChartConfig):
    cats = list(d.categories)
    if cfg.bar_order == ORDER_SORTED:
        cats.sort(key=lambda c: -c.value)
    elif cfg.bar_order == ORDER_SHUFFLED:
        random.Random(cfg.shuffle_seed).shuffle(cats)
    return cats


def layout_chart(d: Dataset, cfg: ChartConfig) -> ChartLayout:
    """Compute the full geometry of a chart.

    Bar width comes from the space equation
    ``plot_width = S*b + (n-1)*b + (S-n)*(b/2)`` where S counts sub-bar
    columns over all n categories: category gaps are one bar width, intra-bar
    gaps half of one.
    """
    cats = _ordered_categories(d, cfg)
    n = len(cats)

    if cfg.chart_kind == WRAPPED:
        axis_max = float(cfg.t1)
        wrap_unit = cfg.t1 * cfg.t2
        decomps = [wrap_decompose(c.value, cfg.t1, cfg.t2) for c in cats]
    else:
        axis_max = max(c.value for c in cats)
        wrap_unit = None
        decomps = [WrapDecomposition(full_segments=0, tail_value=c.value, wrap_unit=axis_max) for c in cats]

    sub_counts = [dec.sub_bar_count for dec in decomps]
    total_columns = sum(sub_counts)
    intra_gaps = total_columns - n
    bar_width = cfg.plot_width_px / (total_columns + (n - 1) + intra_gaps / 2)
    if bar_width < 1.0:
        raise LayoutOverflow(
            f"{total_columns} sub-bars across {n} categories leave bar width "
            f"{bar_width:.3f} px in a {cfg.plot_width_px:g} px plot; raise t1, shrink the data, or widen the plot"
        )
    if cfg.chart_kind == WRAPPED and intra_gaps > 0:
        wrap_span_px = (cfg.t1 * cfg.t2) * cfg.plot_height_px / cfg.t1
        if bar_width > wrap_span_px:
            raise LayoutOverflow(
                f"connectors ({bar_width:.1f} px thick) would not fit inside the "
                f"{wrap_span_px:.1f} px wrap span; make the plot taller or narrower"
            )

    box = PlotBox(
        x_px=cfg.margins.left,
        y_px=cfg.margins.top,
        width_px=cfg.plot_width_px,
        height_px=cfg.plot_height_px,
    )
    scale = box.height_px / axis_max  # px per value unit
    wrap_line_y = box.bottom - (wrap_unit * scale if wrap_unit is not None else box.height_px)

    categories = []
    x = box.x_px
    for cat, dec, columns in zip(cats, decomps, sub_counts):
        left_edge = x
        segments = []
        connectors = []
        for k in range(columns):
            is_tail = k >= dec.full_segments
            seg_value = dec.tail_value if is_tail else dec.wrap_unit
            height = seg_value * scale
            direction = UP if k % 2 == 0 else DOWN
            y = box.bottom - height if direction == UP else wrap_line_y
            segments.append(
                Segment(x_px=x, y_px=y, width_px=bar_width, height_px=height, value_units=seg_value, direction=direction)
            )
            if k < columns - 1:
                # joint after an up segment sits at the wrap line, after a down segment at the baseline
                cy = wrap_line_y if direction == UP else box.bottom - bar_width
                connectors.append(Connector(x_px=x + bar_width, y_px=cy, width_px=bar_width / 2, height_px=bar_width))
                x += bar_width + bar_width / 2
            else:
                x += bar_width
        categories.append(
            CategoryLayout(
                label=cat.label,
                value=cat.value,
                full_segments=dec.full_segments if cfg.chart_kind == WRAPPED else 0,
                tail_value=dec.tail_value,
                segments=tuple(segments),
                connectors=tuple(connectors),
                label_anchor=LabelAnchor(x_px=(left_edge + x) / 2, y_px=box.bottom + min(16.0, cfg.margins.bottom)),
            )
        )
        x += bar_width  # inter-category gap; harmlessly overshoots after the last category

    ticks = axis_ticks(axis_max, cfg.tick_count, plot_height_px=box.height_px, plot_bottom_px=box.bottom)

    return ChartLayout(
        chart_kind=cfg.chart_kind,
        axis_max=axis_max,
        wrap_unit=wrap_unit,
        bar_width_px=bar_width,
        plot_box=box,
        width_px=box.width_px + cfg.margins.left + cfg.margins.right,
        height_px=box.height_px + cfg.margins.top + cfg.margins.bottom,
        categories=tuple(categories),
        ticks=tuple(ticks),
    )
