"""The pinned render corpus: six (name, dataset, config, style) cases.

scripts/regen_golden_svgs.py rewrites tests/golden/*.svg from these;
test_svg.py asserts byte equality against the checked-in files.
"""

from __future__ import annotations

from dubois.dataset import make_dataset
from dubois.layout import ORDER_SHUFFLED, ORDER_SORTED, STANDARD, WRAPPED, ChartConfig, Margins
from dubois.svg import Style

ADS = make_dataset(
    "ads",
    [
        ("warren", 43000),
        ("steyer", 16000),
        ("buttigieg", 8500),
        ("sanders", 5500),
        ("biden", 3000),
        ("klobuchar", 1200),
        ("gabbard", 78),
    ],
)

RESIGNATIONS = make_dataset(
    "resignations",
    [("1970s", 122), ("1980s", 34), ("1990s", 17), ("2000s", 12), ("2010s", 1)],
)


def golden_cases():
    return [
        (
            "standard_two_bars",
            make_dataset("two", [("tall", 10), ("short", 5)]),
            ChartConfig(chart_kind=STANDARD, plot_width_px=400, plot_height_px=300, tick_count=3),
            Style(),
        ),
        (
            "wrapped_8500_t1_1000",
            make_dataset("ads-slice", [("buttigieg", 8500), ("gabbard", 500)]),
            ChartConfig(chart_kind=WRAPPED, t1=1000, t2=1.0, plot_width_px=710, plot_height_px=400),
            Style(title="Wrapped at 1,000"),
        ),
        (
            "wrapped_half_length",
            RESIGNATIONS,
            ChartConfig(chart_kind=WRAPPED, t1=40, t2=0.5, plot_width_px=710, plot_height_px=400),
            Style(),
        ),
        (
            "standard_sorted_no_grid",
            ADS,
            ChartConfig(chart_kind=STANDARD, bar_order=ORDER_SORTED, plot_width_px=710, plot_height_px=400),
            Style(show_gridlines=False, title="Sorted, no grid"),
        ),
        (
            "wrapped_exact_multiples",
            make_dataset("exact", [("threex", 3000), ("onex", 1000), ("halfx", 500)]),
            ChartConfig(chart_kind=WRAPPED, t1=1000, plot_width_px=500, plot_height_px=350, margins=Margins(10, 10, 30, 50)),
            Style(),
        ),
        (
            "wrapped_shuffled_custom_style",
            make_dataset("fifteen", [(f"c{i:02d}", v) for i, v in enumerate([1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987])]),
            ChartConfig(chart_kind=WRAPPED, t1=200, bar_order=ORDER_SHUFFLED, shuffle_seed=7, plot_width_px=1200, plot_height_px=500),
            Style(bar_fill="#1F4E5F", background_fill="#FFFFFF", grid_color="#CCCCCC", show_gridlines=True),
        ),
    ]
