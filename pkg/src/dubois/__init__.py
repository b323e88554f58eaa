"""Wrapped bar charts: layout, SVG rendering, data-shape metrics, simulation, and study analysis."""

from dubois.dataset import Category, Dataset, InvalidDataset, load_path, loads_csv, loads_json, make_dataset
from dubois.layout import ChartConfig, ChartLayout, LayoutOverflow, InvalidThreshold, layout_chart, wrap_decompose
from dubois.metrics import (
    BinConfig,
    DataProfile,
    Recommendation,
    entropy,
    h_spread,
    normalized_entropy,
    profile,
    quartiles,
    recommend,
)
from dubois.svg import Style, render_svg

__all__ = [
    "BinConfig",
    "Category",
    "ChartConfig",
    "ChartLayout",
    "DataProfile",
    "Dataset",
    "InvalidDataset",
    "InvalidThreshold",
    "LayoutOverflow",
    "Recommendation",
    "Style",
    "entropy",
    "h_spread",
    "layout_chart",
    "load_path",
    "loads_csv",
    "loads_json",
    "make_dataset",
    "normalized_entropy",
    "profile",
    "quartiles",
    "recommend",
    "render_svg",
    "wrap_decompose",
]
