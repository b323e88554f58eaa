"""Labeled categorical datasets and their file formats.

A dataset is an ordered list of (label, value) categories. Values are
non-negative reals with at least one strictly positive, labels are unique,
and there are at least two categories. Every other module consumes this type.

On disk a dataset is either a CSV with header ``label,value`` (one category
per row, UTF-8) or JSON of the form
``{"id": ..., "categories": [{"label": ..., "value": ...}, ...]}``.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from dataclasses import dataclass


class InvalidDataset(ValueError):
    """Raised when data violates the dataset invariants."""


@dataclass(frozen=True)
class Category:
    label: str
    value: float


@dataclass(frozen=True)
class Dataset:
    id: str
    categories: tuple[Category, ...]

    def __post_init__(self) -> None:
        if len(self.categories) < 2:
            raise InvalidDataset(f"dataset {self.id!r} needs at least 2 categories, got {len(self.categories)}")
        labels = [c.label for c in self.categories]
        if len(set(labels)) != len(labels):
            dupes = sorted({l for l in labels if labels.count(l) > 1})
            raise InvalidDataset(f"dataset {self.id!r} has duplicate labels: {dupes}")
        for c in self.categories:
            if not math.isfinite(c.value) or c.value < 0:
                raise InvalidDataset(f"dataset {self.id!r}: value for {c.label!r} must be finite and >= 0, got {c.value}")
        if not any(c.value > 0 for c in self.categories):
            raise InvalidDataset(f"dataset {self.id!r} has no positive value")

    @property
    def labels(self) -> list[str]:
        return [c.label for c in self.categories]

    @property
    def values(self) -> list[float]:
        return [c.value for c in self.categories]

    def __len__(self) -> int:
        return len(self.categories)

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "categories": [{"label": c.label, "value": c.value} for c in self.categories],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["label", "value"])
        for c in self.categories:
            writer.writerow([c.label, format_value(c.value)])
        return buf.getvalue()


def make_dataset(id: str, pairs: "list[tuple[str, float]]") -> Dataset:
    """Build a Dataset from (label, value) pairs, validating invariants."""
    return Dataset(id=id, categories=tuple(Category(label, float(value)) for label, value in pairs))


def format_value(v: float) -> str:
    """Integers print without a trailing .0 so CSV round-trips stay tidy."""
    return str(int(v)) if float(v).is_integer() else repr(v)


def from_json_dict(obj: dict) -> Dataset:
    if not isinstance(obj, dict) or "categories" not in obj:
        raise InvalidDataset("dataset JSON must be an object with a 'categories' list")
    cats = obj["categories"]
    if not isinstance(cats, list):
        raise InvalidDataset("'categories' must be a list")
    pairs = []
    for i, entry in enumerate(cats):
        if not isinstance(entry, dict) or "label" not in entry or "value" not in entry:
            raise InvalidDataset(f"category {i} must be an object with 'label' and 'value'")
        if not isinstance(entry["value"], (int, float)) or isinstance(entry["value"], bool):
            raise InvalidDataset(f"category {i}: value must be a number")
        pairs.append((str(entry["label"]), float(entry["value"])))
    return make_dataset(str(obj.get("id", "dataset")), pairs)


def loads_json(text: str) -> Dataset:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDataset(f"malformed dataset JSON: {exc}") from exc
    return from_json_dict(obj)


def loads_csv(text: str, id: str = "dataset") -> Dataset:
    """Parse the ``label,value`` CSV format."""
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r and any(cell.strip() for cell in r)]
    if not rows:
        raise InvalidDataset("empty CSV")
    header = [cell.strip().lower() for cell in rows[0]]
    if header[:2] != ["label", "value"]:
        raise InvalidDataset("CSV must start with a 'label,value' header row")
    pairs = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) < 2:
            raise InvalidDataset(f"line {lineno}: expected 'label,value', got {row!r}")
        label = row[0].strip()
        try:
            value = float(row[1])
        except ValueError as exc:
            raise InvalidDataset(f"line {lineno}: value {row[1]!r} is not a number") from exc
        pairs.append((label, value))
    return make_dataset(id, pairs)


def load_path(path: str, id: "str | None" = None) -> Dataset:
    """Load a dataset file, sniffing JSON vs CSV from the content.

    CSV files take their id from the file stem (or the explicit override);
    JSON files keep their embedded id when present.
    """
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    stem = id if id is not None else os.path.splitext(os.path.basename(path))[0]
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidDataset(f"malformed dataset JSON in {path}: {exc}") from exc
        if isinstance(obj, dict) and "id" not in obj:
            obj["id"] = stem
        return from_json_dict(obj)
    return loads_csv(text, id=stem)
