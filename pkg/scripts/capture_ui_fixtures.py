#!/usr/bin/env python3
"""Pin real API responses as JSON fixtures for the frontend contract tests.

The frontend asserts against these files, so its tests exercise the exact
wire format the Python service emits. Rerun after any wire-format change,
then review the diff.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from dubois.service import handle_layout, handle_profile  # noqa: E402

FIXTURE_DIR = ROOT / "frontend" / "test" / "fixtures"

ADS = {
    "id": "facebook-ads",
    "categories": [
        {"label": "warren", "value": 43000},
        {"label": "steyer", "value": 16000},
        {"label": "buttigieg", "value": 8500},
        {"label": "sanders", "value": 5500},
        {"label": "biden", "value": 3000},
        {"label": "klobuchar", "value": 1200},
        {"label": "gabbard", "value": 78},
    ],
}

UNIFORM = {
    "id": "uniform",
    "categories": [{"label": f"c{i}", "value": 5} for i in range(6)],
}

SPIKE = {
    "id": "spike",
    "categories": [{"label": f"c{i}", "value": 10} for i in range(6)] + [{"label": "far-out", "value": 25}],
}

WRAP_8500 = {
    "id": "wrap-demo",
    "categories": [{"label": "buttigieg", "value": 8500}, {"label": "gabbard", "value": 500}],
}


def write(name: str, payload: dict) -> None:
    path = FIXTURE_DIR / name
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {path}")


def main() -> None:
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    write("layout_8500_t1_1000.json", handle_layout({"dataset": WRAP_8500, "chart_kind": "wrapped", "t1": 1000}))
    write("profile_ads.json", handle_profile(ADS))
    write("profile_uniform.json", handle_profile(UNIFORM))
    write("profile_spike.json", handle_profile(SPIKE))


if __name__ == "__main__":
    main()
