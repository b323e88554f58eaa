#!/usr/bin/env python3
"""Regenerate the pinned SVG golden files in tests/golden/.

Run after any intentional change to layout geometry or SVG emission, then
review the diff before committing.
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tests"))

from dubois.layout import layout_chart  # noqa: E402
from dubois.svg import render_svg  # noqa: E402
from golden_cases import golden_cases  # noqa: E402


def main() -> None:
    outdir = ROOT / "tests" / "golden"
    outdir.mkdir(parents=True, exist_ok=True)
    for name, dataset, config, style in golden_cases():
        svg = render_svg(layout_chart(dataset, config), style)
        path = outdir / f"{name}.svg"
        path.write_text(svg, encoding="utf-8")
        print(f"wrote {path} ({len(svg)} bytes)")


if __name__ == "__main__":
    main()
