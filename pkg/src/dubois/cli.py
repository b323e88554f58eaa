"""Command-line entry point: render, metrics, simulate, analyze, serve.

Exit codes: 0 success, 1 invalid input (bad flags, datasets, thresholds),
2 I/O failure. Subcommands with the same flags and seeds write byte-identical
outputs across runs. DUBOIS_SEED serves as a fallback when --seed is omitted.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

from dubois import dataset as ds_mod
from dubois import metrics as metrics_mod
from dubois.layout import (
    ORDER_GIVEN,
    ORDER_SHUFFLED,
    ORDER_SORTED,
    STANDARD,
    WRAPPED,
    ChartConfig,
    InvalidConfig,
    InvalidThreshold,
    LayoutOverflow,
    Margins,
    layout_chart,
)
from dubois.simulate import SimConfig, sample_bins, simulate
from dubois.stats import AnalyzeConfig, analyze, format_report, load_responses_csv
from dubois.svg import Style, render_svg

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2

SEED_ENV_VAR = "DUBOIS_SEED"


class _Parser(argparse.ArgumentParser):
    """argparse flavor whose usage errors exit 1, reserving 2 for I/O."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _resolve_seed(flag_value: "int | None") -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CliError(f"{SEED_ENV_VAR} must be an integer, got {env!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dubois", description="Wrapped bar chart toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    render = sub.add_parser("render", parents=[], help="render a dataset to SVG", prog="dubois render")
    render.add_argument("--input", required=True, help="dataset CSV (label,value) or JSON")
    render.add_argument("--wrapped", action="store_true", help="wrap bars above t1 instead of scaling to the max")
    render.add_argument("--t1", type=float, help="axis maximum and first-wrap threshold (required with --wrapped)")
    render.add_argument("--t2", type=float, default=1.0, help="wrap-length fraction in (0,1] (default 1)")
    render.add_argument("--width", type=float, default=800.0, help="SVG width in px (default 800)")
    render.add_argument("--height", type=float, default=500.0, help="SVG height in px (default 500)")
    order = render.add_mutually_exclusive_group()
    order.add_argument("--sort", action="store_true", help="order bars by descending value")
    order.add_argument("--shuffle", type=int, metavar="SEED", help="shuffle bar order with this seed")
    render.add_argument("--title", help="chart title")
    render.add_argument("--out", help="output path (default: stdout)")

    metrics = sub.add_parser("metrics", help="profile a dataset and print JSON", prog="dubois metrics")
    metrics.add_argument("--input", required=True, help="dataset CSV or JSON")

    simulate_p = sub.add_parser("simulate", help="generate datasets and sample the bin grid", prog="dubois simulate")
    simulate_p.add_argument("--count", type=int, default=10_000, help="number of datasets to draw (default 10000)")
    simulate_p.add_argument("--categories", type=int, default=15, help="categories per dataset (default 15)")
    simulate_p.add_argument("--seed", type=int, help=f"RNG seed (default: ${SEED_ENV_VAR} or 0)")
    simulate_p.add_argument("--outdir", required=True, help="directory for occupancy.csv and sampled datasets")

    analyze_p = sub.add_parser("analyze", help="score an experiment responses file", prog="dubois analyze")
    analyze_p.add_argument("--responses", required=True, help="responses CSV")
    analyze_p.add_argument("--datasets", required=True, help="directory of dataset files referenced by the responses")
    analyze_p.add_argument("--screen-max-errors", type=int, default=None, metavar="N",
                           help="drop participants with more than N identify_max errors")
    analyze_p.add_argument("--exclude-wrong-id", action="store_true",
                           help="drop ratio trials whose max/min identification was wrong")
    analyze_p.add_argument("--resamples", type=int, default=10_000, help="bootstrap resamples (default 10000)")
    analyze_p.add_argument("--seed", type=int, help=f"bootstrap seed (default: ${SEED_ENV_VAR} or 0)")
    analyze_p.add_argument("--paired-variant", choices=["dav", "dz"], default="dav", help="paired Cohen's d flavor")
    analyze_p.add_argument("--out", help="write the JSON report here ('-' for stdout) instead of a table")

    serve = sub.add_parser("serve", help="serve the layout/profile/simulate HTTP API", prog="dubois serve")
    serve.add_argument("--port", type=int, default=8787, help="TCP port (default 8787)")
    serve.add_argument("--host", default="127.0.0.1", help="bind address (default 127.0.0.1)")
    serve.add_argument("--static-dir", help="also serve this directory (the web UI bundle) at /")

    return parser


def _load_dataset(path: str):
    try:
        return ds_mod.load_path(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO)


def _write_text(path: "str | None", text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO)


def _cmd_render(args) -> int:
    if args.wrapped and args.t1 is None:
        raise CliError("--t1 is required with --wrapped")
    d = _load_dataset(args.input)
    margins = Margins()
    plot_w = args.width - margins.left - margins.right
    plot_h = args.height - margins.top - margins.bottom
    if plot_w <= 0 or plot_h <= 0:
        raise CliError(f"--width/--height leave no room for the plot after margins ({plot_w:g}x{plot_h:g})")
    if args.sort:
        bar_order, shuffle_seed = ORDER_SORTED, 0
    elif args.shuffle is not None:
        bar_order, shuffle_seed = ORDER_SHUFFLED, args.shuffle
    else:
        bar_order, shuffle_seed = ORDER_GIVEN, 0
    cfg = ChartConfig(
        chart_kind=WRAPPED if args.wrapped else STANDARD,
        t1=args.t1,
        t2=args.t2,
        plot_width_px=plot_w,
        plot_height_px=plot_h,
        margins=margins,
        bar_order=bar_order,
        shuffle_seed=shuffle_seed,
    )
    svg = render_svg(layout_chart(d, cfg), Style(title=args.title))

    p = metrics_mod.profile(d)
    rec = metrics_mod.recommend(d)
    hs = "inf" if math.isinf(p.h_spread) else f"{p.h_spread:.3f}"
    print(
        f"profile: normalized_entropy={p.normalized_entropy:.4f} h_spread={hs} "
        f"bins=({p.entropy_bin}, {p.hspread_bin})",
        file=sys.stderr,
    )
    reasons = f" ({', '.join(rec.reasons)})" if rec.reasons else ""
    print(f"recommendation: {'wrapped' if rec.use_wrapped else 'standard'}{reasons}", file=sys.stderr)

    _write_text(args.out, svg)
    return EXIT_OK


def _cmd_metrics(args) -> int:
    d = _load_dataset(args.input)
    payload = {
        "id": d.id,
        "profile": metrics_mod.profile(d).to_json_dict(),
        "recommendation": metrics_mod.recommend(d).to_json_dict(),
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def _cmd_simulate(args) -> int:
    seed = _resolve_seed(args.seed)
    cfg = SimConfig(dataset_count=args.count, categories_per_dataset=args.categories, seed=seed)
    grid = simulate(cfg)
    samples = sample_bins(grid, seed=seed)

    try:
        os.makedirs(args.outdir, exist_ok=True)
        occupancy_path = os.path.join(args.outdir, "occupancy.csv")
        with open(occupancy_path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["entropy_bin", "hspread_bin", "count"])
            writer.writerows(grid.occupancy_rows())
        for (ebin, hbin), sampled in samples:
            path = os.path.join(args.outdir, f"sim_{ebin}_{hbin}.csv")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(sampled.to_csv())
    except OSError as exc:
        raise CliError(f"cannot write into {args.outdir}: {exc}", EXIT_IO)

    print(grid.format_occupancy(), file=sys.stderr)
    print(f"{len(samples)} of 16 cells occupied; sampled datasets written to {args.outdir}", file=sys.stderr)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    try:
        responses = load_responses_csv(args.responses)
    except OSError as exc:
        raise CliError(f"cannot read {args.responses}: {exc}", EXIT_IO)
    except ValueError as exc:
        raise CliError(f"bad responses file: {exc}")

    try:
        names = sorted(os.listdir(args.datasets))
    except OSError as exc:
        raise CliError(f"cannot read dataset directory {args.datasets}: {exc}", EXIT_IO)
    datasets = []
    for name in names:
        if name.endswith((".csv", ".json")):
            datasets.append(_load_dataset(os.path.join(args.datasets, name)))
    if not datasets:
        raise CliError(f"no .csv or .json datasets found in {args.datasets}")

    cfg = AnalyzeConfig(
        resamples=args.resamples,
        seed=_resolve_seed(args.seed),
        paired_variant=args.paired_variant,
        screen_max_errors=args.screen_max_errors,
        exclude_wrong_id=args.exclude_wrong_id,
    )
    try:
        report = analyze(responses, datasets, cfg)
    except KeyError as exc:
        raise CliError(str(exc))

    if args.out:
        _write_text(args.out, json.dumps(report.to_json_dict(), indent=2) + "\n")
    else:
        print(format_report(report))
    return EXIT_OK


def _cmd_serve(args) -> int:
    if not 1 <= args.port <= 65535:
        raise CliError(f"--port must be in [1, 65535], got {args.port}")
    if args.static_dir and not os.path.isdir(args.static_dir):
        raise CliError(f"--static-dir {args.static_dir} is not a directory")
    from dubois.service import run_server

    run_server(host=args.host, port=args.port, static_dir=args.static_dir)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "render": _cmd_render,
        "metrics": _cmd_metrics,
        "simulate": _cmd_simulate,
        "analyze": _cmd_analyze,
        "serve": _cmd_serve,
    }[args.command]
    try:
        return handler(args)
    except CliError as exc:
        print(f"dubois {args.command}: {exc}", file=sys.stderr)
        return exc.code
    except (ds_mod.InvalidDataset, InvalidThreshold, InvalidConfig, LayoutOverflow, ValueError) as exc:
        print(f"dubois {args.command}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"dubois {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
