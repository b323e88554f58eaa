"""Stateless JSON-over-HTTP API for layout, profiling, and simulation.

Three POST endpoints back the interactive threshold-exploration UI:

* ``/api/layout``          chart config + inline dataset -> ChartLayout JSON
* ``/api/profile``         dataset -> DataProfile + Recommendation JSON
* ``/api/simulate-sample`` {count, categories, seed} -> occupancy + samples

Every handler is a pure function of the request body, so responses are
byte-identical for identical requests and the server needs no sessions,
persistence, or locks. Errors come back as 400s with machine-readable
``{"code": ..., "message": ...}`` bodies. CORS is wide open so a UI served
from anywhere (or from --static-dir on this same server) can call in.
"""

from __future__ import annotations

import json
import mimetypes
import os
import posixpath
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from dubois.dataset import InvalidDataset, from_json_dict
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
from dubois.metrics import profile, recommend
from dubois.simulate import SimConfig, sample_bins, simulate

SIMULATE_COUNT_CAP = 100_000


class ServiceError(Exception):
    def __init__(self, code: str, message: str, status: int = 400):
        super().__init__(message)
        self.code = code
        self.message = message
        self.status = status


def _require_number(body: dict, key: str, default=None):
    value = body.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ServiceError("invalid_request", f"{key} must be a number")
    return value


def _parse_margins(obj) -> Margins:
    if obj is None:
        return Margins()
    if not isinstance(obj, dict):
        raise ServiceError("invalid_request", "margins must be an object with top/right/bottom/left")
    try:
        return Margins(
            top=float(obj.get("top", 40.0)),
            right=float(obj.get("right", 20.0)),
            bottom=float(obj.get("bottom", 60.0)),
            left=float(obj.get("left", 70.0)),
        )
    except (TypeError, ValueError, InvalidConfig) as exc:
        raise ServiceError("invalid_config", f"bad margins: {exc}")


def handle_layout(body: dict) -> dict:
    if not isinstance(body, dict):
        raise ServiceError("invalid_request", "request body must be a JSON object")
    try:
        dataset = from_json_dict(body.get("dataset"))
    except InvalidDataset as exc:
        raise ServiceError("invalid_dataset", str(exc))

    chart_kind = body.get("chart_kind", STANDARD)
    if chart_kind not in (STANDARD, WRAPPED):
        raise ServiceError("invalid_request", f"chart_kind must be standard or wrapped, got {chart_kind!r}")
    bar_order = body.get("bar_order", ORDER_GIVEN)
    if bar_order not in (ORDER_GIVEN, ORDER_SORTED, ORDER_SHUFFLED):
        raise ServiceError("invalid_request", f"unknown bar_order {bar_order!r}")

    try:
        cfg = ChartConfig(
            chart_kind=chart_kind,
            t1=_require_number(body, "t1"),
            t2=_require_number(body, "t2", 1.0),
            plot_width_px=_require_number(body, "plot_width_px", 710.0),
            plot_height_px=_require_number(body, "plot_height_px", 400.0),
            margins=_parse_margins(body.get("margins")),
            tick_count=int(_require_number(body, "tick_count", 5)),
            bar_order=bar_order,
            shuffle_seed=int(_require_number(body, "shuffle_seed", 0)),
        )
        layout = layout_chart(dataset, cfg)
    except InvalidThreshold as exc:
        raise ServiceError("invalid_threshold", str(exc))
    except LayoutOverflow as exc:
        raise ServiceError("layout_overflow", str(exc))
    except InvalidConfig as exc:
        raise ServiceError("invalid_config", str(exc))
    return layout.to_json_dict()


def handle_profile(body: dict) -> dict:
    try:
        dataset = from_json_dict(body)
    except InvalidDataset as exc:
        raise ServiceError("invalid_dataset", str(exc))
    return {
        "id": dataset.id,
        "profile": profile(dataset).to_json_dict(),
        "recommendation": recommend(dataset).to_json_dict(),
    }


def handle_simulate_sample(body: dict) -> dict:
    if not isinstance(body, dict):
        raise ServiceError("invalid_request", "request body must be a JSON object")
    count = int(_require_number(body, "count", 10_000))
    categories = int(_require_number(body, "categories", 15))
    seed = int(_require_number(body, "seed", 0))
    if count > SIMULATE_COUNT_CAP:
        raise ServiceError("invalid_request", f"count {count} exceeds the cap of {SIMULATE_COUNT_CAP}")
    try:
        cfg = SimConfig(dataset_count=count, categories_per_dataset=categories, seed=seed)
    except ValueError as exc:
        raise ServiceError("invalid_request", str(exc))
    grid = simulate(cfg)
    samples = sample_bins(grid, seed=seed)
    return {
        "count": count,
        "seed": seed,
        "occupancy": [
            {"entropy_bin": eb, "hspread_bin": hb, "count": n} for eb, hb, n in grid.occupancy_rows()
        ],
        "occupied_cells": len(grid.occupied_cells()),
        "out_of_range": len(grid.out_of_range),
        "samples": [
            {"entropy_bin": eb, "hspread_bin": hb, "dataset": d.to_json_dict()} for (eb, hb), d in samples
        ],
    }


ROUTES = {
    "/api/layout": handle_layout,
    "/api/profile": handle_profile,
    "/api/simulate-sample": handle_simulate_sample,
}


class ApiHandler(BaseHTTPRequestHandler):
    server_version = "dubois/0.1"
    static_dir: "str | None" = None

    def log_message(self, fmt, *args):  # quiet by default; tests and CLIs stay clean
        pass

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self._send_cors()
        self.end_headers()
        self.wfile.write(body)

    def _send_cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def do_OPTIONS(self):
        self.send_response(204)
        self._send_cors()
        self.end_headers()

    def do_POST(self):
        handler = ROUTES.get(self.path)
        if handler is None:
            self._send_json(404, {"code": "not_found", "message": f"no endpoint {self.path}"})
            return
        try:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length)
            try:
                body = json.loads(raw.decode("utf-8")) if raw else None
            except (json.JSONDecodeError, UnicodeDecodeError) as exc:
                raise ServiceError("invalid_json", f"request body is not valid JSON: {exc}")
            if body is None:
                raise ServiceError("invalid_json", "request body is empty")
            self._send_json(200, handler(body))
        except ServiceError as exc:
            self._send_json(exc.status, {"code": exc.code, "message": exc.message})
        except Exception as exc:  # pragma: no cover - last-resort guard
            self._send_json(500, {"code": "internal_error", "message": str(exc)})

    def do_GET(self):
        if self.path in ROUTES:
            self._send_json(405, {"code": "method_not_allowed", "message": "use POST"})
            return
        if self.static_dir is None:
            self._send_json(404, {"code": "not_found", "message": "no static files configured"})
            return
        self._serve_static()

    def _serve_static(self):
        rel = posixpath.normpath(self.path.split("?", 1)[0]).lstrip("/")
        if rel in ("", "."):
            rel = "index.html"
        root = os.path.realpath(self.static_dir)
        full = os.path.realpath(os.path.join(root, rel))
        if not full.startswith(root + os.sep) and full != root:
            self._send_json(404, {"code": "not_found", "message": "outside static root"})
            return
        if not os.path.isfile(full):
            self._send_json(404, {"code": "not_found", "message": f"no such file {rel}"})
            return
        ctype = mimetypes.guess_type(full)[0] or "application/octet-stream"
        with open(full, "rb") as fh:
            data = fh.read()
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(data)))
        self._send_cors()
        self.end_headers()
        self.wfile.write(data)


def make_server(host: str = "127.0.0.1", port: int = 0, static_dir: "str | None" = None) -> ThreadingHTTPServer:
    handler = type("BoundApiHandler", (ApiHandler,), {"static_dir": static_dir})
    return ThreadingHTTPServer((host, port), handler)


def start_background(host: str = "127.0.0.1", port: int = 0, static_dir: "str | None" = None):
    """Start a daemon-thread server (tests, embedding); returns the server."""
    server = make_server(host, port, static_dir)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server


def run_server(host: str, port: int, static_dir: "str | None" = None) -> None:
    """Blocking serve loop for the CLI."""
    server = make_server(host, port, static_dir)
    print(f"serving on http://{host}:{server.server_address[1]}/ (Ctrl-C to stop)", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
