"""Scoring and estimation for chart-perception experiment responses.

Responses are one record per participant x dataset x chart x task.
Identification tasks score as percent correct; ratio-estimation tasks score
as log2(|estimate - truth| + 1/8). Analysis follows the estimation approach:
average each participant first within a condition, then bootstrap percentile
CIs over participant means, and report every effect as wrapped minus
standard alongside Cohen's d. No p-values on purpose.
"""

from __future__ import annotations

import csv
import io
import math
import zlib
from dataclasses import dataclass, field

import numpy as np

from dubois.dataset import Dataset
from dubois.metrics import BinConfig, DataProfile, EmptyInput, profile

CHART_STANDARD = "standard"
CHART_WRAPPED = "wrapped"

IDENTIFY_MAX = "identify_max"
IDENTIFY_MIN = "identify_min"
IDENTIFY_2ND_MAX = "identify_2nd_max"
IDENTIFY_2ND_MIN = "identify_2nd_min"
RATIO_MAX_MIN = "ratio_max_min"
RATIO_2NDMIN_MIN = "ratio_2ndmin_min"

IDENTIFICATION_TASKS = (IDENTIFY_MAX, IDENTIFY_MIN, IDENTIFY_2ND_MAX, IDENTIFY_2ND_MIN)
RATIO_TASKS = (RATIO_MAX_MIN, RATIO_2NDMIN_MIN)
ALL_TASKS = IDENTIFICATION_TASKS + RATIO_TASKS

LOG_ERROR_OFFSET = 0.125  # keeps a perfect estimate finite at log2(1/8) = -3

ACCURACY = "accuracy_pct"
LOG_ERROR = "log_abs_error"
ELAPSED = "elapsed_ms"

DAV = "dav"
DZ = "dz"


class AmbiguousTruth(ValueError):
    """The relevant extreme is tied, so no single bar is the right answer."""


class DivisionByZero(ValueError):
    """Ratio truth undefined because the smallest value is 0."""


class TaskMismatch(ValueError):
    """A response's task does not fit the requested computation."""


class ZeroVariance(ValueError):
    """Effect size undefined: the relevant standard deviation is 0."""


class LengthMismatch(ValueError):
    """Paired vectors must be the same length."""


@dataclass(frozen=True)
class TrialResponse:
    participant_id: str
    dataset_id: str
    chart_type: str
    task: str
    response_label: "str | None" = None
    response_value: "float | None" = None
    elapsed_ms: int = 0

    def __post_init__(self) -> None:
        if self.chart_type not in (CHART_STANDARD, CHART_WRAPPED):
            raise ValueError(f"chart_type must be standard or wrapped, got {self.chart_type!r}")
        if self.task not in ALL_TASKS:
            raise ValueError(f"unknown task {self.task!r}")
        if self.elapsed_ms < 0:
            raise ValueError("elapsed_ms must be non-negative")
        if self.task in IDENTIFICATION_TASKS:
            if self.response_label is None or self.response_value is not None:
                raise ValueError(f"{self.task} responses carry response_label only")
        else:
            if self.response_value is None or self.response_label is not None:
                raise ValueError(f"{self.task} responses carry response_value only")


def task_truth(d: Dataset, task: str):
    """Correct answer for a task on a dataset: a label for identification
    tasks, a ratio for estimation tasks.

    Identification truths require the relevant rank to be untied. Ratio
    truths tolerate ties (the quotient is unaffected by which tied bar you
    pick) but refuse a zero denominator.
    """
    values = d.values
    labels = d.labels
    by_value = sorted(zip(values, labels))
    if task == IDENTIFY_MAX:
        return _rank_label(by_value, len(values) - 1, d)
    if task == IDENTIFY_MIN:
        return _rank_label(by_value, 0, d)
    if task == IDENTIFY_2ND_MAX:
        return _rank_label(by_value, len(values) - 2, d)
    if task == IDENTIFY_2ND_MIN:
        return _rank_label(by_value, 1, d)
    if task == RATIO_MAX_MIN:
        lo, hi = min(values), max(values)
        if lo == 0:
            raise DivisionByZero(f"dataset {d.id!r}: smallest value is 0")
        return hi / lo
    if task == RATIO_2NDMIN_MIN:
        ordered = sorted(values)
        if ordered[0] == 0:
            raise DivisionByZero(f"dataset {d.id!r}: smallest value is 0")
        return ordered[1] / ordered[0]
    raise TaskMismatch(f"unknown task {task!r}")


def _rank_label(by_value, rank: int, d: Dataset) -> str:
    if rank < 0 or rank >= len(by_value):
        raise AmbiguousTruth(f"dataset {d.id!r} too small for rank {rank}")
    value, label = by_value[rank]
    if rank > 0 and by_value[rank - 1][0] == value:
        raise AmbiguousTruth(f"dataset {d.id!r}: value {value:g} is tied")
    if rank < len(by_value) - 1 and by_value[rank + 1][0] == value:
        raise AmbiguousTruth(f"dataset {d.id!r}: value {value:g} is tied")
    return label


def identification_accuracy(responses, truths) -> float:
    """Fraction of identification responses matching their truth labels.

    `truths` maps (dataset_id, task) to the correct label.
    """
    responses = list(responses)
    if not responses:
        raise EmptyInput("no responses to score")
    correct = 0
    for r in responses:
        if r.task not in IDENTIFICATION_TASKS:
            raise TaskMismatch(f"{r.task} is not an identification task")
        if r.response_label == truths[(r.dataset_id, r.task)]:
            correct += 1
    return correct / len(responses)


def log_abs_error(estimate: float, truth: float) -> float:
    """log2(|estimate - truth| + 1/8); -3 means a perfect estimate."""
    return math.log2(abs(estimate - truth) + LOG_ERROR_OFFSET)


def participant_means(responses, factor, metric) -> dict:
    """Mean of `metric(response)` per (participant, factor(response)) cell.

    Sums are exact (math.fsum), so the result is identical no matter how the
    responses are ordered.
    """
    cells: dict = {}
    for r in responses:
        cells.setdefault((r.participant_id, factor(r)), []).append(metric(r))
    return {key: math.fsum(vals) / len(vals) for key, vals in cells.items()}


def bootstrap_ci(values, resamples: int = 10_000, level: float = 0.95, seed=0) -> tuple[float, float, float]:
    """(mean, lo, hi): percentile bootstrap CI of the mean.

    Deterministic for a given seed. A constant (or single-element) sample
    collapses to a point interval.
    """
    arr = np.asarray(list(values), dtype=float)
    if arr.size == 0:
        raise EmptyInput("bootstrap of an empty sample")
    if not 0 < level < 1:
        raise ValueError(f"level must be in (0, 1), got {level}")
    if arr.size == 1 or np.all(arr == arr[0]):
        c = float(arr[0])
        return c, c, c
    mean = float(arr.mean())
    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    rng = np.random.default_rng(ss)
    idx = rng.integers(0, arr.size, size=(resamples, arr.size))
    means = arr[idx].mean(axis=1)
    alpha = (1.0 - level) / 2.0
    lo, hi = np.quantile(means, [alpha, 1.0 - alpha])
    return mean, float(lo), float(hi)


def cohens_d_between(a, b) -> float:
    """Standardized mean difference (mean(b) - mean(a)) / pooled SD."""
    a = np.asarray(list(a), dtype=float)
    b = np.asarray(list(b), dtype=float)
    if a.size < 2 or b.size < 2:
        raise EmptyInput("cohens_d_between needs at least 2 values per group")
    pooled_var = ((a.size - 1) * a.var(ddof=1) + (b.size - 1) * b.var(ddof=1)) / (a.size + b.size - 2)
    if pooled_var == 0:
        raise ZeroVariance("both groups are constant")
    return float((b.mean() - a.mean()) / math.sqrt(pooled_var))


def cohens_d_paired(a, b, variant: str = DAV) -> float:
    """Paired-samples d, index-paired, direction mean(b) - mean(a).

    Dav divides by the average of the two condition SDs; Dz divides by the
    SD of the pairwise differences.
    """
    a = np.asarray(list(a), dtype=float)
    b = np.asarray(list(b), dtype=float)
    if a.size != b.size:
        raise LengthMismatch(f"paired vectors differ in length: {a.size} vs {b.size}")
    if a.size < 2:
        raise EmptyInput("cohens_d_paired needs at least 2 pairs")
    if variant == DAV:
        denom = (a.std(ddof=1) + b.std(ddof=1)) / 2.0
        if denom == 0:
            raise ZeroVariance("both conditions are constant")
        return float((b.mean() - a.mean()) / denom)
    if variant == DZ:
        diff = b - a
        denom = diff.std(ddof=1)
        if denom == 0:
            raise ZeroVariance("pairwise differences are constant")
        return float(diff.mean() / denom)
    raise ValueError(f"unknown paired-d variant {variant!r}")


@dataclass(frozen=True)
class AnalyzeConfig:
    resamples: int = 10_000
    ci_level: float = 0.95
    seed: int = 0
    d_mode: str = "paired"  # "paired" or "between"
    paired_variant: str = DAV
    screen_max_errors: "int | None" = None  # drop participants with more identify_max errors than this
    exclude_wrong_id: bool = False  # drop ratio trials whose identification went wrong
    bins: BinConfig = field(default_factory=BinConfig)


@dataclass(frozen=True)
class EffectRow:
    grouping: str  # overall | task | entropy_bin | hspread_bin
    level: str
    metric: str  # accuracy_pct | log_abs_error | elapsed_ms
    task: "str | None"  # set when the metric is restricted to one task
    n_standard: int
    n_wrapped: int
    n_paired: int
    standard_mean: "float | None"
    standard_ci: "tuple[float, float] | None"
    wrapped_mean: "float | None"
    wrapped_ci: "tuple[float, float] | None"
    diff_mean: "float | None"
    diff_ci: "tuple[float, float] | None"
    cohens_d: "float | None"
    d_note: "str | None"
    degenerate: bool

    def to_json_dict(self) -> dict:
        return {
            "grouping": self.grouping,
            "level": self.level,
            "metric": self.metric,
            "task": self.task,
            "n_standard": self.n_standard,
            "n_wrapped": self.n_wrapped,
            "n_paired": self.n_paired,
            "standard_mean": self.standard_mean,
            "standard_ci": list(self.standard_ci) if self.standard_ci else None,
            "wrapped_mean": self.wrapped_mean,
            "wrapped_ci": list(self.wrapped_ci) if self.wrapped_ci else None,
            "diff_mean": self.diff_mean,
            "diff_ci": list(self.diff_ci) if self.diff_ci else None,
            "cohens_d": self.cohens_d,
            "d_note": self.d_note,
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class AnalysisReport:
    rows: tuple[EffectRow, ...]
    n_responses: int
    n_participants: int
    excluded_ambiguous: int
    excluded_zero_min: int
    excluded_wrong_identification: int
    screened_participants: tuple[str, ...]
    metadata: dict

    def find(self, grouping: str, level: str, metric: str, task: "str | None" = None) -> "EffectRow | None":
        for row in self.rows:
            if (row.grouping, row.level, row.metric, row.task) == (grouping, level, metric, task):
                return row
        return None

    def to_json_dict(self) -> dict:
        return {
            "rows": [r.to_json_dict() for r in self.rows],
            "n_responses": self.n_responses,
            "n_participants": self.n_participants,
            "excluded": {
                "ambiguous_truth": self.excluded_ambiguous,
                "zero_min_ratio": self.excluded_zero_min,
                "wrong_identification": self.excluded_wrong_identification,
            },
            "screened_participants": list(self.screened_participants),
            "metadata": self.metadata,
        }


@dataclass(frozen=True)
class _Scored:
    response: TrialResponse
    metric: str
    score: float
    correct: "bool | None"

    # duck-type what participant_means and the group-bys need
    @property
    def participant_id(self) -> str:
        return self.response.participant_id

    @property
    def chart_type(self) -> str:
        return self.response.chart_type


def _score_responses(responses, truths, counts):
    scored = []
    for r in responses:
        truth = truths.get((r.dataset_id, r.task))
        if isinstance(truth, AmbiguousTruth):
            counts["ambiguous"] += 1
            continue
        if isinstance(truth, DivisionByZero):
            counts["zero_min"] += 1
            continue
        if r.task in IDENTIFICATION_TASKS:
            correct = r.response_label == truth
            scored.append(_Scored(r, ACCURACY, 100.0 if correct else 0.0, correct))
        else:
            scored.append(_Scored(r, LOG_ERROR, log_abs_error(r.response_value, truth), None))
    return scored


def _row_seed(base_seed: int, *parts) -> np.random.SeedSequence:
    tag = zlib.crc32("|".join(str(p) for p in parts).encode("utf-8"))
    return np.random.SeedSequence(base_seed, spawn_key=(tag,))


def _condition_stats(scored, value_of, cfg: AnalyzeConfig, row_key):
    """Participant-first means per chart type, their CIs, the paired
    wrapped-minus-standard difference, and Cohen's d."""
    cell_means = participant_means(scored, factor=lambda s: s.chart_type, metric=value_of)

    per_chart = {CHART_STANDARD: {}, CHART_WRAPPED: {}}
    for (pid, chart), mean in cell_means.items():
        per_chart[chart][pid] = mean

    out = {}
    for chart, by_pid in per_chart.items():
        if by_pid:
            vec = [by_pid[p] for p in sorted(by_pid)]
            out[chart] = bootstrap_ci(vec, cfg.resamples, cfg.ci_level, _row_seed(cfg.seed, chart, *row_key))
        else:
            out[chart] = None

    paired_pids = sorted(set(per_chart[CHART_STANDARD]) & set(per_chart[CHART_WRAPPED]))
    std_vec = [per_chart[CHART_STANDARD][p] for p in paired_pids]
    wrp_vec = [per_chart[CHART_WRAPPED][p] for p in paired_pids]
    diffs = [w - s for s, w in zip(std_vec, wrp_vec)]

    diff_stats = None
    if diffs:
        diff_stats = bootstrap_ci(diffs, cfg.resamples, cfg.ci_level, _row_seed(cfg.seed, "diff", *row_key))

    d_value, d_note = None, None
    try:
        if cfg.d_mode == "between":
            std_all = [v for v in per_chart[CHART_STANDARD].values()]
            wrp_all = [v for v in per_chart[CHART_WRAPPED].values()]
            d_value = cohens_d_between(sorted(std_all), sorted(wrp_all))
        else:
            d_value = cohens_d_paired(std_vec, wrp_vec, cfg.paired_variant)
    except ZeroVariance:
        d_note = "zero_variance"
    except (EmptyInput, LengthMismatch):
        d_note = "insufficient_n"

    return {
        "standard": out[CHART_STANDARD],
        "wrapped": out[CHART_WRAPPED],
        "n_standard": len(per_chart[CHART_STANDARD]),
        "n_wrapped": len(per_chart[CHART_WRAPPED]),
        "n_paired": len(paired_pids),
        "diff": diff_stats,
        "d": d_value,
        "d_note": d_note,
    }


def _make_row(grouping, level, metric, task, scored, value_of, cfg) -> "EffectRow | None":
    if not scored:
        return None
    stats = _condition_stats(scored, value_of, cfg, (grouping, level, metric, task))
    std, wrp, diff = stats["standard"], stats["wrapped"], stats["diff"]
    return EffectRow(
        grouping=grouping,
        level=level,
        metric=metric,
        task=task,
        n_standard=stats["n_standard"],
        n_wrapped=stats["n_wrapped"],
        n_paired=stats["n_paired"],
        standard_mean=std[0] if std else None,
        standard_ci=(std[1], std[2]) if std else None,
        wrapped_mean=wrp[0] if wrp else None,
        wrapped_ci=(wrp[1], wrp[2]) if wrp else None,
        diff_mean=diff[0] if diff else None,
        diff_ci=(diff[1], diff[2]) if diff else None,
        cohens_d=stats["d"],
        d_note=stats["d_note"],
        degenerate=stats["n_paired"] < 2,
    )


def analyze(responses, datasets, cfg: AnalyzeConfig = AnalyzeConfig()) -> AnalysisReport:
    """Full pipeline: truths, screening, scoring, grouping, estimation.

    `datasets` is an iterable of Dataset whose ids cover every response.
    Responses whose truth is undefined (tied extreme, zero denominator) are
    excluded and counted, not fatal.
    """
    responses = list(responses)
    by_id = {d.id: d for d in datasets}
    missing = {r.dataset_id for r in responses if r.dataset_id not in by_id}
    if missing:
        raise KeyError(f"responses reference unknown dataset ids: {sorted(missing)}")

    truths: dict = {}
    for r in responses:
        key = (r.dataset_id, r.task)
        if key not in truths:
            try:
                truths[key] = task_truth(by_id[r.dataset_id], r.task)
            except (AmbiguousTruth, DivisionByZero) as exc:
                truths[key] = exc

    # participant screen: too many identify_max errors means random clicking
    screened: list = []
    if cfg.screen_max_errors is not None:
        errors: dict = {}
        for r in responses:
            if r.task != IDENTIFY_MAX:
                continue
            truth = truths[(r.dataset_id, r.task)]
            if isinstance(truth, Exception):
                continue
            if r.response_label != truth:
                errors[r.participant_id] = errors.get(r.participant_id, 0) + 1
        screened = sorted(p for p, n in errors.items() if n > cfg.screen_max_errors)
        responses = [r for r in responses if r.participant_id not in screened]

    counts = {"ambiguous": 0, "zero_min": 0, "wrong_id": 0}
    scored = _score_responses(responses, truths, counts)

    if cfg.exclude_wrong_id:
        id_ok: dict = {}
        for s in scored:
            if s.metric == ACCURACY and s.response.task in (IDENTIFY_MAX, IDENTIFY_MIN):
                key = (s.response.participant_id, s.response.dataset_id, s.response.chart_type)
                id_ok[key] = id_ok.get(key, True) and s.correct
        kept = []
        for s in scored:
            if s.metric == LOG_ERROR:
                key = (s.response.participant_id, s.response.dataset_id, s.response.chart_type)
                if not id_ok.get(key, True):
                    counts["wrong_id"] += 1
                    continue
            kept.append(s)
        scored = kept

    profiles: dict = {d_id: profile(d, cfg.bins) for d_id, d in by_id.items()}

    acc_scored = [s for s in scored if s.metric == ACCURACY]
    err_scored = [s for s in scored if s.metric == LOG_ERROR]

    rows: list = []

    def add(row):
        if row is not None:
            rows.append(row)

    score_of = lambda s: s.score
    elapsed_of = lambda s: float(s.response.elapsed_ms)

    # overall
    add(_make_row("overall", "all", ACCURACY, None, acc_scored, score_of, cfg))
    add(_make_row("overall", "all", LOG_ERROR, None, err_scored, score_of, cfg))
    add(_make_row("overall", "all", ELAPSED, None, scored, elapsed_of, cfg))

    # per task: the task's own score metric plus its completion time
    for task in ALL_TASKS:
        in_task = [s for s in scored if s.response.task == task]
        if not in_task:
            continue
        metric = ACCURACY if task in IDENTIFICATION_TASKS else LOG_ERROR
        add(_make_row("task", task, metric, task, in_task, score_of, cfg))
        add(_make_row("task", task, ELAPSED, task, in_task, elapsed_of, cfg))

    # per data-shape bin: accuracy split by identification task, error pooled
    for grouping, bin_of in (
        ("entropy_bin", lambda d_id: profiles[d_id].entropy_bin),
        ("hspread_bin", lambda d_id: profiles[d_id].hspread_bin),
    ):
        level_order = list(cfg.bins.entropy_labels if grouping == "entropy_bin" else cfg.bins.hspread_labels)
        level_order.append(BinConfig.BELOW_RANGE)
        for level in level_order:
            in_level = [s for s in scored if bin_of(s.response.dataset_id) == level]
            if not in_level:
                continue
            for task in IDENTIFICATION_TASKS:
                in_task = [s for s in in_level if s.response.task == task]
                add(_make_row(grouping, level, ACCURACY, task, in_task, score_of, cfg))
            add(_make_row(grouping, level, LOG_ERROR, None, [s for s in in_level if s.metric == LOG_ERROR], score_of, cfg))
            add(_make_row(grouping, level, ELAPSED, None, in_level, elapsed_of, cfg))

    return AnalysisReport(
        rows=tuple(rows),
        n_responses=len(responses),
        n_participants=len({r.participant_id for r in responses}),
        excluded_ambiguous=counts["ambiguous"],
        excluded_zero_min=counts["zero_min"],
        excluded_wrong_identification=counts["wrong_id"],
        screened_participants=tuple(screened),
        metadata={
            "direction": "wrapped_minus_standard",
            "resamples": cfg.resamples,
            "ci_level": cfg.ci_level,
            "seed": cfg.seed,
            "d_mode": cfg.d_mode,
            "paired_variant": cfg.paired_variant if cfg.d_mode == "paired" else None,
            "log_error_formula": f"log2(|estimate - truth| + {LOG_ERROR_OFFSET})",
            "accuracy_unit": "percentage_points",
            "participant_first_averaging": True,
            "screen_max_errors": cfg.screen_max_errors,
            "exclude_wrong_id": cfg.exclude_wrong_id,
        },
    )


def format_report(report: AnalysisReport) -> str:
    """Fixed-width table, one line per effect row."""

    def fmt(x, width=8):
        if x is None:
            return " " * (width - 1) + "-"
        return f"{x:>{width}.3f}"

    def fmt_ci(ci):
        if ci is None:
            return " " * 19
        return f"[{ci[0]:>8.3f},{ci[1]:>8.3f}]"

    lines = [
        f"{'grouping':<12} {'level':<12} {'metric':<13} {'task':<16} {'n':>3}  "
        f"{'standard':>8} {'wrapped':>8} {'diff':>8} {'95% CI (diff)':<19} {'d':>7}",
    ]
    for r in report.rows:
        d_text = f"{r.cohens_d:>7.3f}" if r.cohens_d is not None else (r.d_note or "-").rjust(7)
        lines.append(
            f"{r.grouping:<12} {r.level:<12} {r.metric:<13} {r.task or '-':<16} {r.n_paired:>3}  "
            f"{fmt(r.standard_mean)} {fmt(r.wrapped_mean)} {fmt(r.diff_mean)} {fmt_ci(r.diff_ci)} {d_text}"
        )
    lines.append("")
    lines.append(
        f"participants={report.n_participants} responses={report.n_responses} "
        f"excluded: ambiguous={report.excluded_ambiguous} zero_min={report.excluded_zero_min} "
        f"wrong_id={report.excluded_wrong_identification} screened={list(report.screened_participants)}"
    )
    lines.append(f"direction=wrapped-standard, d={report.metadata['d_mode']}/{report.metadata.get('paired_variant')}")
    return "\n".join(lines)


RESPONSES_HEADER = ["participant_id", "dataset_id", "chart_type", "task", "response_label", "response_value", "elapsed_ms"]


def parse_responses_csv(text: str) -> list[TrialResponse]:
    reader = csv.reader(io.StringIO(text))
    rows = [r for r in reader if r and any(cell.strip() for cell in r)]
    if not rows or [c.strip() for c in rows[0]] != RESPONSES_HEADER:
        raise ValueError(f"responses CSV must start with header {','.join(RESPONSES_HEADER)}")
    out = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(RESPONSES_HEADER):
            raise ValueError(f"line {lineno}: expected {len(RESPONSES_HEADER)} fields, got {len(row)}")
        pid, did, chart, task, label, value, elapsed = (c.strip() for c in row)
        try:
            out.append(
                TrialResponse(
                    participant_id=pid,
                    dataset_id=did,
                    chart_type=chart,
                    task=task,
                    response_label=label or None,
                    response_value=float(value) if value else None,
                    elapsed_ms=int(elapsed) if elapsed else 0,
                )
            )
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return out


def load_responses_csv(path: str) -> list[TrialResponse]:
    with open(path, encoding="utf-8") as fh:
        return parse_responses_csv(fh.read())


def responses_to_csv(responses) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RESPONSES_HEADER)
    for r in responses:
        writer.writerow(
            [
                r.participant_id,
                r.dataset_id,
                r.chart_type,
                r.task,
                r.response_label or "",
                "" if r.response_value is None else repr(r.response_value),
                r.elapsed_ms,
            ]
        )
    return buf.getvalue()
