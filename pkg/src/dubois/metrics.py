"""Data-shape metrics and the wrapped-vs-standard recommendation.

Two numbers characterize how disproportionate a categorical dataset is:

* normalized entropy of the category proportions (1 = uniform, 0 = all mass
  in one category), and
* H-spread, ``(max - Q3) / (Q3 - Q1)`` with Tukey-hinge quartiles, measuring
  how far out the maximum sits relative to the mid-spread.

Both are scale- and permutation-invariant. The recommendation heuristic
prefers a wrapped chart when normalized entropy < 0.75 or H-spread > 4.5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from dubois.dataset import Dataset, InvalidDataset

QUARTILE_METHOD = "tukey-hinges"

#: Reasons a wrapped chart gets recommended.
LOW_ENTROPY = "low_entropy"
HIGH_H_SPREAD = "high_h_spread"


class EmptyInput(ValueError):
    """Raised when a statistic is asked of an empty list."""


@dataclass(frozen=True)
class BinConfig:
    """Bin edges and labels for the entropy x H-spread grid.

    Edges are closed on the left: a value exactly on an edge belongs to the
    higher bin, so H-spread 4.5 lands in "4.5+". Normalized entropy below the
    first edge is "below-range"; the top entropy bin includes 1.0.
    """

    entropy_edges: tuple[float, ...] = (0.45, 0.6, 0.75, 0.9, 1.0)
    hspread_edges: tuple[float, ...] = (0.0, 1.5, 3.0, 4.5, math.inf)
    entropy_labels: tuple[str, ...] = ("0.45-0.6", "0.6-0.75", "0.75-0.9", "0.9-1.0")
    hspread_labels: tuple[str, ...] = ("0-1.5", "1.5-3", "3-4.5", "4.5+")

    BELOW_RANGE = "below-range"

    def __post_init__(self) -> None:
        if len(self.entropy_labels) != len(self.entropy_edges) - 1:
            raise ValueError("entropy_labels must have one entry per bin")
        if len(self.hspread_labels) != len(self.hspread_edges) - 1:
            raise ValueError("hspread_labels must have one entry per bin")

    @classmethod
    def from_edges(cls, entropy_edges: "tuple[float, ...]", hspread_edges: "tuple[float, ...]") -> "BinConfig":
        return cls(
            entropy_edges=entropy_edges,
            hspread_edges=hspread_edges,
            entropy_labels=tuple(_span_label(lo, hi) for lo, hi in zip(entropy_edges, entropy_edges[1:])),
            hspread_labels=tuple(_span_label(lo, hi) for lo, hi in zip(hspread_edges, hspread_edges[1:])),
        )

    def entropy_bin(self, normalized_entropy: float) -> str:
        if normalized_entropy < self.entropy_edges[0]:
            return self.BELOW_RANGE
        return self._locate(normalized_entropy, self.entropy_edges, self.entropy_labels)

    def hspread_bin(self, h_spread: float) -> str:
        return self._locate(h_spread, self.hspread_edges, self.hspread_labels)

    @staticmethod
    def _locate(x: float, edges: "tuple[float, ...]", labels: "tuple[str, ...]") -> str:
        for i in range(len(edges) - 2, -1, -1):
            if x >= edges[i]:
                return labels[i]
        return labels[0]


def _span_label(lo: float, hi: float) -> str:
    fmt = lambda x: str(int(x)) if float(x).is_integer() else f"{x:g}"
    return f"{fmt(lo)}+" if math.isinf(hi) else f"{fmt(lo)}-{fmt(hi)}"


DEFAULT_BINS = BinConfig()


@dataclass(frozen=True)
class DataProfile:
    entropy_bits: float
    normalized_entropy: float
    q1: float
    median: float
    q3: float
    h_spread: float
    entropy_bin: str
    hspread_bin: str
    quartile_method: str = QUARTILE_METHOD

    def to_json_dict(self) -> dict:
        d = {
            "entropy_bits": self.entropy_bits,
            "normalized_entropy": self.normalized_entropy,
            "q1": self.q1,
            "median": self.median,
            "q3": self.q3,
            "h_spread": self.h_spread if math.isfinite(self.h_spread) else "inf",
            "entropy_bin": self.entropy_bin,
            "hspread_bin": self.hspread_bin,
            "quartile_method": self.quartile_method,
        }
        return d


@dataclass(frozen=True)
class Recommendation:
    use_wrapped: bool
    reasons: tuple[str, ...]
    entropy_cutoff: float
    hspread_cutoff: float

    def to_json_dict(self) -> dict:
        return {
            "use_wrapped": self.use_wrapped,
            "reasons": list(self.reasons),
            "entropy_cutoff": self.entropy_cutoff,
            "hspread_cutoff": self.hspread_cutoff,
        }


def entropy(d: Dataset) -> float:
    """Shannon entropy, in bits, of the category proportions.

    Zero-valued categories contribute nothing (0 * log 0 == 0).
    """
    total = math.fsum(d.values)
    if total <= 0:
        raise InvalidDataset(f"dataset {d.id!r}: entropy undefined when all values are 0")
    h = 0.0
    for v in d.values:
        if v > 0:
            p = v / total
            h -= p * math.log2(p)
    return h


def normalized_entropy(d: Dataset) -> float:
    """Entropy divided by log2(N), clamped to [0, 1]."""
    n = len(d)
    if n < 2:
        raise InvalidDataset(f"dataset {d.id!r}: normalized entropy needs at least 2 categories")
    return min(entropy(d) / math.log2(n), 1.0)


def quartiles(values: "list[float]") -> tuple[float, float, float]:
    """(Q1, median, Q3) as Tukey hinges.

    The sorted data is split into lower and upper halves, each including the
    middle element when the count is odd; the hinges are the medians of the
    halves.
    """
    if not values:
        raise EmptyInput("quartiles of an empty list")
    s = sorted(values)
    n = len(s)
    half = (n + 1) // 2
    return _median_sorted(s[:half]), _median_sorted(s), _median_sorted(s[n - half:])


def _median_sorted(s: "list[float]") -> float:
    n = len(s)
    mid = n // 2
    if n % 2 == 1:
        return s[mid]
    return (s[mid - 1] + s[mid]) / 2.0


def h_spread(d: Dataset) -> float:
    """(max - Q3) / (Q3 - Q1) over the dataset's values.

    A zero interquartile range degenerates to 0 when the maximum equals Q3
    (nothing sticks out) and +inf otherwise (any excess is infinitely
    disproportionate).
    """
    q1, _, q3 = quartiles(d.values)
    top = max(d.values) - q3
    iqr = q3 - q1
    if iqr == 0:
        return 0.0 if top == 0 else math.inf
    return top / iqr


def profile(d: Dataset, bins: BinConfig = DEFAULT_BINS) -> DataProfile:
    """Compute all metrics for a dataset and assign its grid bins."""
    q1, med, q3 = quartiles(d.values)
    h_bits = entropy(d)
    ne = normalized_entropy(d)
    hs = h_spread(d)
    return DataProfile(
        entropy_bits=h_bits,
        normalized_entropy=ne,
        q1=q1,
        median=med,
        q3=q3,
        h_spread=hs,
        entropy_bin=bins.entropy_bin(ne),
        hspread_bin=bins.hspread_bin(hs),
    )


def recommend(d: Dataset, entropy_cutoff: float = 0.75, hspread_cutoff: float = 4.5) -> Recommendation:
    """Recommend a wrapped chart when either disproportion heuristic fires.

    The two triggers are independent and both are reported when satisfied.
    """
    reasons = []
    if normalized_entropy(d) < entropy_cutoff:
        reasons.append(LOW_ENTROPY)
    if h_spread(d) > hspread_cutoff:
        reasons.append(HIGH_H_SPREAD)
    return Recommendation(
        use_wrapped=bool(reasons),
        reasons=tuple(reasons),
        entropy_cutoff=entropy_cutoff,
        hspread_cutoff=hspread_cutoff,
    )
