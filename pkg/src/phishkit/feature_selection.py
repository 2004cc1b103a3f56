"""Information-gain feature ranking.

A feature's information gain is the drop in label entropy after
conditioning on the feature's discretized value:

    IG(f) = H(y) - sum_b (n_b / n) * H(y | bin b)

Continuous columns are discretized with equal-frequency bins; columns with
few distinct values keep one bin per value.  Gains are measured in bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import Dataset

STRATEGIES = ("equal_frequency", "equal_width", "categorical")


@dataclass(frozen=True)
class BinningSpec:
    """How to discretize a continuous column before measuring gain.

    Columns with at most ``max_bins`` distinct values always use one bin
    per distinct value, regardless of strategy.
    """

    max_bins: int = 10
    strategy: str = "equal_frequency"

    def __post_init__(self):
        if self.max_bins < 2:
            raise ValueError(f"max_bins must be >= 2, got {self.max_bins}")
        if self.strategy not in STRATEGIES:
            raise ValueError(
                f"unknown strategy {self.strategy!r}; expected one of {STRATEGIES}"
            )


@dataclass(frozen=True)
class FeatureScore:
    feature_index: int
    feature_name: str
    gain: float
    rank: int


def entropy(labels) -> float:
    """Shannon entropy of a binary label vector, in bits.

    Uses the convention 0 * log2(0) = 0; at most 1.0 for two classes.
    """
    labels = np.asarray(labels)
    if labels.size == 0:
        raise ValueError("labels must be nonempty")
    p1 = np.count_nonzero(labels) / labels.size
    result = 0.0
    for p in (p1, 1.0 - p1):
        if p > 0.0:
            result -= p * np.log2(p)
    return float(result)


def discretize(column: np.ndarray, spec: BinningSpec) -> np.ndarray:
    """Map a column to integer bin ids per the binning spec.

    Equal-frequency cut points are order statistics of the column, so bin
    membership depends only on value ranks; duplicate cut points collapse,
    which can leave fewer than ``max_bins`` bins.
    """
    column = np.asarray(column, dtype=np.float64)
    distinct = np.unique(column)
    if distinct.size <= spec.max_bins or spec.strategy == "categorical":
        return np.searchsorted(distinct, column)

    if spec.strategy == "equal_frequency":
        # cut j is the order statistic at rank ceil(j*n / max_bins); exact
        # integer arithmetic keeps boundary ranks stable
        ordered = np.sort(column)
        n = ordered.shape[0]
        ranks = [
            (j * n + spec.max_bins - 1) // spec.max_bins - 1
            for j in range(1, spec.max_bins)
        ]
        cuts = ordered[ranks]
    else:  # equal_width
        lo, hi = distinct[0], distinct[-1]
        cuts = lo + (hi - lo) * np.arange(1, spec.max_bins) / spec.max_bins
    cuts = np.unique(cuts)
    # value == cut falls in the lower bin (right-closed intervals)
    return np.searchsorted(cuts, column, side="left")


def information_gain(column, labels, spec: BinningSpec | None = None) -> float:
    """Information gain of one feature column, in bits, clamped to >= 0."""
    spec = spec or BinningSpec()
    column = np.asarray(column, dtype=np.float64)
    labels = np.asarray(labels)
    if column.shape[0] != labels.shape[0]:
        raise ValueError(
            f"column has {column.shape[0]} rows but labels has {labels.shape[0]}"
        )
    base = entropy(labels)
    bins = discretize(column, spec)
    conditional = _conditional_entropy(bins, labels)
    return float(max(base - conditional, 0.0))


def _conditional_entropy(bins: np.ndarray, labels: np.ndarray) -> float:
    n = labels.shape[0]
    n_bins = int(bins.max()) + 1 if n else 0
    ones = np.bincount(bins, weights=labels, minlength=n_bins)
    totals = np.bincount(bins, minlength=n_bins)
    result = 0.0
    for total, one in zip(totals, ones):
        if total == 0:
            continue
        h = 0.0
        for count in (one, total - one):
            if count > 0:
                p = count / total
                h -= p * np.log2(p)
        result += (total / n) * h
    return result


def rank_features(data: Dataset, spec: BinningSpec | None = None) -> list[FeatureScore]:
    """Score every feature by information gain, descending.

    Ties break toward the lower feature index, so the output is
    deterministic and its indices form a permutation of the columns.
    """
    spec = spec or BinningSpec()
    if data.n_samples == 0:
        raise ValueError("dataset is empty")
    gains = np.array(
        [information_gain(data.features[:, j], data.labels, spec)
         for j in range(data.n_features)]
    )
    order = np.lexsort((np.arange(data.n_features), -gains))
    return [
        FeatureScore(
            feature_index=int(j),
            feature_name=data.feature_names[j],
            gain=float(gains[j]),
            rank=pos + 1,
        )
        for pos, j in enumerate(order)
    ]


def select_top_n(ranking: list[FeatureScore], n: int) -> list[int]:
    """Indices of the n highest-gain features, ranking order preserved."""
    if not 1 <= n <= len(ranking):
        raise ValueError(
            f"n must be between 1 and {len(ranking)}, got {n}"
        )
    return [score.feature_index for score in ranking[:n]]
