"""Binary classification tree grown on Gini impurity.

Trees are stored as flat parallel arrays (feature, threshold, left, right,
leaf value) so prediction is a vectorized pointer chase and serialization
is a plain dict of lists.  Splits are midpoints between sorted distinct
values of the candidate features; impurity ties break by (feature index,
threshold) order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_LEAF = -1


def gini_impurity(labels) -> float:
    """Gini impurity of a binary label vector: 0 when pure, 0.5 when balanced."""
    labels = np.asarray(labels)
    if labels.size == 0:
        raise ValueError("labels must be nonempty")
    p1 = np.count_nonzero(labels) / labels.size
    return 1.0 - (p1 * p1 + (1.0 - p1) * (1.0 - p1))


@dataclass
class DecisionTree:
    """Flat-array tree; node 0 is the root, feature == -1 marks a leaf."""

    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    value: np.ndarray

    @property
    def n_nodes(self) -> int:
        return self.feature.shape[0]

    def predict(self, X: np.ndarray) -> np.ndarray:
        """Class label per row of X (vectorized descent, all rows at once)."""
        pos = np.zeros(X.shape[0], dtype=np.int64)
        rows = np.arange(X.shape[0])
        while True:
            feat = self.feature[pos]
            at_node = feat != _LEAF
            if not at_node.any():
                break
            go_left = X[rows, np.where(at_node, feat, 0)] <= self.threshold[pos]
            nxt = np.where(go_left, self.left[pos], self.right[pos])
            pos = np.where(at_node, nxt, pos)
        return self.value[pos]

    def to_dict(self) -> dict:
        return {
            "feature": self.feature.tolist(),
            "threshold": self.threshold.tolist(),
            "left": self.left.tolist(),
            "right": self.right.tolist(),
            "value": self.value.tolist(),
        }

    @staticmethod
    def from_dict(raw: dict) -> "DecisionTree":
        return DecisionTree(
            feature=np.asarray(raw["feature"], dtype=np.int64),
            threshold=np.asarray(raw["threshold"], dtype=np.float64),
            left=np.asarray(raw["left"], dtype=np.int64),
            right=np.asarray(raw["right"], dtype=np.int64),
            value=np.asarray(raw["value"], dtype=np.int64),
        )


def build_tree(
    X: np.ndarray,
    y: np.ndarray,
    rng: np.random.Generator,
    features_per_split: int | None = None,
    max_depth: int | None = None,
    min_samples_split: int = 2,
) -> DecisionTree:
    """Grow a tree to purity (or to max_depth) on Gini impurity.

    At each node ``features_per_split`` candidate features are drawn
    without replacement; if none of them admits a valid boundary the
    search widens to all features before giving up on the node, so a lone
    tree can always memorize contradiction-free data.
    """
    n, d = X.shape
    m = features_per_split or d
    depth_cap = np.inf if max_depth is None else max_depth

    feature: list[int] = []
    threshold: list[float] = []
    left: list[int] = []
    right: list[int] = []
    value: list[int] = []

    def new_node() -> int:
        feature.append(_LEAF)
        threshold.append(0.0)
        left.append(_LEAF)
        right.append(_LEAF)
        value.append(0)
        return len(feature) - 1

    root = new_node()
    stack = [(root, np.arange(n), 0)]
    while stack:
        node, rows, depth = stack.pop()
        labels = y[rows]
        ones = int(labels.sum())
        # majority label; exact tie goes to the legitimate class (0)
        value[node] = 1 if ones * 2 > rows.size else 0
        if (
            ones == 0
            or ones == rows.size
            or rows.size < min_samples_split
            or depth >= depth_cap
        ):
            continue

        split = None
        if m < d:
            cand = np.sort(rng.choice(d, size=m, replace=False))
            split = _best_split(X, labels, rows, cand)
        if split is None:
            split = _best_split(X, labels, rows, np.arange(d))
        if split is None:
            continue

        feat, thr = split
        feature[node] = feat
        threshold[node] = thr
        go_left = X[rows, feat] <= thr
        left_id, right_id = new_node(), new_node()
        left[node], right[node] = left_id, right_id
        stack.append((right_id, rows[~go_left], depth + 1))
        stack.append((left_id, rows[go_left], depth + 1))

    return DecisionTree(
        feature=np.asarray(feature, dtype=np.int64),
        threshold=np.asarray(threshold, dtype=np.float64),
        left=np.asarray(left, dtype=np.int64),
        right=np.asarray(right, dtype=np.int64),
        value=np.asarray(value, dtype=np.int64),
    )


def _best_split(X, labels, rows, cand) -> tuple[int, float] | None:
    """Lowest-weighted-Gini boundary over the candidate features.

    Works on the n x m submatrix in one vectorized pass. Returns None when
    every candidate column is constant on this node.
    """
    sub = X[np.ix_(rows, cand)]
    n = sub.shape[0]
    order = np.argsort(sub, axis=0, kind="stable")
    sv = np.take_along_axis(sub, order, axis=0)
    sy = labels[order]

    ones_cum = np.cumsum(sy, axis=0, dtype=np.float64)
    total_ones = ones_cum[-1]
    left_n = np.arange(1, n, dtype=np.float64)[:, np.newaxis]
    right_n = n - left_n
    left_ones = ones_cum[:-1]
    right_ones = total_ones - left_ones

    # n * weighted Gini of the partition; same argmin, fewer divisions
    cost = (
        left_n
        - (left_ones**2 + (left_n - left_ones) ** 2) / left_n
        + right_n
        - (right_ones**2 + (right_n - right_ones) ** 2) / right_n
    )
    valid = sv[1:] > sv[:-1]
    if not valid.any():
        return None
    cost[~valid] = np.inf

    # feature-major flattening: argmin's first hit resolves ties by
    # ascending feature index, then ascending threshold
    k = int(np.argmin(cost.T.ravel()))
    f_pos, i = divmod(k, n - 1)
    thr = (sv[i, f_pos] + sv[i + 1, f_pos]) / 2.0
    return int(cand[f_pos]), float(thr)
