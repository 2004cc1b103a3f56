"""K-nearest-neighbor classifier with Euclidean distance.

The phishing probability is the fraction of the k nearest training rows
labeled phishing.  Distance ties resolve toward the lower training-row
index, which makes predictions invariant to permutations of the stored
training set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_BLOCK = 256  # query rows per distance block, caps peak memory


@dataclass
class KnnModel:
    train_features: np.ndarray
    train_labels: np.ndarray
    k: int

    @property
    def feature_count(self) -> int:
        return self.train_features.shape[1]

    def proba(self, X: np.ndarray) -> np.ndarray:
        out = np.empty(X.shape[0], dtype=np.float64)
        train_sq = np.einsum("ij,ij->i", self.train_features, self.train_features)
        for start in range(0, X.shape[0], _BLOCK):
            block = X[start : start + _BLOCK]
            d2 = (
                np.einsum("ij,ij->i", block, block)[:, np.newaxis]
                + train_sq
                - 2.0 * block @ self.train_features.T
            )
            np.maximum(d2, 0.0, out=d2)
            kth = np.partition(d2, self.k - 1, axis=1)[:, self.k - 1]
            for i in range(block.shape[0]):
                cand = np.flatnonzero(d2[i] <= kth[i])  # keeps every tie
                if cand.size > self.k:
                    order = np.lexsort((cand, d2[i, cand]))
                    cand = cand[order[: self.k]]
                out[start + i] = self.train_labels[cand].mean()
        return out

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "train_features": self.train_features.tolist(),
            "train_labels": self.train_labels.tolist(),
        }

    @staticmethod
    def from_dict(raw: dict) -> "KnnModel":
        return KnnModel(
            train_features=np.asarray(raw["train_features"], dtype=np.float64),
            train_labels=np.asarray(raw["train_labels"], dtype=np.int64),
            k=raw["k"],
        )


def train_knn(X: np.ndarray, y: np.ndarray, k: int = 5) -> KnnModel:
    if k < 1 or k > X.shape[0]:
        raise ValueError(f"k must be in [1, {X.shape[0]}], got {k}")
    if k % 2 == 0:
        raise ValueError(f"k must be odd to avoid vote ties, got {k}")
    return KnnModel(train_features=X.copy(), train_labels=y.copy(), k=k)
