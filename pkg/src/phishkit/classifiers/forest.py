"""Random forest: bootstrap-resampled Gini trees with feature subsampling.

The phishing probability of a sample is the fraction of trees voting
phishing.  Each tree draws bootstrap rows and per-split feature subsets
from its own generator, seeded by spawning the forest seed, so training
order (or parallel tree construction) cannot change the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .tree import DecisionTree, build_tree


@dataclass
class ForestModel:
    trees: list[DecisionTree]
    feature_count: int

    def proba(self, X: np.ndarray) -> np.ndarray:
        votes = np.zeros(X.shape[0], dtype=np.float64)
        for tree in self.trees:
            votes += tree.predict(X)
        return votes / len(self.trees)

    def to_dict(self) -> dict:
        return {
            "feature_count": self.feature_count,
            "trees": [tree.to_dict() for tree in self.trees],
        }

    @staticmethod
    def from_dict(raw: dict) -> "ForestModel":
        return ForestModel(
            trees=[DecisionTree.from_dict(t) for t in raw["trees"]],
            feature_count=raw["feature_count"],
        )


def train_forest(
    X: np.ndarray,
    y: np.ndarray,
    seed: int,
    n_trees: int = 100,
    max_depth: int | None = None,
    min_samples_split: int = 2,
    features_per_split: int | None = None,
) -> ForestModel:
    n, d = X.shape
    if features_per_split is None:
        features_per_split = max(1, math.floor(math.sqrt(d)))
    model = ForestModel(trees=[], feature_count=d)
    for child_seed in np.random.SeedSequence(seed).spawn(n_trees):
        rng = np.random.default_rng(child_seed)
        bootstrap = rng.integers(0, n, size=n)
        model.trees.append(
            build_tree(
                X[bootstrap],
                y[bootstrap],
                rng,
                features_per_split=features_per_split,
                max_depth=max_depth,
                min_samples_split=min_samples_split,
            )
        )
    return model
