"""Weighted soft-voting ensemble over the five base classifiers.

Member probabilities are combined as a normalized weighted average, so
scaling every weight by the same positive constant never changes a
prediction, and the ensemble probability always stays between the lowest
and highest member probability.  Weights default to each member's
training-set ROC-AUC; training-set accuracy and uniform weighting are
available as alternatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .classifiers import MEMBER_ORDER, TrainedClassifier, train
from .config import PipelineConfig
from .dataset import Dataset, DataSplit, stratified_split
from .feature_selection import BinningSpec, rank_features, select_top_n
from .metrics import roc_auc
from .preprocessing import ScalerParams, fit_scaler, transform


@dataclass
class EnsembleModel:
    members: list[TrainedClassifier]
    weights: np.ndarray
    selected_features: list[int]
    selected_feature_names: list[str]
    scaler: ScalerParams
    threshold: float = 0.5
    feature_names: list[str] = field(default_factory=list)

    def __post_init__(self):
        if len(self.members) != 5:
            raise ValueError(f"expected 5 members, got {len(self.members)}")
        self.weights = np.asarray(self.weights, dtype=np.float64)
        if self.weights.shape != (5,):
            raise ValueError("weights must be a vector of 5 reals")
        if (self.weights < 0).any() or not (self.weights > 0).any():
            raise ValueError("weights must be nonnegative with at least one positive")
        if len(set(self.selected_features)) != len(self.selected_features):
            raise ValueError("selected feature indices must be unique")
        if self.feature_names and any(
            not 0 <= j < len(self.feature_names) for j in self.selected_features
        ):
            raise ValueError(
                "selected feature indices must fall inside the original "
                f"feature count ({len(self.feature_names)})"
            )
        if not 0.0 < self.threshold < 1.0:
            raise ValueError("threshold must be in (0, 1)")


def compute_weights(
    members: list[TrainedClassifier],
    X_train: np.ndarray,
    y_train: np.ndarray,
    mode: str = "auc",
) -> np.ndarray:
    """One weight per member from its training-set performance."""
    if mode == "uniform":
        return np.ones(len(members), dtype=np.float64)
    weights = np.empty(len(members), dtype=np.float64)
    for i, member in enumerate(members):
        scores = member.proba(X_train)
        if mode == "auc":
            weights[i] = roc_auc(scores, y_train)
        elif mode == "accuracy":
            weights[i] = float(np.mean((scores >= 0.5).astype(int) == y_train))
        else:
            raise ValueError(f"unknown weighting mode {mode!r}")
    return weights


def member_probas(model: EnsembleModel, X_raw: np.ndarray) -> np.ndarray:
    """Each member's phishing probabilities for raw full-width rows (n x 5)."""
    X_raw = np.atleast_2d(np.asarray(X_raw, dtype=np.float64))
    width = max(model.selected_features) + 1
    if X_raw.shape[1] < width:
        raise ValueError(
            f"input has {X_raw.shape[1]} features but the model selects "
            f"indices up to {width - 1}"
        )
    X = transform(model.scaler, X_raw[:, model.selected_features])
    return np.column_stack([member.proba(X) for member in model.members])


def weighted_soft_vote(probas: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Normalized weighted average of member probabilities."""
    probas = np.atleast_2d(np.asarray(probas, dtype=np.float64))
    weights = np.asarray(weights, dtype=np.float64)
    return probas @ weights / weights.sum()


def ensemble_predict_proba(model: EnsembleModel, x) -> float:
    """Weighted-average P(phishing) for one raw feature vector."""
    combined = weighted_soft_vote(member_probas(model, x), model.weights)
    return float(combined[0])


def ensemble_predict(model: EnsembleModel, x) -> int:
    """1 iff the weighted probability is >= the threshold.

    The boundary case resolves to phishing: flagging a fence-sitter is the
    safer failure for this domain.
    """
    return int(ensemble_predict_proba(model, x) >= model.threshold)


def ensemble_scores(model: EnsembleModel, X_raw: np.ndarray) -> np.ndarray:
    """Batch version of ensemble_predict_proba."""
    return weighted_soft_vote(member_probas(model, X_raw), model.weights)


def train_pipeline(
    data: Dataset, config: PipelineConfig | None = None
) -> tuple[EnsembleModel, DataSplit]:
    """Run the full training pipeline and return the model plus the split.

    Stages: stratified split, information-gain ranking on the training
    side only, top-n selection, scaler fit on training rows, the five base
    models, then performance weights.  The held-out test side is returned
    untouched for evaluation.
    """
    config = config or PipelineConfig()
    split = stratified_split(data, config.test_fraction, config.seed)

    ranking = rank_features(split.train, BinningSpec(max_bins=config.bins))
    top_n = min(config.top_n, data.n_features)
    selected = select_top_n(ranking, top_n)

    X_train_sel = split.train.features[:, selected]
    scaler = fit_scaler(X_train_sel)
    X_train = transform(scaler, X_train_sel)
    y_train = split.train.labels

    members = [
        train(kind, config.hyperparams, X_train, y_train, seed=config.seed)
        for kind in MEMBER_ORDER
    ]
    weights = compute_weights(members, X_train, y_train, mode=config.weighting)

    model = EnsembleModel(
        members=members,
        weights=weights,
        selected_features=[int(j) for j in selected],
        selected_feature_names=[data.feature_names[j] for j in selected],
        scaler=scaler,
        threshold=config.threshold,
        feature_names=list(data.feature_names),
    )
    return model, split
