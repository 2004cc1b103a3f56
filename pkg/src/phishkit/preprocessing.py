"""Per-feature standardization: subtract the training mean, divide by the
training standard deviation (population form, divide by n).

Zero-variance columns transform to all zeros instead of raising, since
constant columns legitimately occur after row filtering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ScalerParams:
    means: np.ndarray
    stds: np.ndarray

    def __post_init__(self):
        if self.means.shape != self.stds.shape or self.means.ndim != 1:
            raise ValueError("means and stds must be 1-D vectors of equal length")
        if (self.stds < 0).any():
            raise ValueError("standard deviations must be nonnegative")


def fit_scaler(train_features: np.ndarray) -> ScalerParams:
    """Column means and population standard deviations of a training matrix."""
    train_features = np.asarray(train_features, dtype=np.float64)
    if train_features.ndim != 2 or train_features.size == 0:
        raise ValueError("training matrix must be a nonempty 2-D array")
    return ScalerParams(
        means=train_features.mean(axis=0),
        stds=train_features.std(axis=0),  # ddof=0: population form
    )


def transform(params: ScalerParams, features: np.ndarray) -> np.ndarray:
    """Standardize columns with previously fitted parameters."""
    features = np.asarray(features, dtype=np.float64)
    squeeze = features.ndim == 1
    if squeeze:
        features = features[np.newaxis, :]
    if features.shape[1] != params.means.shape[0]:
        raise ValueError(
            f"matrix has {features.shape[1]} columns but scaler was fitted "
            f"on {params.means.shape[0]}"
        )
    safe_stds = np.where(params.stds == 0.0, 1.0, params.stds)
    out = (features - params.means) / safe_stds
    out[:, params.stds == 0.0] = 0.0
    return out[0] if squeeze else out
