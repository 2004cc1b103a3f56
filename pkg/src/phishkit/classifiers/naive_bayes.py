"""Gaussian naive Bayes with variance smoothing.

Per class, each feature gets an independent normal likelihood from its
class-conditional mean and (population) variance.  Every variance is
inflated by ``var_smoothing`` times the largest overall feature variance
so log-densities stay finite on constant columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class NbModel:
    log_priors: np.ndarray  # shape (2,), classes 0 and 1
    means: np.ndarray       # shape (2, d)
    variances: np.ndarray   # shape (2, d)

    @property
    def feature_count(self) -> int:
        return self.means.shape[1]

    def posteriors(self, X: np.ndarray) -> np.ndarray:
        """Class posterior matrix (n x 2), rows summing to 1."""
        joint = np.empty((X.shape[0], 2), dtype=np.float64)
        for cls in (0, 1):
            mean, var = self.means[cls], self.variances[cls]
            log_pdf = -0.5 * (
                np.log(2.0 * np.pi * var) + (X - mean) ** 2 / var
            ).sum(axis=1)
            joint[:, cls] = self.log_priors[cls] + log_pdf
        joint -= joint.max(axis=1, keepdims=True)
        likes = np.exp(joint)
        return likes / likes.sum(axis=1, keepdims=True)

    def proba(self, X: np.ndarray) -> np.ndarray:
        return self.posteriors(X)[:, 1]

    def to_dict(self) -> dict:
        return {
            "log_priors": self.log_priors.tolist(),
            "means": self.means.tolist(),
            "variances": self.variances.tolist(),
        }

    @staticmethod
    def from_dict(raw: dict) -> "NbModel":
        return NbModel(
            log_priors=np.asarray(raw["log_priors"], dtype=np.float64),
            means=np.asarray(raw["means"], dtype=np.float64),
            variances=np.asarray(raw["variances"], dtype=np.float64),
        )


def train_nb(X: np.ndarray, y: np.ndarray, var_smoothing: float = 1e-9) -> NbModel:
    n, d = X.shape
    means = np.empty((2, d), dtype=np.float64)
    variances = np.empty((2, d), dtype=np.float64)
    log_priors = np.empty(2, dtype=np.float64)

    max_var = float(X.var(axis=0).max())
    epsilon = var_smoothing * max_var if max_var > 0 else var_smoothing
    for cls in (0, 1):
        rows = X[y == cls]
        means[cls] = rows.mean(axis=0)
        variances[cls] = rows.var(axis=0) + epsilon
        log_priors[cls] = np.log(rows.shape[0] / n)
    return NbModel(log_priors=log_priors, means=means, variances=variances)
