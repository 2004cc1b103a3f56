"""Linear models: logistic regression and a hinge-loss SVM.

Both start from zero weights and run a fixed epoch schedule, so training
is deterministic given the seed.  The SVM turns signed margins into
probabilities through a one-parameter sigmoid fitted on training margins.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


def sigmoid(z: np.ndarray) -> np.ndarray:
    """Numerically stable logistic function."""
    z = np.asarray(z, dtype=np.float64)
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


@dataclass
class LogRegModel:
    weights: np.ndarray
    bias: float

    @property
    def feature_count(self) -> int:
        return self.weights.shape[0]

    def proba(self, X: np.ndarray) -> np.ndarray:
        return sigmoid(X @ self.weights + self.bias)

    def to_dict(self) -> dict:
        return {"weights": self.weights.tolist(), "bias": self.bias}

    @staticmethod
    def from_dict(raw: dict) -> "LogRegModel":
        return LogRegModel(
            weights=np.asarray(raw["weights"], dtype=np.float64), bias=raw["bias"]
        )


def logreg_loss(w, b, X, y, l2) -> float:
    """Regularized mean log-loss; the L2 term covers weights, not bias."""
    z = X @ w + b
    y_pm = 2.0 * y - 1.0
    return float(np.mean(np.logaddexp(0.0, -y_pm * z)) + 0.5 * l2 * w @ w)


def logreg_gradient(w, b, X, y, l2) -> tuple[np.ndarray, float]:
    residual = sigmoid(X @ w + b) - y
    grad_w = X.T @ residual / X.shape[0] + l2 * w
    grad_b = float(residual.mean())
    return grad_w, grad_b


def train_logreg(
    X: np.ndarray,
    y: np.ndarray,
    learning_rate: float = 0.1,
    epochs: int = 300,
    l2: float = 1e-4,
) -> LogRegModel:
    """Full-batch gradient descent on the regularized log-loss."""
    w = np.zeros(X.shape[1], dtype=np.float64)
    b = 0.0
    for _ in range(epochs):
        grad_w, grad_b = logreg_gradient(w, b, X, y, l2)
        w -= learning_rate * grad_w
        b -= learning_rate * grad_b
    return LogRegModel(weights=w, bias=b)


@dataclass
class SvmModel:
    weights: np.ndarray
    bias: float
    calibration_a: float

    @property
    def feature_count(self) -> int:
        return self.weights.shape[0]

    def margin(self, X: np.ndarray) -> np.ndarray:
        return X @ self.weights + self.bias

    def proba(self, X: np.ndarray) -> np.ndarray:
        return sigmoid(self.calibration_a * self.margin(X))

    def to_dict(self) -> dict:
        return {
            "weights": self.weights.tolist(),
            "bias": self.bias,
            "calibration_a": self.calibration_a,
        }

    @staticmethod
    def from_dict(raw: dict) -> "SvmModel":
        return SvmModel(
            weights=np.asarray(raw["weights"], dtype=np.float64),
            bias=raw["bias"],
            calibration_a=raw["calibration_a"],
        )


def hinge_objective(w_aug: np.ndarray, X_aug: np.ndarray, y_pm: np.ndarray,
                    lam: float) -> float:
    margins = y_pm * (X_aug @ w_aug)
    return float(np.mean(np.maximum(0.0, 1.0 - margins))
                 + 0.5 * lam * w_aug @ w_aug)


def train_svm(
    X: np.ndarray,
    y: np.ndarray,
    seed: int,
    lam: float = 1e-4,
    epochs: int = 50,
) -> SvmModel:
    """Stochastic subgradient descent on the L2-regularized hinge loss.

    Step size 1/(lam * t) with a projection onto the ball of radius
    1/sqrt(lam) after each update; the bias rides along as an augmented
    constant feature.  Sample order is reshuffled each epoch from the
    seeded generator.
    """
    n = X.shape[0]
    X_aug = np.hstack([X, np.ones((n, 1))])
    y_pm = 2.0 * np.asarray(y, dtype=np.float64) - 1.0
    w = np.zeros(X_aug.shape[1], dtype=np.float64)
    radius = 1.0 / np.sqrt(lam)
    rng = np.random.default_rng(seed)

    t = 0
    for _ in range(epochs):
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (lam * t)
            x_i = X_aug[i]
            violated = y_pm[i] * (w @ x_i) < 1.0
            w *= 1.0 - 1.0 / t  # == 1 - eta * lam
            if violated:
                w += (eta * y_pm[i]) * x_i
            norm = np.sqrt(w @ w)
            if norm > radius:
                w *= radius / norm

    calibration_a = _fit_calibration(X_aug @ w, y_pm)
    return SvmModel(weights=w[:-1], bias=float(w[-1]), calibration_a=calibration_a)


def _fit_calibration(margins: np.ndarray, y_pm: np.ndarray,
                     lo: float = 0.01, hi: float = 100.0,
                     iterations: int = 20) -> float:
    """Golden-section search for the sigmoid slope minimizing log-loss."""

    def loss(a: float) -> float:
        return float(np.mean(np.logaddexp(0.0, -a * y_pm * margins)))

    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = loss(x1), loss(x2)
    for _ in range(iterations):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = loss(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = loss(x2)
    return (lo + hi) / 2.0
