"""The five base learners: random forest, KNN, linear SVM, logistic
regression, and Gaussian naive Bayes.

All of them train deterministically for a fixed seed and expose phishing
probabilities through ``predict_proba``; the per-kind model classes also
offer a vectorized ``proba(X)`` for batch scoring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .forest import ForestModel, train_forest
from .knn import KnnModel, train_knn
from .linear import LogRegModel, SvmModel, train_logreg, train_svm
from .naive_bayes import NbModel, train_nb
from .tree import DecisionTree, build_tree, gini_impurity


class ClassifierKind(str, Enum):
    RF = "RF"
    KNN = "KNN"
    SVM = "SVM"
    LR = "LR"
    NB = "NB"


MEMBER_ORDER = (
    ClassifierKind.RF,
    ClassifierKind.KNN,
    ClassifierKind.SVM,
    ClassifierKind.LR,
    ClassifierKind.NB,
)


@dataclass(frozen=True)
class RandomForestParams:
    n_trees: int = 100
    max_depth: int | None = None  # None: grow to purity
    min_samples_split: int = 2
    features_per_split: int | None = None  # None: floor(sqrt(d))

    def __post_init__(self):
        if self.n_trees < 1:
            raise ValueError("n_trees must be positive")


@dataclass(frozen=True)
class KnnParams:
    k: int = 5

    def __post_init__(self):
        if self.k < 1 or self.k % 2 == 0:
            raise ValueError("k must be a positive odd integer")


@dataclass(frozen=True)
class SvmParams:
    lam: float = 1e-4
    epochs: int = 50

    def __post_init__(self):
        if self.lam <= 0 or self.epochs < 1:
            raise ValueError("lam and epochs must be positive")


@dataclass(frozen=True)
class LogRegParams:
    learning_rate: float = 0.1
    epochs: int = 300
    l2: float = 1e-4

    def __post_init__(self):
        if self.learning_rate <= 0 or self.epochs < 1 or self.l2 < 0:
            raise ValueError("learning_rate and epochs must be positive, l2 >= 0")


@dataclass(frozen=True)
class NaiveBayesParams:
    var_smoothing: float = 1e-9

    def __post_init__(self):
        if self.var_smoothing <= 0:
            raise ValueError("var_smoothing must be positive")


@dataclass(frozen=True)
class HyperParams:
    rf: RandomForestParams = field(default_factory=RandomForestParams)
    knn: KnnParams = field(default_factory=KnnParams)
    svm: SvmParams = field(default_factory=SvmParams)
    lr: LogRegParams = field(default_factory=LogRegParams)
    nb: NaiveBayesParams = field(default_factory=NaiveBayesParams)

    def to_dict(self) -> dict:
        return {
            "rf": {
                "n_trees": self.rf.n_trees,
                "max_depth": self.rf.max_depth,
                "min_samples_split": self.rf.min_samples_split,
                "features_per_split": self.rf.features_per_split,
            },
            "knn": {"k": self.knn.k},
            "svm": {"lam": self.svm.lam, "epochs": self.svm.epochs},
            "lr": {
                "learning_rate": self.lr.learning_rate,
                "epochs": self.lr.epochs,
                "l2": self.lr.l2,
            },
            "nb": {"var_smoothing": self.nb.var_smoothing},
        }

    @staticmethod
    def from_dict(raw: dict) -> "HyperParams":
        return HyperParams(
            rf=RandomForestParams(**raw.get("rf", {})),
            knn=KnnParams(**raw.get("knn", {})),
            svm=SvmParams(**raw.get("svm", {})),
            lr=LogRegParams(**raw.get("lr", {})),
            nb=NaiveBayesParams(**raw.get("nb", {})),
        )


@dataclass
class TrainedClassifier:
    """A fitted base model tagged with its kind."""

    kind: ClassifierKind
    model: ForestModel | KnnModel | SvmModel | LogRegModel | NbModel

    @property
    def feature_count(self) -> int:
        return self.model.feature_count

    def proba(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.ndim != 2 or X.shape[1] != self.feature_count:
            raise ValueError(
                f"expected a matrix with {self.feature_count} columns, "
                f"got shape {X.shape}"
            )
        return self.model.proba(X)


def train(
    kind: ClassifierKind,
    hp: HyperParams,
    X: np.ndarray,
    y: np.ndarray,
    seed: int,
) -> TrainedClassifier:
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if X.ndim != 2 or X.size == 0:
        raise ValueError("training matrix must be nonempty and 2-D")
    if X.shape[0] != y.shape[0]:
        raise ValueError(
            f"{X.shape[0]} training rows but {y.shape[0]} labels"
        )
    classes = np.unique(y)
    if classes.size < 2:
        raise ValueError("training data must contain both classes")

    kind = ClassifierKind(kind)
    if kind is ClassifierKind.RF:
        model = train_forest(
            X,
            y,
            seed=seed,
            n_trees=hp.rf.n_trees,
            max_depth=hp.rf.max_depth,
            min_samples_split=hp.rf.min_samples_split,
            features_per_split=hp.rf.features_per_split,
        )
    elif kind is ClassifierKind.KNN:
        model = train_knn(X, y, k=hp.knn.k)
    elif kind is ClassifierKind.SVM:
        model = train_svm(X, y, seed=seed, lam=hp.svm.lam, epochs=hp.svm.epochs)
    elif kind is ClassifierKind.LR:
        model = train_logreg(
            X,
            y,
            learning_rate=hp.lr.learning_rate,
            epochs=hp.lr.epochs,
            l2=hp.lr.l2,
        )
    else:
        model = train_nb(X, y, var_smoothing=hp.nb.var_smoothing)
    return TrainedClassifier(kind=kind, model=model)


def predict_proba(model: TrainedClassifier, x) -> float:
    """P(phishing) for a single feature vector."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1 or x.shape[0] != model.feature_count:
        raise ValueError(
            f"expected a vector of length {model.feature_count}, got shape {x.shape}"
        )
    return float(model.proba(x[np.newaxis, :])[0])


def predict(model: TrainedClassifier, x, threshold: float = 0.5) -> int:
    """Label prediction: 1 iff P(phishing) >= threshold."""
    if not 0.0 < threshold < 1.0:
        raise ValueError(f"threshold must be in (0, 1), got {threshold}")
    return int(predict_proba(model, x) >= threshold)


def serialize_member(member: TrainedClassifier) -> dict:
    return {"kind": member.kind.value, "state": member.model.to_dict()}


def deserialize_member(raw: dict) -> TrainedClassifier:
    kind = ClassifierKind(raw["kind"])
    loaders = {
        ClassifierKind.RF: ForestModel.from_dict,
        ClassifierKind.KNN: KnnModel.from_dict,
        ClassifierKind.SVM: SvmModel.from_dict,
        ClassifierKind.LR: LogRegModel.from_dict,
        ClassifierKind.NB: NbModel.from_dict,
    }
    return TrainedClassifier(kind=kind, model=loaders[kind](raw["state"]))


__all__ = [
    "ClassifierKind",
    "MEMBER_ORDER",
    "HyperParams",
    "RandomForestParams",
    "KnnParams",
    "SvmParams",
    "LogRegParams",
    "NaiveBayesParams",
    "TrainedClassifier",
    "train",
    "predict_proba",
    "predict",
    "serialize_member",
    "deserialize_member",
    "DecisionTree",
    "build_tree",
    "gini_impurity",
    "ForestModel",
    "KnnModel",
    "SvmModel",
    "LogRegModel",
    "NbModel",
    "train_forest",
    "train_knn",
    "train_svm",
    "train_logreg",
    "train_nb",
]
