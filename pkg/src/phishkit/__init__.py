"""Phishing-website detection toolkit.

Information-gain feature selection, standardization, five from-scratch
base classifiers, and a weighted soft-voting ensemble, with an evaluation
harness for before/after feature-selection comparisons and a lexical URL
scorer for live use.
"""

from .classifiers import (
    ClassifierKind,
    HyperParams,
    TrainedClassifier,
    predict,
    predict_proba,
    train,
)
from .config import PipelineConfig
from .dataset import Dataset, DataSplit, load_csv, stratified_split
from .ensemble import (
    EnsembleModel,
    compute_weights,
    ensemble_predict,
    ensemble_predict_proba,
    ensemble_scores,
    train_pipeline,
)
from .errors import DataError, ModelFormatError, PhishkitError
from .feature_selection import (
    BinningSpec,
    FeatureScore,
    entropy,
    information_gain,
    rank_features,
    select_top_n,
)
from .metrics import (
    ConfusionMatrix,
    EvalReport,
    accuracy_pct,
    confusion,
    evaluate_predictions,
    f1,
    precision,
    recall,
    roc_auc,
)
from .persistence import load_model, save_model
from .preprocessing import ScalerParams, fit_scaler, transform
from .url_features import (
    LEXICAL_FEATURE_NAMES,
    UrlFeatureVector,
    extract_lexical,
    score_url,
)

__version__ = "0.1.0"

__all__ = [
    "BinningSpec",
    "ClassifierKind",
    "ConfusionMatrix",
    "DataError",
    "DataSplit",
    "Dataset",
    "EnsembleModel",
    "EvalReport",
    "FeatureScore",
    "HyperParams",
    "LEXICAL_FEATURE_NAMES",
    "ModelFormatError",
    "PhishkitError",
    "PipelineConfig",
    "ScalerParams",
    "TrainedClassifier",
    "UrlFeatureVector",
    "accuracy_pct",
    "compute_weights",
    "confusion",
    "ensemble_predict",
    "ensemble_predict_proba",
    "ensemble_scores",
    "entropy",
    "evaluate_predictions",
    "extract_lexical",
    "f1",
    "fit_scaler",
    "information_gain",
    "load_csv",
    "load_model",
    "precision",
    "predict",
    "predict_proba",
    "rank_features",
    "recall",
    "roc_auc",
    "save_model",
    "score_url",
    "select_top_n",
    "stratified_split",
    "train",
    "train_pipeline",
    "transform",
]
