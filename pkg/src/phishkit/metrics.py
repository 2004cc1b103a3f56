"""Confusion-matrix metrics and ROC-AUC.

Phishing is the positive class.  Degenerate denominators follow the usual
conventions: precision/recall are 0 when undefined, and F1 is 0 when
precision + recall is 0, so reports never raise on lopsided predictions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fn: int
    fp: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fn + self.fp + self.tn


@dataclass(frozen=True)
class EvalReport:
    confusion: ConfusionMatrix
    accuracy_pct: float
    precision: float
    recall: float
    f1: float
    auc: float

    def to_dict(self) -> dict:
        return {
            "confusion": {
                "tp": self.confusion.tp,
                "fn": self.confusion.fn,
                "fp": self.confusion.fp,
                "tn": self.confusion.tn,
            },
            "accuracy_pct": self.accuracy_pct,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "auc": self.auc,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @staticmethod
    def from_dict(raw: dict) -> "EvalReport":
        cm = raw["confusion"]
        return EvalReport(
            confusion=ConfusionMatrix(
                tp=cm["tp"], fn=cm["fn"], fp=cm["fp"], tn=cm["tn"]
            ),
            accuracy_pct=raw["accuracy_pct"],
            precision=raw["precision"],
            recall=raw["recall"],
            f1=raw["f1"],
            auc=raw["auc"],
        )


def confusion(y_true, y_pred) -> ConfusionMatrix:
    y_true = np.asarray(y_true)
    y_pred = np.asarray(y_pred)
    if y_true.shape != y_pred.shape:
        raise ValueError(
            f"length mismatch: {y_true.shape[0]} true vs {y_pred.shape[0]} predicted"
        )
    if y_true.size == 0:
        raise ValueError("empty label vectors")
    return ConfusionMatrix(
        tp=int(np.sum((y_true == 1) & (y_pred == 1))),
        fn=int(np.sum((y_true == 1) & (y_pred == 0))),
        fp=int(np.sum((y_true == 0) & (y_pred == 1))),
        tn=int(np.sum((y_true == 0) & (y_pred == 0))),
    )


def precision(cm: ConfusionMatrix) -> float:
    denom = cm.tp + cm.fp
    return cm.tp / denom if denom else 0.0


def recall(cm: ConfusionMatrix) -> float:
    denom = cm.tp + cm.fn
    return cm.tp / denom if denom else 0.0


def f1(cm: ConfusionMatrix) -> float:
    p, r = precision(cm), recall(cm)
    return 2.0 * p * r / (p + r) if p + r else 0.0


def accuracy_pct(cm: ConfusionMatrix) -> float:
    return 100.0 * (cm.tp + cm.tn) / cm.total


def roc_auc(scores, y_true) -> float:
    """Area under the ROC curve via the Mann-Whitney statistic.

    Tied scores get averaged ranks, so a constant scorer lands at 0.5.
    """
    scores = np.asarray(scores, dtype=np.float64)
    y_true = np.asarray(y_true)
    if scores.shape != y_true.shape:
        raise ValueError("scores and labels must have equal length")
    n_pos = int(np.sum(y_true == 1))
    n_neg = int(np.sum(y_true == 0))
    if n_pos == 0 or n_neg == 0:
        raise ValueError("roc_auc needs both classes present")

    ranks = _average_ranks(scores)
    rank_sum_pos = ranks[y_true == 1].sum()
    return float((rank_sum_pos - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg))


def _average_ranks(values: np.ndarray) -> np.ndarray:
    """1-based ranks with ties replaced by the mean rank of the tie group."""
    _, inverse, counts = np.unique(values, return_inverse=True, return_counts=True)
    ends = np.cumsum(counts)  # last 1-based rank within each tie group
    mean_ranks = ends - (counts - 1) / 2.0
    return mean_ranks[inverse]


def evaluate_predictions(y_true, scores, threshold: float = 0.5) -> EvalReport:
    """Full report from probability scores: threshold at >= for labels."""
    scores = np.asarray(scores, dtype=np.float64)
    y_pred = (scores >= threshold).astype(np.int64)
    cm = confusion(y_true, y_pred)
    return EvalReport(
        confusion=cm,
        accuracy_pct=accuracy_pct(cm),
        precision=precision(cm),
        recall=recall(cm),
        f1=f1(cm),
        auc=roc_auc(scores, y_true),
    )


def format_report_table(rows: list[tuple[str, EvalReport]]) -> str:
    """Aligned text table: Classifier, Accuracy(%), Precision, Recall, F1-Score.

    Display rounding: accuracy to 0.01%, the rest to 3 decimals.  The
    underlying report keeps full precision.
    """
    header = ("Classifier", "Accuracy(%)", "Precision", "Recall", "F1-Score")
    table = [header] + [
        (
            name,
            f"{report.accuracy_pct:.2f}",
            f"{report.precision:.3f}",
            f"{report.recall:.3f}",
            f"{report.f1:.3f}",
        )
        for name, report in rows
    ]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = [
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        for row in table
    ]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
