"""Saving and restoring trained ensembles as versioned JSON.

The file layout is documented in docs/model_format.md.  Floats are
emitted with Python's repr, which round-trips IEEE doubles exactly, so a
reloaded model reproduces the original's predictions bit for bit.  KNN
members serialize their stored training matrix; files for the full public
dataset run roughly ten megabytes, a documented size tradeoff.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone

from .classifiers import deserialize_member, serialize_member
from .config import PipelineConfig
from .ensemble import EnsembleModel
from .errors import ModelFormatError
from .metrics import EvalReport
from .preprocessing import ScalerParams

import numpy as np

FORMAT_VERSION = 1

_REQUIRED_FIELDS = (
    "format_version",
    "created_at",
    "config",
    "scaler",
    "selected_features",
    "members",
    "weights",
    "threshold",
)


def save_model(
    model: EnsembleModel,
    path,
    config: PipelineConfig | None = None,
    metrics_snapshot: EvalReport | None = None,
) -> None:
    """Write the model to ``path`` as a single human-readable JSON file."""
    payload = {
        "format_version": FORMAT_VERSION,
        "created_at": datetime.now(timezone.utc).isoformat(),
        "config": (config or PipelineConfig()).to_dict(),
        "scaler": {
            "means": model.scaler.means.tolist(),
            "stds": model.scaler.stds.tolist(),
        },
        "selected_features": {
            "indices": list(model.selected_features),
            "names": list(model.selected_feature_names),
        },
        "members": [serialize_member(m) for m in model.members],
        "weights": model.weights.tolist(),
        "threshold": model.threshold,
        "feature_names": list(model.feature_names),
        "metrics_snapshot": metrics_snapshot.to_dict() if metrics_snapshot else None,
    }
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")
    except OSError as exc:
        raise ModelFormatError(f"cannot write model file {path!r}: {exc}") from exc


def load_model(path) -> EnsembleModel:
    """Reconstruct an EnsembleModel from a file written by save_model."""
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ModelFormatError(f"cannot open model file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ModelFormatError(
            f"{path}: not valid JSON (line {exc.lineno}): {exc.msg}"
        ) from exc

    for name in _REQUIRED_FIELDS:
        if name not in raw:
            raise ModelFormatError(f"{path}: missing required field {name!r}")
    if raw["format_version"] != FORMAT_VERSION:
        raise ModelFormatError(
            f"{path}: unsupported format_version {raw['format_version']!r} "
            f"(this build reads version {FORMAT_VERSION})"
        )
    selected = raw["selected_features"]
    for name in ("indices", "names"):
        if name not in selected:
            raise ModelFormatError(
                f"{path}: missing required field 'selected_features.{name}'"
            )
    if len(raw["members"]) != 5:
        raise ModelFormatError(
            f"{path}: expected 5 members, found {len(raw['members'])}"
        )

    try:
        return EnsembleModel(
            members=[deserialize_member(m) for m in raw["members"]],
            weights=np.asarray(raw["weights"], dtype=np.float64),
            selected_features=list(selected["indices"]),
            selected_feature_names=list(selected["names"]),
            scaler=ScalerParams(
                means=np.asarray(raw["scaler"]["means"], dtype=np.float64),
                stds=np.asarray(raw["scaler"]["stds"], dtype=np.float64),
            ),
            threshold=raw["threshold"],
            feature_names=list(raw.get("feature_names", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"{path}: malformed model content: {exc}") from exc


def load_metrics_snapshot(path) -> EvalReport | None:
    """The training-time metrics stored in a model file, if any."""
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    snapshot = raw.get("metrics_snapshot")
    return EvalReport.from_dict(snapshot) if snapshot else None
