"""Pipeline configuration shared by the library entry points and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

from .classifiers import HyperParams

WEIGHTING_MODES = ("auc", "accuracy", "uniform")


@dataclass(frozen=True)
class PipelineConfig:
    label_column: str = "status"
    test_fraction: float = 0.2
    seed: int = 42
    top_n: int = 20
    bins: int = 10
    weighting: str = "auc"
    threshold: float = 0.5
    hyperparams: HyperParams = field(default_factory=HyperParams)

    def __post_init__(self):
        if not 0.0 < self.test_fraction < 1.0:
            raise ValueError("test_fraction must be in (0, 1)")
        if self.top_n < 1:
            raise ValueError("top_n must be positive")
        if self.bins < 2:
            raise ValueError("bins must be >= 2")
        if self.weighting not in WEIGHTING_MODES:
            raise ValueError(
                f"weighting must be one of {WEIGHTING_MODES}, got {self.weighting!r}"
            )
        if not 0.0 < self.threshold < 1.0:
            raise ValueError("threshold must be in (0, 1)")

    def to_dict(self) -> dict:
        return {
            "label_column": self.label_column,
            "test_fraction": self.test_fraction,
            "seed": self.seed,
            "top_n": self.top_n,
            "bins": self.bins,
            "weighting": self.weighting,
            "threshold": self.threshold,
            "hyperparams": self.hyperparams.to_dict(),
        }

    @staticmethod
    def from_dict(raw: dict) -> "PipelineConfig":
        raw = dict(raw)
        hp = raw.pop("hyperparams", None)
        return PipelineConfig(
            **raw,
            hyperparams=HyperParams.from_dict(hp) if hp else HyperParams(),
        )
