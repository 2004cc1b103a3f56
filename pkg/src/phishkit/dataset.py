"""Loading the feature CSV and producing stratified train/test splits.

The expected input is a comma-delimited UTF-8 CSV with a header row, one
label column (``status`` by default) holding either the strings
``phishing``/``legitimate`` or the integers ``1``/``0``, and numeric cells
everywhere else.  An optional ``url`` column is kept as row metadata and
excluded from the feature matrix.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .errors import DataError

_LABEL_MAP = {"phishing": 1, "legitimate": 0, "1": 1, "0": 0}


@dataclass(frozen=True)
class Dataset:
    """An immutable feature matrix with binary labels (1 = phishing)."""

    features: np.ndarray
    labels: np.ndarray
    feature_names: list[str]
    urls: list[str] | None = None

    def __post_init__(self):
        if self.features.ndim != 2:
            raise ValueError("features must be a 2-D matrix")
        if self.features.shape[0] != self.labels.shape[0]:
            raise ValueError(
                f"row count mismatch: {self.features.shape[0]} feature rows "
                f"vs {self.labels.shape[0]} labels"
            )
        if len(self.feature_names) != self.features.shape[1]:
            raise ValueError(
                f"{len(self.feature_names)} feature names for "
                f"{self.features.shape[1]} columns"
            )
        if len(set(self.feature_names)) != len(self.feature_names):
            raise ValueError("feature names must be unique")
        if self.labels.size and not np.isin(self.labels, (0, 1)).all():
            raise ValueError("labels must be 0 or 1")
        self.features.flags.writeable = False
        self.labels.flags.writeable = False

    @property
    def n_samples(self) -> int:
        return self.features.shape[0]

    @property
    def n_features(self) -> int:
        return self.features.shape[1]

    def select_rows(self, index: np.ndarray) -> "Dataset":
        urls = [self.urls[i] for i in index] if self.urls is not None else None
        return Dataset(
            features=self.features[index].copy(),
            labels=self.labels[index].copy(),
            feature_names=list(self.feature_names),
            urls=urls,
        )


@dataclass(frozen=True)
class DataSplit:
    """A stratified train/test partition of a source dataset.

    ``train_indices``/``test_indices`` refer to rows of the source dataset
    and together form a permutation of ``range(n_samples)``.
    """

    train: Dataset
    test: Dataset
    seed: int
    test_fraction: float
    train_indices: np.ndarray = field(repr=False, default=None)
    test_indices: np.ndarray = field(repr=False, default=None)


def load_csv(path, label_column: str = "status") -> Dataset:
    """Load a feature CSV, encode labels, and validate every cell.

    Raises :class:`DataError` naming the offending row (1-based, header is
    row 1) and column for any cell that does not parse.  Rows with empty
    feature cells are rejected, not imputed.
    """
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot open dataset file {path!r}: {exc}") from exc

    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"{path}: file is empty") from None

        if label_column not in header:
            raise DataError(
                f"{path}: label column {label_column!r} not found in header"
            )
        label_idx = header.index(label_column)
        url_idx = header.index("url") if "url" in header else None

        feature_names = [
            name
            for i, name in enumerate(header)
            if i != label_idx and i != url_idx
        ]
        if len(set(feature_names)) != len(feature_names):
            raise DataError(f"{path}: duplicate feature column names in header")

        rows: list[list[float]] = []
        labels: list[int] = []
        urls: list[str] = []
        bad_cells: list[str] = []

        for row_no, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise DataError(
                    f"{path}: row {row_no} has {len(row)} cells, expected "
                    f"{len(header)}"
                )
            raw_label = row[label_idx].strip()
            if raw_label not in _LABEL_MAP:
                raise DataError(
                    f"{path}: row {row_no}: unknown label value {raw_label!r} "
                    "(expected phishing/legitimate or 1/0)"
                )
            values = []
            for col_idx, cell in enumerate(row):
                if col_idx == label_idx or col_idx == url_idx:
                    continue
                try:
                    value = float(cell)
                except ValueError:
                    value = np.nan
                if not np.isfinite(value):
                    bad_cells.append(
                        f"row {row_no}, column {header[col_idx]!r}: {cell!r}"
                    )
                    continue
                values.append(value)
            if len(values) == len(feature_names):
                rows.append(values)
                labels.append(_LABEL_MAP[raw_label])
                if url_idx is not None:
                    urls.append(row[url_idx])

        if bad_cells:
            shown = "; ".join(bad_cells[:5])
            raise DataError(
                f"{path}: {len(bad_cells)} non-numeric or missing feature "
                f"cell(s), e.g. {shown}"
            )
        if not rows:
            raise DataError(f"{path}: no data rows")

    return Dataset(
        features=np.array(rows, dtype=np.float64),
        labels=np.array(labels, dtype=np.int64),
        feature_names=feature_names,
        urls=urls if url_idx is not None else None,
    )


def stratified_split(
    data: Dataset, test_fraction: float = 0.2, seed: int = 42
) -> DataSplit:
    """Partition rows into train/test, preserving class proportions to ±1 row.

    Deterministic for a fixed ``(data, test_fraction, seed)``.  Row order
    within each side follows the source order.
    """
    if not 0.0 < test_fraction < 1.0:
        raise ValueError(f"test_fraction must be in (0, 1), got {test_fraction}")

    rng = np.random.default_rng(seed)
    test_parts = []
    for cls in (0, 1):
        cls_rows = np.flatnonzero(data.labels == cls)
        if cls_rows.size < 2:
            raise ValueError(
                f"class {cls} has {cls_rows.size} row(s); need at least 2"
            )
        n_test = int(test_fraction * cls_rows.size + 0.5)
        n_test = min(max(n_test, 1), cls_rows.size - 1)
        test_parts.append(rng.permutation(cls_rows)[:n_test])

    test_idx = np.sort(np.concatenate(test_parts))
    mask = np.ones(data.n_samples, dtype=bool)
    mask[test_idx] = False
    train_idx = np.flatnonzero(mask)

    return DataSplit(
        train=data.select_rows(train_idx),
        test=data.select_rows(test_idx),
        seed=seed,
        test_fraction=test_fraction,
        train_indices=train_idx,
        test_indices=test_idx,
    )
