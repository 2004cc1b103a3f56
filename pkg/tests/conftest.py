import csv
from pathlib import Path

import numpy as np
import pytest

from phishkit import Dataset, load_csv

REPO_ROOT = Path(__file__).resolve().parent.parent
PUBLIC_DATASET = REPO_ROOT / "data" / "dataset_phishing.csv"

needs_dataset = pytest.mark.dataset


def pytest_collection_modifyitems(config, items):
    if PUBLIC_DATASET.exists():
        return
    skip = pytest.mark.skip(
        reason=f"public dataset not found at {PUBLIC_DATASET}; see README"
    )
    for item in items:
        if "dataset" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def public_data() -> Dataset:
    return load_csv(PUBLIC_DATASET)


def write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    return path


def make_synthetic(n=300, seed=7) -> tuple[np.ndarray, np.ndarray, list[str]]:
    """Six-column matrix with three informative features and noise."""
    rng = np.random.default_rng(seed)
    y = rng.integers(0, 2, n)
    X = np.column_stack([
        y * 2.0 + rng.normal(0, 0.6, n),
        -y + rng.normal(0, 0.8, n),
        rng.normal(5, 2, n),
        rng.integers(0, 3, n).astype(float),
        np.where(y == 1, rng.normal(1, 1, n), rng.normal(0, 1, n)),
        rng.normal(0, 1, n),
    ])
    names = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta"]
    return X, y, names


@pytest.fixture
def synthetic_dataset() -> Dataset:
    X, y, names = make_synthetic()
    return Dataset(features=X, labels=y.astype(np.int64), feature_names=names)


@pytest.fixture
def synthetic_csv(tmp_path):
    X, y, names = make_synthetic()
    rows = [
        [f"http://site{i}.example.com", *X[i].tolist(),
         "phishing" if y[i] else "legitimate"]
        for i in range(len(y))
    ]
    return write_csv(tmp_path / "synthetic.csv", ["url", *names, "status"], rows)
