import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phishkit import DataError, Dataset, load_csv, stratified_split

from conftest import make_synthetic, needs_dataset, write_csv


def fixture_csv(tmp_path, rows, header=("url", "f1", "f2", "status")):
    return write_csv(tmp_path / "fixture.csv", header, rows)


class TestLoadCsv:
    def test_four_row_encoding(self, tmp_path):
        path = fixture_csv(tmp_path, [
            ["http://a.com", 1.0, 2.0, "phishing"],
            ["http://b.com", 3.0, 4.0, "legitimate"],
            ["http://c.com", 5.0, 6.0, "phishing"],
            ["http://d.com", 7.0, 8.0, "legitimate"],
        ])
        data = load_csv(path)
        assert data.labels.tolist() == [1, 0, 1, 0]
        assert data.features.shape == (4, 2)
        assert data.feature_names == ["f1", "f2"]
        assert data.urls == ["http://a.com", "http://b.com", "http://c.com",
                             "http://d.com"]

    def test_integer_labels(self, tmp_path):
        path = fixture_csv(tmp_path, [
            ["u", 1.0, 2.0, "1"],
            ["v", 3.0, 4.0, "0"],
        ])
        assert load_csv(path).labels.tolist() == [1, 0]

    def test_non_numeric_cell_names_row_and_column(self, tmp_path):
        path = fixture_csv(tmp_path, [
            ["u", 1.0, 2.0, "phishing"],
            ["v", "abc", 4.0, "legitimate"],
        ])
        with pytest.raises(DataError, match=r"row 3.*'f1'.*'abc'"):
            load_csv(path)

    def test_empty_cell_rejected_with_count(self, tmp_path):
        path = fixture_csv(tmp_path, [
            ["u", "", 2.0, "phishing"],
            ["v", 3.0, "", "legitimate"],
            ["w", 5.0, 6.0, "phishing"],
        ])
        with pytest.raises(DataError, match="2 non-numeric or missing"):
            load_csv(path)

    def test_unknown_label_names_row(self, tmp_path):
        path = fixture_csv(tmp_path, [
            ["u", 1.0, 2.0, "phishing"],
            ["v", 3.0, 4.0, "maybe"],
        ])
        with pytest.raises(DataError, match="row 3.*'maybe'"):
            load_csv(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(DataError, match="cannot open"):
            load_csv(tmp_path / "nope.csv")

    def test_missing_label_column(self, tmp_path):
        path = fixture_csv(tmp_path, [["u", 1.0, 2.0, "phishing"]])
        with pytest.raises(DataError, match="'verdict' not found"):
            load_csv(path, label_column="verdict")

    def test_header_only_file(self, tmp_path):
        path = fixture_csv(tmp_path, [])
        with pytest.raises(DataError, match="no data rows"):
            load_csv(path)

    def test_label_column_flag(self, tmp_path):
        path = write_csv(tmp_path / "alt.csv", ["f1", "verdict"],
                         [[1.0, "phishing"], [2.0, "legitimate"]])
        data = load_csv(path, label_column="verdict")
        assert data.feature_names == ["f1"]
        assert data.urls is None

    @needs_dataset
    def test_public_dataset_shape(self, public_data):
        assert public_data.n_samples == 11430
        assert public_data.n_features == 87
        counts = np.bincount(public_data.labels)
        assert counts.tolist() == [5715, 5715]


class TestDatasetInvariants:
    def test_row_count_mismatch(self):
        with pytest.raises(ValueError, match="row count"):
            Dataset(np.zeros((3, 2)), np.zeros(2, dtype=np.int64), ["a", "b"])

    def test_duplicate_names(self):
        with pytest.raises(ValueError, match="unique"):
            Dataset(np.zeros((2, 2)), np.zeros(2, dtype=np.int64), ["a", "a"])

    def test_bad_label_values(self):
        with pytest.raises(ValueError, match="labels"):
            Dataset(np.zeros((2, 1)), np.array([0, 2]), ["a"])

    def test_features_immutable(self, synthetic_dataset):
        with pytest.raises(ValueError):
            synthetic_dataset.features[0, 0] = 99.0


class TestStratifiedSplit:
    def test_balanced_100_rows(self):
        X = np.arange(200, dtype=float).reshape(100, 2)
        y = np.array([0, 1] * 50)
        split = stratified_split(Dataset(X, y, ["a", "b"]), 0.2, seed=3)
        assert split.train.n_samples == 80
        assert split.test.n_samples == 20
        assert np.bincount(split.train.labels).tolist() == [40, 40]
        assert np.bincount(split.test.labels).tolist() == [10, 10]

    def test_deterministic(self, synthetic_dataset):
        a = stratified_split(synthetic_dataset, 0.25, seed=9)
        b = stratified_split(synthetic_dataset, 0.25, seed=9)
        assert np.array_equal(a.train_indices, b.train_indices)
        assert np.array_equal(a.test_indices, b.test_indices)
        assert np.array_equal(a.train.features, b.train.features)

    @pytest.mark.parametrize("fraction", [0.0, 1.0, -0.1, 1.5])
    def test_fraction_out_of_range(self, synthetic_dataset, fraction):
        with pytest.raises(ValueError, match="test_fraction"):
            stratified_split(synthetic_dataset, fraction, seed=1)

    def test_tiny_class_rejected(self):
        X = np.zeros((4, 1))
        y = np.array([1, 0, 0, 0])
        with pytest.raises(ValueError, match="class 1"):
            stratified_split(Dataset(X, y, ["a"]), 0.5, seed=1)

    @settings(max_examples=40, deadline=None)
    @given(
        seed=st.integers(0, 2**32 - 1),
        fraction=st.floats(0.05, 0.95),
        n=st.integers(10, 120),
    )
    def test_round_trip_and_proportions(self, seed, fraction, n):
        rng = np.random.default_rng(seed)
        X = rng.normal(size=(n, 3))
        y = np.array([0, 1] * (n // 2) + [0] * (n % 2))
        data = Dataset(X, y, ["a", "b", "c"])
        split = stratified_split(data, fraction, seed=seed)

        # partition: no overlap, no loss, source reproduced exactly
        merged = np.concatenate([split.train_indices, split.test_indices])
        assert np.array_equal(np.sort(merged), np.arange(n))
        rebuilt = np.empty_like(X)
        rebuilt[split.train_indices] = split.train.features
        rebuilt[split.test_indices] = split.test.features
        assert np.array_equal(rebuilt, X)

        # per-class test counts within 1 of the exact fraction
        for cls in (0, 1):
            exact = fraction * np.sum(y == cls)
            got = np.sum(split.test.labels == cls)
            assert abs(got - exact) <= 1.0

        # train class-1 share within 1/train_total of the source share
        src_share = y.mean()
        train_share = split.train.labels.mean()
        assert abs(train_share - src_share) <= 1.0 / split.train.n_samples + 1e-12

    def test_urls_follow_rows(self, tmp_path):
        X, y, names = make_synthetic(n=40)
        rows = [[f"http://u{i}.com", *X[i].tolist(),
                 "phishing" if y[i] else "legitimate"] for i in range(40)]
        data = load_csv(write_csv(tmp_path / "u.csv", ["url", *names, "status"], rows))
        split = stratified_split(data, 0.25, seed=5)
        for local, original in enumerate(split.test_indices):
            assert split.test.urls[local] == f"http://u{original}.com"
