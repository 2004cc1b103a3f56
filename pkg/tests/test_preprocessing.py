import numpy as np
import pytest

from phishkit import ScalerParams, fit_scaler, transform


class TestFitScaler:
    def test_simple_column(self):
        params = fit_scaler(np.array([[1.0], [2.0], [3.0]]))
        assert params.means[0] == pytest.approx(2.0)
        assert params.stds[0] == pytest.approx(np.sqrt(2.0 / 3.0), abs=1e-9)
        assert params.stds[0] == pytest.approx(0.816497, abs=1e-6)

    def test_constant_column(self):
        params = fit_scaler(np.array([[5.0], [5.0], [5.0]]))
        assert params.means[0] == 5.0
        assert params.stds[0] == 0.0

    def test_symmetric_pair(self):
        params = fit_scaler(np.array([[-1.0], [1.0]]))
        assert params.means[0] == 0.0
        assert params.stds[0] == 1.0

    def test_empty_matrix(self):
        with pytest.raises(ValueError):
            fit_scaler(np.empty((0, 3)))

    def test_negative_std_rejected(self):
        with pytest.raises(ValueError):
            ScalerParams(means=np.zeros(2), stds=np.array([1.0, -0.5]))


class TestTransform:
    def test_fit_then_transform_self(self):
        X = np.array([[1.0], [2.0], [3.0]])
        out = transform(fit_scaler(X), X)
        assert out[:, 0] == pytest.approx([-1.224745, 0.0, 1.224745], abs=1e-6)

    def test_constant_column_maps_to_zero(self):
        params = fit_scaler(np.array([[5.0], [5.0]]))
        out = transform(params, np.array([[9.0], [-2.0], [5.0]]))
        assert np.array_equal(out, np.zeros((3, 1)))

    def test_train_columns_become_standard(self):
        rng = np.random.default_rng(0)
        X = np.column_stack([
            rng.normal(20, 7, 500),
            rng.exponential(3.0, 500),
            np.full(500, 2.5),  # degenerate
            rng.integers(0, 2, 500).astype(float),
        ])
        out = transform(fit_scaler(X), X)
        for j in (0, 1, 3):
            assert abs(out[:, j].mean()) < 1e-9
            assert abs(out[:, j].var() - 1.0) < 1e-9
        assert np.array_equal(out[:, 2], np.zeros(500))

    def test_dimension_mismatch(self):
        params = fit_scaler(np.ones((4, 3)))
        with pytest.raises(ValueError, match="columns"):
            transform(params, np.ones((2, 5)))

    def test_single_vector(self):
        params = fit_scaler(np.array([[0.0, 10.0], [2.0, 30.0]]))
        out = transform(params, np.array([1.0, 20.0]))
        assert out.shape == (2,)
        assert out == pytest.approx([0.0, 0.0])

    def test_test_data_uses_train_parameters(self):
        train = np.array([[0.0], [10.0]])
        test = np.array([[5.0], [15.0]])
        params = fit_scaler(train)
        out = transform(params, test)
        assert out[:, 0] == pytest.approx([0.0, 2.0])
