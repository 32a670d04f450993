"""Numerical checks for the five regressors and the model file."""

import json

import numpy as np
import pytest

from coverageability.dataset import RobustScalerStats
from coverageability.learners.base import TrainingError
from coverageability.learners.forest import ForestParams, RandomForestRegressor
from coverageability.learners.hgb import HGBParams, HistGradientBoostingRegressor, apply_bins, bin_edges
from coverageability.learners.mlp import MLPParams, MLPRegressor, init_layers, loss_and_grad
from coverageability.learners.model import KINDS, SchemaMismatch, TrainedModel, fit_estimator, make_estimator, wrap
from coverageability.learners.sgd import SGDParams, SGDRegressor
from coverageability.learners.tree import RegressionTree
from coverageability.learners.voting import VotingRegressor


def smooth_problem(rng, n=300, d=5):
    X = rng.uniform(-1, 1, size=(n, d))
    y = np.sin(2 * X[:, 0]) + X[:, 1] * X[:, 2] + 0.05 * rng.normal(size=n)
    return X, y


# ---------------------------------------------------------------------- SGD


class TestSGD:
    def test_recovers_least_squares_slope(self, np_rng):
        X = np_rng.normal(size=(300, 3))
        y = X @ np.array([1.5, -2.0, 0.5]) + 0.3
        oracle = np.linalg.lstsq(np.c_[X, np.ones(len(y))], y, rcond=None)[0]
        m = SGDRegressor(SGDParams()).fit(X, y, seed=0)
        assert np.max(np.abs(m.coef_ - oracle[:3])) <= 1e-2
        assert abs(m.intercept_ - oracle[3]) <= 1e-2

    def test_zero_feature_gets_zero_weight(self, np_rng):
        X = np.c_[np_rng.normal(size=200), np.zeros(200)]
        m = SGDRegressor(SGDParams()).fit(X, 3 * X[:, 0], seed=1)
        assert m.coef_[1] == 0.0

    @pytest.mark.parametrize("schedule", ["invscaling", "optimal", "constant", "adaptive"])
    def test_schedules_fit(self, np_rng, schedule):
        X = np_rng.normal(size=(200, 2))
        y = X[:, 0] - X[:, 1]
        m = SGDRegressor(SGDParams(learning_rate=schedule)).fit(X, y, seed=2)
        assert np.mean((m.predict(X) - y) ** 2) < 0.05

    def test_huber_resists_outliers(self, np_rng):
        X = np_rng.normal(size=(300, 1))
        y = 2.0 * X[:, 0]
        y[:15] += 50.0
        sq = SGDRegressor(SGDParams(learning_rate="constant")).fit(X, y, seed=0)
        hub = SGDRegressor(SGDParams(learning_rate="constant", loss="huber", epsilon=1.0)).fit(X, y, seed=0)
        assert abs(hub.intercept_) < abs(sq.intercept_)
        assert abs(hub.coef_[0] - 2.0) < 0.2

    def test_divergence_raises(self, np_rng):
        X = 1e3 * np_rng.normal(size=(50, 2))
        with pytest.raises(TrainingError):
            SGDRegressor(SGDParams(learning_rate="constant", eta0=10.0)).fit(X, X[:, 0], seed=0)


# ---------------------------------------------------------------------- MLP


class TestMLP:
    @pytest.mark.parametrize("activation", ["relu", "tanh", "logistic"])
    def test_gradients_match_central_differences(self, activation):
        rng = np.random.default_rng(99)
        X = rng.normal(size=(17, 4))
        y = rng.normal(size=17)
        Ws, bs = init_layers([4, 6, 5, 1], rng)
        alpha = 0.01
        _, gW, gb = loss_and_grad(Ws, bs, X, y, activation, alpha)
        params = [(W, g) for W, g in zip(Ws, gW)] + [(b, g) for b, g in zip(bs, gb)]
        h = 1e-6
        worst = 0.0
        for _ in range(100):
            arr, grad = params[rng.integers(len(params))]
            idx = tuple(rng.integers(s) for s in arr.shape)
            keep = arr[idx]
            arr[idx] = keep + h
            up = loss_and_grad(Ws, bs, X, y, activation, alpha)[0]
            arr[idx] = keep - h
            down = loss_and_grad(Ws, bs, X, y, activation, alpha)[0]
            arr[idx] = keep
            numeric = (up - down) / (2 * h)
            analytic = grad[idx]
            scale = max(abs(numeric), abs(analytic), 1e-8)
            worst = max(worst, abs(numeric - analytic) / scale)
        assert worst <= 1e-5

    def test_learns_smooth_target(self, np_rng):
        X, y = smooth_problem(np_rng)
        m = MLPRegressor(MLPParams(hidden=(32,), activation="tanh", epochs=200)).fit(X, y, seed=0)
        assert np.mean((m.predict(X) - y) ** 2) < np.var(y)

    def test_zero_epochs_keeps_initial_net(self, np_rng):
        X, y = smooth_problem(np_rng, n=40)
        a = MLPRegressor(MLPParams(hidden=(8,), epochs=0)).fit(X, y, seed=5)
        b = MLPRegressor(MLPParams(hidden=(8,), epochs=0)).fit(X, y, seed=5)
        np.testing.assert_array_equal(a.predict(X), b.predict(X))


# --------------------------------------------------------------------- trees


class TestTree:
    def test_depth_one_step(self):
        X = np.linspace(0, 1, 11)[:, None]
        y = (X[:, 0] > 0.5).astype(float)
        t = RegressionTree(max_depth=1).fit(X, y)
        assert t.feature[0] == 0
        assert t.threshold[0] == pytest.approx(0.55)
        np.testing.assert_array_equal(t.predict(X), y)

    def test_constant_target_is_one_leaf(self, np_rng):
        X = np_rng.normal(size=(30, 3))
        t = RegressionTree().fit(X, np.full(30, 2.5))
        assert len(t.feature) == 1
        assert np.all(t.predict(X) == 2.5)

    def test_absolute_error_uses_median(self):
        X = np.zeros((5, 1))
        y = np.array([0.0, 0.0, 1.0, 10.0, 100.0])
        assert RegressionTree(criterion="absolute_error").fit(X, y).predict(X)[0] == 1.0

    def test_sklearn_split_agrees(self, np_rng):
        tree = pytest.importorskip("sklearn.tree")
        X = np_rng.normal(size=(120, 4))
        y = X[:, 2] ** 2 + 0.1 * X[:, 0]
        ours = RegressionTree(max_depth=1).fit(X, y)
        ref = tree.DecisionTreeRegressor(max_depth=1).fit(X, y).tree_
        assert ours.feature[0] == ref.feature[0]
        # the reference stores thresholds in single precision
        assert ours.threshold[0] == pytest.approx(ref.threshold[0], abs=1e-6)


class TestForest:
    def test_prediction_is_exact_tree_mean(self, np_rng):
        X, y = smooth_problem(np_rng, n=150)
        f = RandomForestRegressor(ForestParams(n_estimators=15, max_depth=6)).fit(X, y, seed=4)
        acc = np.zeros(len(X))
        for t in f.trees:
            acc += t.predict(X)
        assert np.array_equal(f.predict(X), acc / len(f.trees))

    def test_prediction_within_target_range(self, np_rng):
        X, y = smooth_problem(np_rng, n=150)
        f = RandomForestRegressor(ForestParams(n_estimators=10)).fit(X, y, seed=1)
        p = f.predict(np_rng.uniform(-3, 3, size=(200, X.shape[1])))
        assert p.min() >= y.min() and p.max() <= y.max()

    def test_seed_determinism(self, np_rng):
        X, y = smooth_problem(np_rng, n=100)
        a = RandomForestRegressor(ForestParams(n_estimators=5)).fit(X, y, seed=8).predict(X)
        b = RandomForestRegressor(ForestParams(n_estimators=5)).fit(X, y, seed=8).predict(X)
        assert np.array_equal(a, b)


class TestBoosting:
    def test_stagewise_telescoping(self, np_rng):
        X, y = smooth_problem(np_rng)
        m = HistGradientBoostingRegressor(HGBParams(max_iter=40, max_depth=3)).fit(X, y)
        Xb = m.bin(X)
        stages = list(m.staged_predict(X))
        assert len(stages) == 41
        assert np.all(stages[0] == m.init_)
        for k, t in enumerate(m.trees):
            assert np.array_equal(stages[k + 1], stages[k] + m.params.learning_rate * t.predict_binned(Xb))
        assert np.array_equal(stages[-1], m.predict(X))

    def test_first_stage_from_mean(self, np_rng):
        X, y = smooth_problem(np_rng, n=80)
        m = HistGradientBoostingRegressor(HGBParams(max_iter=1, max_depth=1, min_samples_leaf=1)).fit(X, y)
        assert m.init_ == pytest.approx(np.mean(y), abs=1e-15)
        # one stump moves each row by a tenth of its leaf's mean residual
        leaf = m.trees[0].predict_binned(m.bin(X))
        for v in np.unique(leaf):
            rows = leaf == v
            assert v == pytest.approx(np.mean(y[rows] - m.init_), abs=1e-12)

    def test_binning(self):
        col = np.array([3.0, 1.0, 2.0, 2.0])
        edges = bin_edges(col)
        np.testing.assert_array_equal(edges, [1.5, 2.5])
        np.testing.assert_array_equal(apply_bins(col[:, None], [edges])[:, 0], [2, 0, 1, 1])

    def test_many_values_at_most_255_bins(self, np_rng):
        col = np_rng.normal(size=5000)
        assert len(bin_edges(col)) <= 254

    def test_lad_starts_at_median(self, np_rng):
        X, _ = smooth_problem(np_rng, n=51)
        y = np.exp(np_rng.normal(size=51))
        m = HistGradientBoostingRegressor(HGBParams(loss="least_absolute_deviation", max_iter=5)).fit(X, y)
        assert m.init_ == np.median(y)


class TestVoting:
    def members(self, values):
        class Const:
            def __init__(self, v):
                self.v = v

            def predict(self, X):
                return np.full(len(X), self.v)

        return [Const(v) for v in values]

    def test_weighted_mean(self):
        v = VotingRegressor(self.members([1.0, 2.0, 3.0, 6.0]), [0, 1 / 6, 2 / 6, 3 / 6])
        assert v.predict(np.zeros((2, 1)))[0] == pytest.approx((2 + 6 + 18) / 6, abs=1e-12)

    def test_equal_weights_default(self):
        v = VotingRegressor(self.members([1.0, 2.0, 3.0, 6.0]))
        assert v.predict(np.zeros((1, 1)))[0] == 3.0

    def test_zero_weight_member_cannot_poison(self):
        v = VotingRegressor(self.members([np.nan, 1.0, 1.0, 1.0]), [0, 1, 1, 1])
        assert v.predict(np.zeros((1, 1)))[0] == 1.0

    @pytest.mark.parametrize("bad", [[0, 0, 0, 0], [1, -1, 1, 1], [1, 1]])
    def test_bad_weights(self, bad):
        with pytest.raises(ValueError):
            VotingRegressor(self.members([1.0] * 4), bad)


# ----------------------------------------------------------------- model file

SMALL = {
    "sgdr": {},
    "mlpr": {"hidden": [8], "epochs": 5},
    "rfr": {"n_estimators": 4, "max_depth": 4},
    "hgbr": {"max_iter": 5, "max_depth": 2},
}


def fitted(kind, X, y, seed=0):
    if kind != "vor":
        return fit_estimator(kind, SMALL[kind], X, y, seed)
    members = [fit_estimator(k, SMALL[k], X, y, seed) for k in SMALL]
    return VotingRegressor(members, [0, 1 / 6, 2 / 6, 3 / 6])


class TestModelFile:
    @pytest.mark.parametrize("kind", KINDS)
    def test_round_trip_is_exact(self, np_rng, kind):
        X, y = smooth_problem(np_rng, n=60, d=3)
        cols = ["a", "b", "c"]
        scaler = RobustScalerStats.fit(X, cols)
        Xs = scaler.transform(X)
        model = wrap(kind, {}, fitted(kind, Xs, y), cols, scaler, X, 0)
        text = model.dumps()
        back = TrainedModel.loads(text)
        assert back.dumps() == text
        assert np.array_equal(back.predict_raw(X), model.predict_raw(X))

    def test_schema_version_checked(self, np_rng):
        X, y = smooth_problem(np_rng, n=30, d=3)
        X = X[:, :2]
        scaler = RobustScalerStats.fit(X, ["a", "b"])
        d = wrap("sgdr", {}, fitted("sgdr", X, y), ["a", "b"], scaler, X, 0).to_json()
        d["schema"] = "cvg-schema/0"
        with pytest.raises(SchemaMismatch):
            TrainedModel.from_json(json.loads(json.dumps(d)))

    def test_missing_feature(self, np_rng):
        X, y = smooth_problem(np_rng, n=30, d=3)
        X = X[:, :2]
        scaler = RobustScalerStats.fit(X, ["a", "b"])
        model = wrap("sgdr", {}, fitted("sgdr", X, y), ["a", "b"], scaler, X, 0)
        with pytest.raises(SchemaMismatch):
            model.predict({"a": 1.0})

    def test_unknown_hyperparameter(self):
        with pytest.raises(ValueError):
            make_estimator("rfr", {"n_trees": 3})
