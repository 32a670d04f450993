"""Permutation importance, Pearson correlation and the impact labels."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverageability.inspection import (
    UndefinedCorrelation,
    betainc,
    classify_impact,
    impact_table,
    importance_text,
    pearson_correlation,
    permutation_importance,
)
from coverageability.learners.tree import RegressionTree


def pearson_oracle(x, y):
    """r from plain sums; p by integrating the Student t density numerically."""
    integrate = pytest.importorskip("scipy.integrate")
    n = len(x)
    mx = math.fsum(x) / n
    my = math.fsum(y) / n
    sxy = math.fsum((a - mx) * (b - my) for a, b in zip(x, y))
    sxx = math.fsum((a - mx) ** 2 for a in x)
    syy = math.fsum((b - my) ** 2 for b in y)
    r = sxy / math.sqrt(sxx * syy)
    df = n - 2
    t = abs(r) * math.sqrt(df / (1 - r * r))
    c = math.exp(math.lgamma((df + 1) / 2) - math.lgamma(df / 2)) / math.sqrt(df * math.pi)

    def density(u):
        return c * (1 + u * u / df) ** (-(df + 1) / 2)

    tail, _ = integrate.quad(density, t, math.inf, epsabs=1e-14, epsrel=1e-13)
    return r, 2 * tail


PEARSON_FIXTURES = [
    ([1, 2, 3, 4, 5], [2, 1, 4, 3, 5]),
    ([0.1, 0.4, 0.2, 0.9, 0.5, 0.3], [3.0, 2.5, 2.9, 1.0, 2.2, 2.8]),
    (list(range(12)), [3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8]),
]


class TestPearson:
    @pytest.mark.parametrize("x, y", PEARSON_FIXTURES)
    def test_matches_direct_formula(self, x, y):
        r, p = pearson_correlation(np.array(x, float), np.array(y, float))
        r0, p0 = pearson_oracle([float(v) for v in x], [float(v) for v in y])
        assert abs(r - r0) <= 1e-9
        assert abs(p - p0) <= 1e-9

    def test_random_fixtures(self, np_rng):
        for n in (8, 30, 200):
            x = np_rng.normal(size=n)
            y = 0.3 * x + np_rng.normal(size=n)
            r, p = pearson_correlation(x, y)
            r0, p0 = pearson_oracle(x.tolist(), y.tolist())
            assert abs(r - r0) <= 1e-9 and abs(p - p0) <= 1e-9

    def test_scipy_agrees(self, np_rng):
        stats = pytest.importorskip("scipy.stats")
        x = np_rng.normal(size=50)
        y = x + np_rng.normal(size=50)
        r, p = pearson_correlation(x, y)
        ref = stats.pearsonr(x, y)
        assert r == pytest.approx(ref[0], abs=1e-12)
        assert p == pytest.approx(ref[1], rel=1e-9)

    def test_constant_is_undefined(self):
        with pytest.raises(UndefinedCorrelation):
            pearson_correlation(np.ones(5), np.arange(5.0))

    @settings(max_examples=100, deadline=None)
    @given(
        st.floats(min_value=0.1, max_value=50),
        st.floats(min_value=0.1, max_value=50),
        st.floats(min_value=0, max_value=1),
    )
    def test_incomplete_beta_symmetry(self, a, b, x):
        # snap x so that x and 1 - x are exact complements in floating point
        x = 1.0 - (1.0 - x)
        assert betainc(a, b, x) + betainc(b, a, 1 - x) == pytest.approx(1.0, abs=1e-10)


class TestImpact:
    @pytest.mark.parametrize(
        "r, p, label",
        [(-0.00820, 0.297, "Unknown"), (0.14445, 0.0009, "Positive"), (-0.31905, 1e-30, "Negative")],
    )
    def test_reference_triples(self, r, p, label):
        assert classify_impact(r, p) == label

    def test_threshold_is_inclusive(self):
        assert classify_impact(0.2, 0.05) == "Positive"
        assert classify_impact(0.2, 0.0500001) == "Unknown"
        assert classify_impact(0.0, 0.0) == "Unknown"

    def test_table_marks_constant_columns(self, np_rng):
        X = np.c_[np_rng.normal(size=40), np.ones(40)]
        y = X[:, 0] + 0.1 * np_rng.normal(size=40)
        recs = impact_table(X, y, ["a", "b"], ["a", "b"])
        assert [r.impact for r in recs] == ["Positive", "Unknown"]


class TestPermutationImportance:
    def test_unused_feature_scores_exactly_zero(self, np_rng):
        X = np_rng.uniform(size=(150, 3))
        y = (X[:, 0] > 0.5) + 0.5 * (X[:, 2] > 0.3)
        tree = RegressionTree(max_depth=3).fit(X, y.astype(float))
        assert 1 not in tree.used_features()
        rep = permutation_importance(tree.predict, X, y, ["a", "b", "c"], repeats=20, seed=1)
        assert np.all(rep.drops[1] == 0.0)
        assert rep.top(1) == ["a"]

    def test_identity_permutation_gives_zero(self, np_rng):
        X = np_rng.normal(size=(50, 2))
        y = X[:, 0] - X[:, 1]
        rep = permutation_importance(
            lambda Z: Z[:, 0] - Z[:, 1], X, y, ["a", "b"], repeats=5, seed=0, permute=lambda rng, n: np.arange(n)
        )
        assert np.all(rep.drops == 0.0)

    def test_signal_beats_noise(self, np_rng):
        X = np_rng.normal(size=(200, 3))
        y = 2 * X[:, 1]
        rep = permutation_importance(lambda Z: 2 * Z[:, 1], X, y, ["n0", "x", "n1"], repeats=10, seed=3)
        assert rep.top(1) == ["x"]
        assert rep.ranks.tolist() == [2, 1, 3]
        # a perfect linear model loses about twice the variance share
        assert rep.mean_drop[1] == pytest.approx(2.0, abs=0.3)

    def test_seeded_and_order_independent(self, np_rng):
        X = np_rng.normal(size=(60, 3))
        y = X @ np.array([1.0, 0.5, 0.0])

        def f(Z):
            return Z @ np.array([1.0, 0.5, 0.0])

        a = permutation_importance(f, X, y, ["a", "b", "c"], repeats=4, seed=9)
        b = permutation_importance(f, X, y, ["a", "b", "c"], repeats=4, seed=9)
        assert importance_text(a) == importance_text(b)
        sub = permutation_importance(lambda Z: f(np.c_[Z, np.zeros(len(Z))]), X[:, :2], y, ["a", "b"], repeats=4, seed=9)
        assert np.array_equal(sub.drops, a.drops[:2])
