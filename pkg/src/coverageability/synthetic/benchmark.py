"""Synthetic regression benchmark with a known nonlinear target.

Ten informative columns feed four terms: two saturating ramps, a product
with an additive part, and a geometric mean. The other columns are noise. The standardized sum is
squashed into (0, 1) and perturbed by Gaussian noise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

INFORMATIVE = 10


@dataclass(frozen=True)
class Benchmark:
    X: np.ndarray
    y: np.ndarray
    signal: np.ndarray  # noise-free target
    columns: tuple[str, ...]
    informative: tuple[int, ...]


def _terms(X: np.ndarray) -> list[np.ndarray]:
    return [
        np.tanh(3.0 * (X[:, 0] + X[:, 1] + X[:, 2] - 1.5)),
        np.tanh(3.0 * (X[:, 3] + X[:, 4] - 1.0)),
        X[:, 5] * X[:, 6] + X[:, 7],
        np.sqrt(X[:, 8] * X[:, 9]),
    ]


def signal_of(X: np.ndarray) -> np.ndarray:
    """Noise-free target; term scaling uses fixed population moments of U(0,1) inputs."""
    s = np.zeros(X.shape[0])
    for t, (mu, sd) in zip(_terms(X), _MOMENTS):
        s += (t - mu) / sd
    return 1.0 / (1.0 + np.exp(-0.8 * s))


def _population_moments(n: int = 400_000) -> list[tuple[float, float]]:
    U = np.random.default_rng(12345).random((n, INFORMATIVE))
    return [(float(t.mean()), float(t.std())) for t in _terms(U)]


_MOMENTS = _population_moments()


def make_benchmark(n: int = 2000, n_noise: int = 10, sigma: float = 0.05, seed: int = 0) -> Benchmark:
    rng = np.random.default_rng(seed)
    d = INFORMATIVE + n_noise
    X = rng.random((n, d))
    sig = signal_of(X)
    y = sig + rng.normal(0.0, sigma, n)
    cols = tuple(f"M{j:02d}" for j in range(d))
    return Benchmark(X, y, sig, cols, tuple(range(INFORMATIVE)))


@dataclass
class BenchmarkRun:
    reports: dict  # learner kind -> EvaluationReport on the held-out rows
    results: dict  # learner kind -> GridResult
    X_test: np.ndarray  # scaled
    y_test: np.ndarray
    columns: tuple[str, ...]


def run_benchmark(bench: Benchmark, seed: int, grid=None, train_fraction: float = 0.75, workers: int = 1) -> BenchmarkRun:
    """Split, scale, grid-search the four learners and the voter, score on held-out rows."""
    from ..dataset import RobustScalerStats, split_indices
    from ..learners.model import BASE_KINDS
    from ..selection import REDUCED_GRID, evaluate, grid_search, make_cv_plan, voter_search

    grid = grid or REDUCED_GRID
    rng = np.random.default_rng(seed)
    tr, te = split_indices(len(bench.y), train_fraction, rng)
    stats = RobustScalerStats.fit(bench.X[tr], bench.columns)
    Xtr, Xte = stats.transform(bench.X[tr]), stats.transform(bench.X[te])
    ytr, yte = bench.y[tr], bench.y[te]
    plan = make_cv_plan(len(ytr), seed)
    results = {k: grid_search(k, grid[k], Xtr, ytr, plan, seed, workers) for k in BASE_KINDS}
    results["vor"] = voter_search([results[k] for k in BASE_KINDS], grid["vor"]["weights"], ytr, plan)
    reports = {k: evaluate(yte, r.estimator.predict(Xte)) for k, r in results.items()}
    return BenchmarkRun(reports, results, Xte, yte, bench.columns)
