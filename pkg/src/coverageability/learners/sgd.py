"""Linear regression fitted by per-sample stochastic gradient descent."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import TrainingError, check_xy

LOSSES = ("squared", "huber")
PENALTIES = ("l2", "l1", "elasticnet")
SCHEDULES = ("invscaling", "optimal", "constant", "adaptive")


@dataclass(frozen=True)
class SGDParams:
    loss: str = "squared"
    penalty: str = "l2"
    learning_rate: str = "invscaling"
    max_iter: int = 50
    alpha: float = 1e-4
    l1_ratio: float = 0.15
    eta0: float = 0.01
    power_t: float = 0.25
    epsilon: float = 0.1
    tol: float = 1e-3

    def __post_init__(self):
        if self.loss not in LOSSES:
            raise ValueError(f"unknown loss {self.loss!r}")
        if self.penalty not in PENALTIES:
            raise ValueError(f"unknown penalty {self.penalty!r}")
        if self.learning_rate not in SCHEDULES:
            raise ValueError(f"unknown schedule {self.learning_rate!r}")
        if self.max_iter < 0:
            raise ValueError("max_iter must be non-negative")


class SGDRegressor:
    kind = "sgdr"

    def __init__(self, params: SGDParams = SGDParams()):
        self.params = params
        self.coef_: np.ndarray | None = None
        self.intercept_ = 0.0

    def _penalty_grad(self, w: np.ndarray) -> np.ndarray:
        p = self.params
        if p.penalty == "l2":
            return p.alpha * w
        if p.penalty == "l1":
            return p.alpha * np.sign(w)
        return p.alpha * (p.l1_ratio * np.sign(w) + (1 - p.l1_ratio) * w)

    def _penalty(self, w: np.ndarray) -> float:
        p = self.params
        l1 = float(np.abs(w).sum())
        l2 = 0.5 * float(w @ w)
        if p.penalty == "l2":
            return p.alpha * l2
        if p.penalty == "l1":
            return p.alpha * l1
        return p.alpha * (p.l1_ratio * l1 + (1 - p.l1_ratio) * l2)

    def _loss(self, r: np.ndarray) -> float:
        if self.params.loss == "squared":
            return float(np.mean(0.5 * r * r))
        eps = self.params.epsilon
        a = np.abs(r)
        return float(np.mean(np.where(a <= eps, 0.5 * r * r, eps * (a - 0.5 * eps))))

    def fit(self, X, y, seed: int) -> "SGDRegressor":
        X, y = check_xy(X, y)
        p = self.params
        rng = np.random.default_rng(seed)
        n, d = X.shape
        w = np.zeros(d)
        b = 0.0
        t = 1
        eta = p.eta0
        t0 = 1.0 / (p.alpha * p.eta0)
        best = np.inf
        huber = p.loss == "huber"
        with np.errstate(over="ignore", invalid="ignore"):
            for _ in range(p.max_iter):
                for i in rng.permutation(n):
                    xi = X[i]
                    r = float(xi @ w) + b - y[i]
                    g = min(max(r, -p.epsilon), p.epsilon) if huber else r
                    if p.learning_rate == "invscaling":
                        eta = p.eta0 / t**p.power_t
                    elif p.learning_rate == "optimal":
                        eta = 1.0 / (p.alpha * (t0 + t))
                    w = w - eta * (g * xi + self._penalty_grad(w))
                    b -= eta * g
                    t += 1
                loss = self._loss(X @ w + b - y) + self._penalty(w)
                if not np.isfinite(loss) or not np.all(np.isfinite(w)) or not np.isfinite(b):
                    raise TrainingError("SGD diverged (non-finite loss)")
                if p.learning_rate == "adaptive" and loss > best - p.tol:
                    eta /= 2
                best = min(best, loss)
        self.coef_ = w
        self.intercept_ = b
        return self

    def predict(self, X) -> np.ndarray:
        X = check_xy(X)
        return X @ self.coef_ + self.intercept_

    def to_json(self) -> dict:
        return {"coef": self.coef_.tolist(), "intercept": self.intercept_}

    @classmethod
    def from_json(cls, params: SGDParams, d: dict) -> "SGDRegressor":
        m = cls(params)
        m.coef_ = np.array(d["coef"], dtype=float)
        m.intercept_ = float(d["intercept"])
        return m
