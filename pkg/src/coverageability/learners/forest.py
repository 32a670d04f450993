"""Random forest: bagged CART trees with per-split feature subsampling."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .base import check_xy, child_seeds
from .tree import CRITERIA, RegressionTree


@dataclass(frozen=True)
class ForestParams:
    n_estimators: int = 100
    criterion: str = "squared_error"
    max_depth: Optional[int] = 20
    min_samples_split: int = 2
    bootstrap: bool = True
    max_features: Optional[int] = None  # None means ceil(d / 3)

    def __post_init__(self):
        if self.n_estimators < 1:
            raise ValueError("n_estimators must be positive")
        if self.criterion not in CRITERIA:
            raise ValueError(f"unknown criterion {self.criterion!r}")


class RandomForestRegressor:
    kind = "rfr"

    def __init__(self, params: ForestParams = ForestParams()):
        self.params = params
        self.trees: list[RegressionTree] = []

    def fit(self, X, y, seed: int) -> "RandomForestRegressor":
        X, y = check_xy(X, y)
        p = self.params
        n, d = X.shape
        m = p.max_features or max(1, math.ceil(d / 3))
        self.trees = []
        for rng in child_seeds(seed, p.n_estimators):
            idx = rng.integers(0, n, n) if p.bootstrap else np.arange(n)
            tree = RegressionTree(p.criterion, p.max_depth, p.min_samples_split, m)
            self.trees.append(tree.fit(X[idx], y[idx], rng))
        return self

    def predict(self, X) -> np.ndarray:
        X = check_xy(X)
        acc = np.zeros(X.shape[0])
        for t in self.trees:
            acc += t.predict(X)
        return acc / len(self.trees)

    def to_json(self) -> dict:
        return {"trees": [t.to_json() for t in self.trees]}

    @classmethod
    def from_json(cls, params: ForestParams, d: dict) -> "RandomForestRegressor":
        m = cls(params)
        m.trees = [RegressionTree.from_json(t) for t in d["trees"]]
        return m
