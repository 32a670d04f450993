"""Weighted average of the four base regressors."""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .base import check_xy


def normalize_weights(weights: Optional[Sequence[float]], n: int) -> tuple[float, ...]:
    if weights is None:
        return (1.0,) * n
    w = tuple(float(x) for x in weights)
    if len(w) != n:
        raise ValueError(f"expected {n} weights, got {len(w)}")
    if any(x < 0 for x in w):
        raise ValueError("voter weights must be non-negative")
    if sum(w) <= 0:
        raise ValueError("voter weights must not all be zero")
    return w


class VotingRegressor:
    kind = "vor"

    def __init__(self, members: Sequence, weights: Optional[Sequence[float]] = None):
        self.members = list(members)
        self.weights = normalize_weights(weights, len(self.members))

    def combine(self, preds: Sequence[np.ndarray]) -> np.ndarray:
        acc = np.zeros_like(np.asarray(preds[0], dtype=float))
        for w, p in zip(self.weights, preds):
            if w:
                acc = acc + w * np.asarray(p, dtype=float)
        return acc / sum(self.weights)

    def predict(self, X) -> np.ndarray:
        X = check_xy(X)
        # members with zero weight are skipped, so a wild member cannot leak NaN
        return self.combine([m.predict(X) if w else np.zeros(X.shape[0]) for m, w in zip(self.members, self.weights)])
