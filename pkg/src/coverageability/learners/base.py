"""Shared pieces for the regressors."""

from __future__ import annotations

import numpy as np


class TrainingError(RuntimeError):
    """Raised when fitting cannot produce a usable model (e.g. divergence)."""


def child_seeds(seed: int, n: int) -> list[np.random.Generator]:
    """`n` independent generators derived from one seed; stable per index."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(n)]


def check_xy(X, y=None):
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise ValueError("X must be two-dimensional")
    if y is None:
        return X
    y = np.asarray(y, dtype=float)
    if y.shape != (X.shape[0],):
        raise ValueError(f"y has shape {y.shape}, expected ({X.shape[0]},)")
    if X.shape[0] == 0:
        raise ValueError("cannot fit on zero rows")
    return X, y


def array_to_json(a: np.ndarray) -> list:
    return np.asarray(a).tolist()

