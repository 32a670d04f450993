"""CART regression trees, the building block of the forest."""

from __future__ import annotations

from typing import Optional

import numpy as np

CRITERIA = ("squared_error", "absolute_error")
LEAF = -1


def _midpoint(lo: float, hi: float) -> float:
    t = (lo + hi) / 2.0
    # guard against rounding up onto the upper value
    return lo if t >= hi else t


def _best_sse_split(xs: np.ndarray, ys: np.ndarray) -> tuple[float, int, int]:
    """Best cut over presorted columns: (cost, column, i) splitting rows [:i] | [i:].

    Ties go to the earlier column, then the earlier cut.
    """
    n = ys.shape[0]
    S = np.cumsum(ys, axis=0)
    Q = np.cumsum(ys * ys, axis=0)
    i = np.arange(1, n)[:, None]
    left = Q[:-1] - S[:-1] ** 2 / i
    right = (Q[-1] - Q[:-1]) - (S[-1] - S[:-1]) ** 2 / (n - i)
    cost = left + right
    cost[xs[1:] <= xs[:-1]] = np.inf
    flat = cost.T.ravel()
    k = int(np.argmin(flat))
    col, pos = divmod(k, n - 1)
    return float(flat[k]), col, pos + 1


def _abs_dev(v: np.ndarray) -> float:
    return float(np.abs(v - np.median(v)).sum())


def _best_abs_split(xs: np.ndarray, ys: np.ndarray) -> tuple[float, int, int]:
    best, col, at = np.inf, 0, 0
    for j in range(xs.shape[1]):
        for i in range(1, xs.shape[0]):
            if xs[i, j] <= xs[i - 1, j]:
                continue
            c = _abs_dev(ys[:i, j]) + _abs_dev(ys[i:, j])
            if c < best:
                best, col, at = c, j, i
    return best, col, at


class RegressionTree:
    """Arrays `feature`, `threshold`, `left`, `right`, `value` describe the nodes.

    A row goes left when ``x[feature] <= threshold``. Leaves have feature -1.
    """

    def __init__(
        self,
        criterion: str = "squared_error",
        max_depth: Optional[int] = None,
        min_samples_split: int = 2,
        max_features: Optional[int] = None,
    ):
        if criterion not in CRITERIA:
            raise ValueError(f"unknown criterion {criterion!r}")
        if min_samples_split < 2:
            raise ValueError("min_samples_split must be at least 2")
        self.criterion = criterion
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.max_features = max_features

    def _leaf_value(self, y: np.ndarray) -> float:
        return float(np.median(y)) if self.criterion == "absolute_error" else float(y.sum()) / len(y)

    def fit(self, X: np.ndarray, y: np.ndarray, rng: Optional[np.random.Generator] = None) -> "RegressionTree":
        n, d = X.shape
        m = d if self.max_features is None else min(self.max_features, d)
        rng = rng or np.random.default_rng(0)
        split_fn = _best_abs_split if self.criterion == "absolute_error" else _best_sse_split
        feature, threshold, left, right, value = [], [], [], [], []

        def new_node(idx):
            feature.append(LEAF)
            threshold.append(0.0)
            left.append(LEAF)
            right.append(LEAF)
            value.append(self._leaf_value(y[idx]))
            return len(value) - 1

        root = new_node(np.arange(n))
        stack = [(root, np.arange(n), 0)]
        while stack:
            node, idx, depth = stack.pop()
            if len(idx) < self.min_samples_split:
                continue
            if self.max_depth is not None and depth >= self.max_depth:
                continue
            yy = y[idx]
            if not (yy != yy[0]).any():
                continue
            cands = rng.choice(d, m, replace=False) if m < d else np.arange(d)
            sub = X[idx][:, cands]
            order = np.argsort(sub, axis=0, kind="stable")
            xs = sub[order, np.arange(len(cands))]
            cost, j, i = split_fn(xs, yy[order])
            if not np.isfinite(cost):
                continue
            f = int(cands[j])
            thr = _midpoint(xs[i - 1, j], xs[i, j])
            go_left = X[idx, f] <= thr
            li, ri = idx[go_left], idx[~go_left]
            feature[node] = f
            threshold[node] = thr
            left[node] = new_node(li)
            right[node] = new_node(ri)
            stack.append((right[node], ri, depth + 1))
            stack.append((left[node], li, depth + 1))
        self.feature = np.array(feature, dtype=np.int64)
        self.threshold = np.array(threshold, dtype=float)
        self.left = np.array(left, dtype=np.int64)
        self.right = np.array(right, dtype=np.int64)
        self.value = np.array(value, dtype=float)
        return self

    def apply(self, X: np.ndarray) -> np.ndarray:
        """Leaf index reached by every row."""
        node = np.zeros(X.shape[0], dtype=np.int64)
        active = np.flatnonzero(self.feature[node] != LEAF)
        while active.size:
            nd = node[active]
            go_left = X[active, self.feature[nd]] <= self.threshold[nd]
            node[active] = np.where(go_left, self.left[nd], self.right[nd])
            active = active[self.feature[node[active]] != LEAF]
        return node

    def predict(self, X: np.ndarray) -> np.ndarray:
        return self.value[self.apply(np.asarray(X, dtype=float))]

    def used_features(self) -> set[int]:
        return {int(f) for f in self.feature if f != LEAF}

    # nested node records: leaves carry `value`, internal nodes carry the split
    def to_json(self) -> dict:
        def rec(i):
            if self.feature[i] == LEAF:
                return {"value": float(self.value[i])}
            return {
                "feature": int(self.feature[i]),
                "threshold": float(self.threshold[i]),
                "value": float(self.value[i]),
                "left": rec(self.left[i]),
                "right": rec(self.right[i]),
            }

        return {
            "criterion": self.criterion,
            "max_depth": self.max_depth,
            "min_samples_split": self.min_samples_split,
            "max_features": self.max_features,
            "root": rec(0),
        }

    @classmethod
    def from_json(cls, d: dict) -> "RegressionTree":
        t = cls(d["criterion"], d["max_depth"], d["min_samples_split"], d["max_features"])
        feature, threshold, left, right, value = [], [], [], [], []

        def rec(node):
            i = len(value)
            feature.append(node.get("feature", LEAF))
            threshold.append(node.get("threshold", 0.0))
            value.append(node["value"])
            left.append(LEAF)
            right.append(LEAF)
            if "left" in node:
                left[i] = rec(node["left"])
                right[i] = rec(node["right"])
            return i

        rec(d["root"])
        t.feature = np.array(feature, dtype=np.int64)
        t.threshold = np.array(threshold, dtype=float)
        t.left = np.array(left, dtype=np.int64)
        t.right = np.array(right, dtype=np.int64)
        t.value = np.array(value, dtype=float)
        return t
