"""Histogram gradient boosting: quantile-binned features, stagewise trees."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .base import check_xy

MAX_BINS = 255
LOSSES = ("least_squares", "least_absolute_deviation")


def bin_edges(col: np.ndarray, max_bins: int = MAX_BINS) -> np.ndarray:
    """Cut points for one feature; at most ``max_bins - 1`` of them."""
    distinct = np.unique(col)
    if len(distinct) <= max_bins:
        return (distinct[:-1] + distinct[1:]) / 2.0
    qs = np.linspace(0.0, 100.0, max_bins + 1)[1:-1]
    return np.unique(np.percentile(col, qs))


def apply_bins(X: np.ndarray, edges: list[np.ndarray]) -> np.ndarray:
    out = np.empty(X.shape, dtype=np.uint8)
    for j, e in enumerate(edges):
        out[:, j] = np.searchsorted(e, X[:, j], side="left")
    return out


@dataclass(frozen=True)
class HGBParams:
    loss: str = "least_squares"
    max_depth: Optional[int] = 10
    min_samples_leaf: int = 20
    max_iter: int = 100
    learning_rate: float = 0.1

    def __post_init__(self):
        if self.loss not in LOSSES:
            raise ValueError(f"unknown loss {self.loss!r}")
        if self.min_samples_leaf < 1 or self.max_iter < 0:
            raise ValueError("min_samples_leaf must be >= 1 and max_iter >= 0")


class BinnedTree:
    """Tree over bin indices; a row goes left when ``bin <= split_bin``."""

    def __init__(self):
        self.feature: list[int] = []
        self.split_bin: list[int] = []
        self.left: list[int] = []
        self.right: list[int] = []
        self.value: list[float] = []

    def _node(self) -> int:
        for a, v in ((self.feature, -1), (self.split_bin, 0), (self.left, -1), (self.right, -1), (self.value, 0.0)):
            a.append(v)
        return len(self.value) - 1

    def grow(self, Xb: np.ndarray, target: np.ndarray, max_depth, min_leaf: int, nbins: int) -> list:
        """Fit squared-error splits to `target`; returns the row set of each leaf."""
        n, d = Xb.shape
        offsets = (np.arange(d) * nbins)[None, :]
        leaves = []
        stack = [(self._node(), np.arange(n), 0)]
        while stack:
            node, idx, depth = stack.pop()
            c = len(idx)
            if c < 2 * min_leaf or (max_depth is not None and depth >= max_depth):
                leaves.append((node, idx))
                continue
            flat = (Xb[idx] + offsets).ravel()
            G = np.bincount(flat, weights=np.repeat(target[idx], d), minlength=d * nbins).reshape(d, nbins)
            C = np.bincount(flat, minlength=d * nbins).reshape(d, nbins)
            GL = np.cumsum(G, axis=1)[:, :-1]
            CL = np.cumsum(C, axis=1)[:, :-1]
            S = target[idx].sum()
            GR = S - GL
            CR = c - CL
            ok = (CL >= min_leaf) & (CR >= min_leaf)
            with np.errstate(divide="ignore", invalid="ignore"):
                gain = np.where(ok, GL * GL / CL + GR * GR / CR - S * S / c, -np.inf)
            k = int(np.argmax(gain))
            if not gain.flat[k] > 1e-12:
                leaves.append((node, idx))
                continue
            f, b = divmod(k, nbins - 1)
            go_left = Xb[idx, f] <= b
            self.feature[node] = f
            self.split_bin[node] = b
            li = self._node()
            ri = self._node()
            self.left[node] = li
            self.right[node] = ri
            stack.append((ri, idx[~go_left], depth + 1))
            stack.append((li, idx[go_left], depth + 1))
        return leaves

    def finalize(self) -> None:
        self.f_arr = np.array(self.feature, dtype=np.int64)
        self.b_arr = np.array(self.split_bin, dtype=np.int64)
        self.l_arr = np.array(self.left, dtype=np.int64)
        self.r_arr = np.array(self.right, dtype=np.int64)
        self.v_arr = np.array(self.value, dtype=float)
        # leaves point at themselves so traversal can run a fixed number of levels
        leaf = self.f_arr < 0
        own = np.arange(len(leaf))
        self._f = np.where(leaf, 0, self.f_arr)
        self._b = np.where(leaf, np.iinfo(np.int64).max, self.b_arr)
        self._l = np.where(leaf, own, self.l_arr)
        self._r = np.where(leaf, own, self.r_arr)
        depth = np.zeros(len(leaf), dtype=np.int64)
        for i in range(len(leaf)):
            if not leaf[i]:
                depth[self.l_arr[i]] = depth[self.r_arr[i]] = depth[i] + 1
        self.depth = int(depth.max()) if len(depth) else 0

    def predict_binned(self, Xb: np.ndarray) -> np.ndarray:
        Xb = np.ascontiguousarray(Xb)
        flat = Xb.ravel()
        base = np.arange(Xb.shape[0]) * Xb.shape[1]
        node = np.zeros(Xb.shape[0], dtype=np.int64)
        for _ in range(self.depth):
            go_left = flat[base + self._f[node]] <= self._b[node]
            node = np.where(go_left, self._l[node], self._r[node])
        return self.v_arr[node]

    def used_features(self) -> set[int]:
        return {f for f in self.feature if f >= 0}

    def to_json(self) -> dict:
        def rec(i):
            if self.feature[i] < 0:
                return {"value": self.value[i]}
            return {
                "feature": self.feature[i],
                "bin": self.split_bin[i],
                "left": rec(self.left[i]),
                "right": rec(self.right[i]),
            }

        return rec(0)

    @classmethod
    def from_json(cls, d: dict) -> "BinnedTree":
        t = cls()

        def rec(node):
            i = t._node()
            if "feature" in node:
                t.feature[i] = node["feature"]
                t.split_bin[i] = node["bin"]
                t.left[i] = rec(node["left"])
                t.right[i] = rec(node["right"])
            else:
                t.value[i] = node["value"]
            return i

        rec(d)
        t.finalize()
        return t


class HistGradientBoostingRegressor:
    kind = "hgbr"

    def __init__(self, params: HGBParams = HGBParams()):
        self.params = params
        self.edges: list[np.ndarray] = []
        self.init_: float = 0.0
        self.trees: list[BinnedTree] = []

    def fit(self, X, y, seed: int = 0) -> "HistGradientBoostingRegressor":
        # deterministic given the data; `seed` is accepted for a uniform contract
        X, y = check_xy(X, y)
        p = self.params
        self.edges = [bin_edges(X[:, j]) for j in range(X.shape[1])]
        Xb = apply_bins(X, self.edges)
        nbins = MAX_BINS
        lad = p.loss == "least_absolute_deviation"
        self.init_ = float(np.median(y)) if lad else float(np.mean(y))
        F = np.full(len(y), self.init_)
        self.trees = []
        for _ in range(p.max_iter):
            resid = y - F
            # negative gradient of the loss
            target = np.sign(resid) if lad else resid
            tree = BinnedTree()
            for node, idx in tree.grow(Xb, target, p.max_depth, p.min_samples_leaf, nbins):
                tree.value[node] = float(np.median(resid[idx])) if lad else float(np.mean(resid[idx]))
            tree.finalize()
            self.trees.append(tree)
            F = F + p.learning_rate * tree.predict_binned(Xb)
        return self

    def bin(self, X) -> np.ndarray:
        return apply_bins(check_xy(X), self.edges)

    def staged_predict(self, X):
        """Raw prediction after 0, 1, ..., max_iter stages."""
        Xb = self.bin(X)
        F = np.full(Xb.shape[0], self.init_)
        yield F
        for t in self.trees:
            F = F + self.params.learning_rate * t.predict_binned(Xb)
            yield F

    def predict(self, X) -> np.ndarray:
        F = None
        for F in self.staged_predict(X):
            pass
        return F

    def used_features(self) -> set[int]:
        out: set[int] = set()
        for t in self.trees:
            out |= t.used_features()
        return out

    def to_json(self) -> dict:
        return {
            "edges": [e.tolist() for e in self.edges],
            "init": self.init_,
            "trees": [t.to_json() for t in self.trees],
        }

    @classmethod
    def from_json(cls, params: HGBParams, d: dict) -> "HistGradientBoostingRegressor":
        m = cls(params)
        m.edges = [np.array(e, dtype=float) for e in d["edges"]]
        m.init_ = float(d["init"])
        m.trees = [BinnedTree.from_json(t) for t in d["trees"]]
        return m
