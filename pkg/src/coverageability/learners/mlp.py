"""Feed-forward regression network trained by mini-batch gradient descent."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import TrainingError, check_xy

ACTIVATIONS = ("relu", "tanh", "logistic", "identity")
BATCH = 64


def _act(name: str, z: np.ndarray) -> np.ndarray:
    if name == "relu":
        return np.maximum(z, 0.0)
    if name == "tanh":
        return np.tanh(z)
    if name == "logistic":
        return 0.5 * (1.0 + np.tanh(0.5 * z))
    return z


def _act_grad(name: str, a: np.ndarray) -> np.ndarray:
    # derivative expressed through the activation output `a`
    if name == "relu":
        return (a > 0).astype(float)
    if name == "tanh":
        return 1.0 - a * a
    if name == "logistic":
        return a * (1.0 - a)
    return np.ones_like(a)


@dataclass(frozen=True)
class MLPParams:
    hidden: tuple[int, ...] = (128, 64)
    activation: str = "relu"
    learning_rate: str = "constant"
    epochs: int = 100
    lr_init: float = 0.01
    alpha: float = 1e-4
    tol: float = 1e-4

    def __post_init__(self):
        object.__setattr__(self, "hidden", tuple(int(h) for h in self.hidden))
        if self.activation not in ACTIVATIONS:
            raise ValueError(f"unknown activation {self.activation!r}")
        if self.learning_rate not in ("constant", "adaptive"):
            raise ValueError(f"unknown learning-rate mode {self.learning_rate!r}")
        if self.epochs < 0 or any(h < 1 for h in self.hidden):
            raise ValueError("epochs must be >= 0 and layer sizes >= 1")


def init_layers(sizes: list[int], rng: np.random.Generator) -> tuple[list, list]:
    """Glorot-uniform weights and biases, each layer bounded by sqrt(6 / (fan_in + fan_out))."""
    Ws, bs = [], []
    for fan_in, fan_out in zip(sizes[:-1], sizes[1:]):
        bound = np.sqrt(6.0 / (fan_in + fan_out))
        Ws.append(rng.uniform(-bound, bound, (fan_in, fan_out)))
        bs.append(rng.uniform(-bound, bound, fan_out))
    return Ws, bs


def forward(Ws, bs, X, activation: str) -> list[np.ndarray]:
    acts = [X]
    last = len(Ws) - 1
    for i, (W, b) in enumerate(zip(Ws, bs)):
        z = acts[-1] @ W + b
        acts.append(z if i == last else _act(activation, z))
    return acts


def loss_and_grad(Ws, bs, X, y, activation: str, alpha: float):
    """Half mean squared error plus L2 term, and its gradient per layer."""
    n = X.shape[0]
    acts = forward(Ws, bs, X, activation)
    r = acts[-1][:, 0] - y
    loss = 0.5 * float(r @ r) / n + 0.5 * alpha * sum(float(np.sum(W * W)) for W in Ws) / n
    delta = r[:, None] / n
    gW = [None] * len(Ws)
    gb = [None] * len(Ws)
    for i in range(len(Ws) - 1, -1, -1):
        gW[i] = acts[i].T @ delta + alpha * Ws[i] / n
        gb[i] = delta.sum(axis=0)
        if i:
            delta = (delta @ Ws[i].T) * _act_grad(activation, acts[i])
    return loss, gW, gb


class MLPRegressor:
    kind = "mlpr"

    def __init__(self, params: MLPParams = MLPParams()):
        self.params = params
        self.Ws: list[np.ndarray] = []
        self.bs: list[np.ndarray] = []

    def init(self, d: int, rng: np.random.Generator) -> None:
        self.Ws, self.bs = init_layers([d, *self.params.hidden, 1], rng)

    def fit(self, X, y, seed: int) -> "MLPRegressor":
        X, y = check_xy(X, y)
        p = self.params
        rng = np.random.default_rng(seed)
        self.init(X.shape[1], rng)
        n = X.shape[0]
        lr = p.lr_init
        best = np.inf
        with np.errstate(over="ignore", invalid="ignore"):
            for _ in range(p.epochs):
                order = rng.permutation(n)
                total = 0.0
                for s in range(0, n, BATCH):
                    idx = order[s : s + BATCH]
                    loss, gW, gb = loss_and_grad(self.Ws, self.bs, X[idx], y[idx], p.activation, p.alpha)
                    total += loss * len(idx)
                    for i in range(len(self.Ws)):
                        self.Ws[i] -= lr * gW[i]
                        self.bs[i] -= lr * gb[i]
                epoch_loss = total / n
                if not np.isfinite(epoch_loss):
                    raise TrainingError("MLP loss became non-finite")
                if p.learning_rate == "adaptive" and epoch_loss > best - p.tol:
                    lr /= 2
                best = min(best, epoch_loss)
        return self

    def predict(self, X) -> np.ndarray:
        X = check_xy(X)
        return forward(self.Ws, self.bs, X, self.params.activation)[-1][:, 0]

    def to_json(self) -> dict:
        return {"W": [W.tolist() for W in self.Ws], "b": [b.tolist() for b in self.bs]}

    @classmethod
    def from_json(cls, params: MLPParams, d: dict) -> "MLPRegressor":
        m = cls(params)
        m.Ws = [np.array(W, dtype=float) for W in d["W"]]
        m.bs = [np.array(b, dtype=float) for b in d["b"]]
        return m
