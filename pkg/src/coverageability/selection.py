"""Grid search over shuffle-split folds, and the regression error report."""

from __future__ import annotations

import csv
import io
import itertools
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from .dataset import split_indices
from .learners.base import TrainingError
from .learners.model import BASE_KINDS, fit_estimator
from .learners.voting import VotingRegressor, normalize_weights

log = logging.getLogger(__name__)

N_FOLDS = 5
INNER_FRACTION = 0.75

# candidate values per learner, spelled with this package's option names
TABLE_GRID: dict[str, dict[str, list]] = {
    "sgdr": {
        "loss": ["squared", "huber"],
        "penalty": ["l2", "l1", "elasticnet"],
        "learning_rate": ["invscaling", "optimal", "constant", "adaptive"],
        "max_iter": list(range(50, 500, 50)),
    },
    "mlpr": {
        "hidden": [(128, 64), (256, 100), (512, 256, 100)],
        "activation": ["relu", "tanh", "logistic"],
        "learning_rate": ["constant", "adaptive"],
        "epochs": list(range(100, 500, 50)),
    },
    "rfr": {
        "n_estimators": list(range(50, 500, 50)),
        "criterion": ["squared_error", "absolute_error"],
        "max_depth": list(range(3, 50)),
        "min_samples_split": list(range(2, 30, 2)),
    },
    "hgbr": {
        "loss": ["least_squares", "least_absolute_deviation"],
        "max_depth": list(range(3, 50)),
        "min_samples_leaf": list(range(5, 50, 10)),
        "max_iter": list(range(50, 500, 50)),
    },
    "vor": {"weights": [None, [0, 1 / 3, 1 / 3, 1 / 3], [0, 1 / 6, 2 / 6, 3 / 6]]},
}

# a small slice of the table that runs in about a minute on 1,500 rows
REDUCED_GRID: dict[str, dict[str, list]] = {
    "sgdr": {"loss": ["squared", "huber"], "penalty": ["l2"], "learning_rate": ["invscaling"], "max_iter": [50]},
    "mlpr": {"hidden": [(128, 64)], "activation": ["relu", "tanh"], "learning_rate": ["constant"], "epochs": [100]},
    "rfr": {"n_estimators": [50], "criterion": ["squared_error"], "max_depth": [10, 20], "min_samples_split": [2]},
    "hgbr": {"loss": ["least_squares"], "max_depth": [3, 5], "min_samples_leaf": [15], "max_iter": [300]},
    "vor": TABLE_GRID["vor"],
}


# ------------------------------------------------------------------ metrics


@dataclass(frozen=True)
class EvaluationReport:
    n: int
    mae: float
    mse: float
    rmse: float
    mslge: Optional[float]
    mdae: float
    r2: float
    r2_defined: bool = True

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "MAE": self.mae,
            "MSE": self.mse,
            "RMSE": self.rmse,
            "MSLgE": self.mslge,
            "MdAE": self.mdae,
            "R2": self.r2 if math.isfinite(self.r2) else "-inf",
            "R2_defined": self.r2_defined,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def r2_score(y: np.ndarray, pred: np.ndarray) -> tuple[float, bool]:
    """(R^2, defined). Constant `y` with any residual gives the -inf sentinel."""
    ss_res = float(np.sum((y - pred) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0.0:
        return (1.0, True) if ss_res == 0.0 else (-math.inf, False)
    return 1.0 - ss_res / ss_tot, True


def evaluate(y, pred) -> EvaluationReport:
    y = np.asarray(y, dtype=float).ravel()
    pred = np.asarray(pred, dtype=float).ravel()
    if y.shape != pred.shape:
        raise ValueError(f"length mismatch: {y.size} targets vs {pred.size} predictions")
    if y.size == 0:
        raise ValueError("cannot evaluate zero samples")
    err = y - pred
    mse = float(np.mean(err**2))
    mslge = None
    if np.all(y >= 0) and np.all(pred >= 0):
        mslge = float(np.mean((np.log1p(y) - np.log1p(pred)) ** 2))
    r2, ok = r2_score(y, pred)
    return EvaluationReport(
        n=int(y.size),
        mae=float(np.mean(np.abs(err))),
        mse=mse,
        rmse=math.sqrt(mse),
        mslge=mslge,
        mdae=float(np.median(np.abs(err))),
        r2=r2,
        r2_defined=ok,
    )


def rmse(y, pred) -> float:
    return math.sqrt(float(np.mean((np.asarray(y) - np.asarray(pred)) ** 2)))


# ------------------------------------------------------------------ CV plan


@dataclass(frozen=True)
class CVPlan:
    folds: tuple[tuple[np.ndarray, np.ndarray], ...]
    seed: int

    def __len__(self) -> int:
        return len(self.folds)


def make_cv_plan(n: int, seed: int, folds: int = N_FOLDS, fraction: float = INNER_FRACTION) -> CVPlan:
    """Independent shuffled train/validation resamples of ``range(n)``."""
    if n < 4:
        raise ValueError("cross-validation needs at least 4 rows")
    rng = np.random.default_rng(seed)
    return CVPlan(tuple(split_indices(n, fraction, rng) for _ in range(folds)), seed)


# -------------------------------------------------------------- grid search


def expand_grid(grid: Mapping[str, Sequence]) -> list[dict]:
    """Cartesian product; the last key varies fastest."""
    keys = list(grid)
    if not keys or any(len(grid[k]) == 0 for k in keys):
        raise ValueError("grid must be non-empty")
    return [dict(zip(keys, combo)) for combo in itertools.product(*(grid[k] for k in keys))]


@dataclass
class TraceRow:
    config_id: int
    hp: dict
    fold_rmse: list[float]
    mean: float
    error: str = ""


@dataclass
class GridResult:
    kind: str
    best_index: int
    best_hp: dict
    estimator: object
    trace: list[TraceRow]
    fold_predictions: list[np.ndarray] = field(default_factory=list)

    @property
    def best_score(self) -> float:
        return self.trace[self.best_index].mean


def _fit_predict(task):
    kind, hp, X, y, tr, va, seed = task
    try:
        est = fit_estimator(kind, hp, X[tr], y[tr], seed)
        pred = np.asarray(est.predict(X[va]), dtype=float)
    except TrainingError as e:
        return None, str(e)
    if not np.all(np.isfinite(pred)):
        return None, "non-finite predictions"
    return pred, ""


def _run(tasks, workers: int):
    if workers <= 1 or len(tasks) == 1:
        return [_fit_predict(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(_fit_predict, tasks))


def _pick(trace: list[TraceRow]) -> int:
    # strict < keeps the earliest configuration on ties
    best = 0
    for i, row in enumerate(trace):
        if row.mean < trace[best].mean:
            best = i
    return best


def grid_search(
    kind: str,
    grid: Mapping[str, Sequence],
    X,
    y,
    plan: CVPlan,
    seed: int,
    workers: int = 1,
) -> GridResult:
    """Mean validation RMSE per configuration; the winner is refit on all rows."""
    if kind == "vor":
        raise ValueError("use voter_search for the voting ensemble")
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    configs = expand_grid(grid)
    tasks = [(kind, hp, X, y, tr, va, seed) for hp in configs for tr, va in plan.folds]
    results = _run(tasks, workers)
    k = len(plan)
    trace, preds = [], []
    for ci, hp in enumerate(configs):
        chunk = results[ci * k : (ci + 1) * k]
        scores, errors = [], []
        for (p, err), (_, va) in zip(chunk, plan.folds):
            scores.append(math.inf if p is None else rmse(y[va], p))
            if err:
                errors.append(err)
        mean = math.inf if any(math.isinf(s) for s in scores) else float(np.mean(scores))
        trace.append(TraceRow(ci, hp, scores, mean, "; ".join(sorted(set(errors)))))
        preds.append([p for p, _ in chunk])
        log.info("%s config %d: mean RMSE %s", kind, ci, mean)
    best = _pick(trace)
    if math.isinf(trace[best].mean):
        raise TrainingError(f"every {kind} configuration failed")
    est = fit_estimator(kind, configs[best], X, y, seed)
    return GridResult(kind, best, configs[best], est, trace, preds[best])


def voter_search(
    members: Sequence[GridResult],
    weights_grid: Sequence,
    y,
    plan: CVPlan,
) -> GridResult:
    """Pick voter weights from the members' cached fold predictions.

    The members must have been searched with the same `plan`, in learner order.
    """
    if [m.kind for m in members] != list(BASE_KINDS):
        raise ValueError(f"voter members must be {BASE_KINDS}")
    y = np.asarray(y, dtype=float)
    trace = []
    vor = VotingRegressor([m.estimator for m in members])
    for ci, w in enumerate(weights_grid):
        vor.weights = normalize_weights(w, len(members))
        scores = [
            rmse(y[va], vor.combine([m.fold_predictions[f] for m in members]))
            for f, (_, va) in enumerate(plan.folds)
        ]
        trace.append(TraceRow(ci, {"weights": w}, scores, float(np.mean(scores))))
    best = _pick(trace)
    w = weights_grid[best]
    final = VotingRegressor([m.estimator for m in members], w)
    return GridResult("vor", best, {"weights": w}, final, trace)


def _cell(v) -> str:
    if isinstance(v, (list, tuple)) or v is None:
        return json.dumps(v)
    return str(v)


def trace_text(trace: Sequence[TraceRow]) -> str:
    keys = list(trace[0].hp) if trace else []
    folds = len(trace[0].fold_rmse) if trace else 0
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["config_id", *keys, *(f"fold_{i + 1}" for i in range(folds)), "mean_rmse", "error"])
    for row in trace:
        w.writerow([row.config_id, *(_cell(row.hp[k]) for k in keys), *map(repr, row.fold_rmse), repr(row.mean), row.error])
    return buf.getvalue()
