"""Trained-model container: estimator plus everything needed to score raw metrics."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from ..dataset import RobustScalerStats
from ..metrics.schema import full_schema
from .forest import ForestParams, RandomForestRegressor
from .hgb import HGBParams, HistGradientBoostingRegressor
from .mlp import MLPParams, MLPRegressor
from .sgd import SGDParams, SGDRegressor
from .voting import VotingRegressor

MODEL_FORMAT = "cvg-model/1"
BASE_KINDS = ("sgdr", "mlpr", "rfr", "hgbr")
KINDS = BASE_KINDS + ("vor",)

_REGISTRY = {
    "sgdr": (SGDParams, SGDRegressor),
    "mlpr": (MLPParams, MLPRegressor),
    "rfr": (ForestParams, RandomForestRegressor),
    "hgbr": (HGBParams, HistGradientBoostingRegressor),
}


class SchemaMismatch(ValueError):
    pass


def make_params(kind: str, hp: Mapping):
    if kind not in _REGISTRY:
        raise ValueError(f"unknown learner {kind!r}")
    cls = _REGISTRY[kind][0]
    known = {f.name for f in dataclasses.fields(cls)}
    extra = set(hp) - known
    if extra:
        raise ValueError(f"{kind}: unknown hyperparameters {sorted(extra)}")
    return cls(**hp)


def params_dict(params) -> dict:
    d = dataclasses.asdict(params)
    return {k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}


def make_estimator(kind: str, hp: Mapping):
    return _REGISTRY[kind][1](make_params(kind, hp))


def fit_estimator(kind: str, hp: Mapping, X, y, seed: int):
    return make_estimator(kind, hp).fit(X, y, seed)


def _theta_to_json(kind: str, est) -> dict:
    if kind == "vor":
        return {
            "weights": list(est.weights),
            "members": [
                {"kind": k, "hyperparameters": params_dict(m.params), "theta": m.to_json()}
                for k, m in zip(BASE_KINDS, est.members)
            ],
        }
    return est.to_json()


def _theta_from_json(kind: str, hp: Mapping, theta: Mapping):
    if kind == "vor":
        members = [
            _REGISTRY[m["kind"]][1].from_json(make_params(m["kind"], m["hyperparameters"]), m["theta"])
            for m in theta["members"]
        ]
        return VotingRegressor(members, theta["weights"])
    return _REGISTRY[kind][1].from_json(make_params(kind, hp), theta)


@dataclass
class TrainedModel:
    kind: str
    hyperparameters: dict
    estimator: object
    columns: tuple[str, ...]
    scaler: RobustScalerStats
    feature_min: np.ndarray
    feature_max: np.ndarray
    seed: int
    schema_version: str = ""

    def __post_init__(self):
        if not self.schema_version:
            self.schema_version = full_schema().version
        if tuple(self.scaler.columns) != tuple(self.columns):
            raise SchemaMismatch("scaler columns differ from the model columns")

    def predict_scaled(self, Xs: np.ndarray) -> np.ndarray:
        return np.asarray(self.estimator.predict(Xs), dtype=float)

    def predict_raw(self, X: np.ndarray) -> np.ndarray:
        """Rows hold unscaled values for exactly ``self.columns``."""
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != len(self.columns):
            raise SchemaMismatch(f"expected {len(self.columns)} columns, got shape {X.shape}")
        return self.predict_scaled(self.scaler.transform(X))

    def row_from_mapping(self, features: Mapping[str, float]) -> np.ndarray:
        missing = [c for c in self.columns if c not in features]
        if missing:
            raise SchemaMismatch(f"input lacks {len(missing)} model features, e.g. {missing[:3]}")
        return np.array([float(features[c]) for c in self.columns])

    def predict(self, features) -> float:
        """Score one class given a mapping (or FeatureVector) of raw metric values."""
        if hasattr(features, "as_dict"):
            features = features.as_dict()
        return float(self.predict_raw(self.row_from_mapping(features)[None, :])[0])

    def in_distribution(self, row: np.ndarray) -> np.ndarray:
        return (row >= self.feature_min) & (row <= self.feature_max)

    def to_json(self) -> dict:
        return {
            "format": MODEL_FORMAT,
            "kind": self.kind,
            "schema": self.schema_version,
            "seed": self.seed,
            "hyperparameters": self.hyperparameters,
            "columns": list(self.columns),
            "scaler": self.scaler.to_json(),
            "distribution": {"min": self.feature_min.tolist(), "max": self.feature_max.tolist()},
            "theta": _theta_to_json(self.kind, self.estimator),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, d: Mapping) -> "TrainedModel":
        if d.get("format") != MODEL_FORMAT:
            raise ValueError(f"unsupported model format {d.get('format')!r}")
        if d["schema"] != full_schema().version:
            raise SchemaMismatch(f"model schema {d['schema']!r} differs from {full_schema().version!r}")
        kind = d["kind"]
        hp = d["hyperparameters"]
        return cls(
            kind=kind,
            hyperparameters=hp,
            estimator=_theta_from_json(kind, hp, d["theta"]),
            columns=tuple(d["columns"]),
            scaler=RobustScalerStats.from_json(d["scaler"]),
            feature_min=np.array(d["distribution"]["min"], dtype=float),
            feature_max=np.array(d["distribution"]["max"], dtype=float),
            seed=int(d["seed"]),
            schema_version=d["schema"],
        )

    @classmethod
    def loads(cls, text: str) -> "TrainedModel":
        return cls.from_json(json.loads(text))


def wrap(
    kind: str,
    hp: Mapping,
    estimator,
    columns: Sequence[str],
    scaler: RobustScalerStats,
    X_raw: np.ndarray,
    seed: int,
) -> TrainedModel:
    X_raw = np.asarray(X_raw, dtype=float)
    return TrainedModel(
        kind,
        dict(hp),
        estimator,
        tuple(columns),
        scaler,
        X_raw.min(axis=0),
        X_raw.max(axis=0),
        seed,
    )
