"""Glue between prepared datasets, grid search and the model container."""

from __future__ import annotations

import ast
import configparser
from typing import Mapping

import numpy as np

from .dataset import TARGET, Dataset, RobustScalerStats
from .learners.model import BASE_KINDS, KINDS, TrainedModel, wrap
from .selection import REDUCED_GRID, TABLE_GRID, GridResult, grid_search, make_cv_plan, voter_search

NAMED_GRIDS = {"reduced": REDUCED_GRID, "full": TABLE_GRID}


_ARITH = {ast.Add: lambda a, b: a + b, ast.Sub: lambda a, b: a - b, ast.Mult: lambda a, b: a * b, ast.Div: lambda a, b: a / b}


def _literal(node: ast.AST):
    """Python literals plus + - * / on numbers, so weights can read ``1/6``."""
    if isinstance(node, ast.Constant):
        return node.value
    if isinstance(node, (ast.List, ast.Tuple)):
        items = [_literal(e) for e in node.elts]
        return items if isinstance(node, ast.List) else tuple(items)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _literal(node.operand)
        if isinstance(v, (int, float)) and not isinstance(v, bool):
            return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and type(node.op) in _ARITH:
        a, b = _literal(node.left), _literal(node.right)
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in (a, b)):
            return _ARITH[type(node.op)](a, b)
    raise ValueError(f"unsupported expression {ast.dump(node)}")


def parse_grid_values(text: str) -> list:
    """Comma-separated Python literals, e.g. ``(128, 64), (256, 100)``."""
    try:
        vals = _literal(ast.parse(f"[{text}]", mode="eval").body)
    except (ValueError, SyntaxError, ZeroDivisionError) as e:
        raise ValueError(f"cannot parse grid values {text!r}: {e}") from None
    if not vals:
        raise ValueError("empty grid value list")
    return vals


def load_grid(spec: str) -> dict[str, dict[str, list]]:
    """A named grid, or an INI file whose ``[grid.<learner>]`` sections override the reduced grid."""
    if spec in NAMED_GRIDS:
        return {k: dict(v) for k, v in NAMED_GRIDS[spec].items()}
    cp = configparser.ConfigParser()
    cp.optionxform = str
    if not cp.read(spec, encoding="utf-8"):
        raise FileNotFoundError(f"grid file {spec} not found")
    grid = {k: dict(v) for k, v in REDUCED_GRID.items()}
    for section in cp.sections():
        if not section.startswith("grid."):
            continue
        kind = section[5:]
        if kind not in KINDS:
            raise ValueError(f"unknown learner section [{section}]")
        grid[kind] = {key: parse_grid_values(val) for key, val in cp[section].items()}
    return grid


def raw_from_scaled(X: np.ndarray, scaler: RobustScalerStats) -> np.ndarray:
    return X * np.where(scaler.iqr > 0, scaler.iqr, 1.0) + scaler.median


def train_model(
    kind: str,
    train: Dataset,
    scaler: RobustScalerStats,
    grid: Mapping[str, Mapping],
    seed: int,
    workers: int = 1,
) -> tuple[TrainedModel, dict[str, GridResult]]:
    if kind not in KINDS:
        raise ValueError(f"unknown learner {kind!r}")
    X = train.X
    y = train.target(TARGET)
    plan = make_cv_plan(len(y), seed)
    if kind == "vor":
        results = {k: grid_search(k, grid[k], X, y, plan, seed, workers) for k in BASE_KINDS}
        results["vor"] = voter_search([results[k] for k in BASE_KINDS], grid["vor"]["weights"], y, plan)
    else:
        results = {kind: grid_search(kind, grid[kind], X, y, plan, seed, workers)}
    best = results[kind]
    hp = dict(best.best_hp)
    if kind == "vor":
        hp = {"weights": hp["weights"], "members": {k: results[k].best_hp for k in BASE_KINDS}}
    model = wrap(kind, _jsonable(hp), best.estimator, train.columns, scaler, raw_from_scaled(X, scaler), seed)
    return model, results


def _jsonable(v):
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v
