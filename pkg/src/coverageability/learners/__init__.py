"""Regressors written against numpy, plus the model container."""

from .base import TrainingError
from .forest import ForestParams, RandomForestRegressor
from .hgb import HGBParams, HistGradientBoostingRegressor
from .mlp import MLPParams, MLPRegressor
from .model import BASE_KINDS, KINDS, SchemaMismatch, TrainedModel, fit_estimator, make_estimator, make_params
from .sgd import SGDParams, SGDRegressor
from .tree import RegressionTree
from .voting import VotingRegressor

__all__ = [
    "BASE_KINDS",
    "KINDS",
    "ForestParams",
    "HGBParams",
    "HistGradientBoostingRegressor",
    "MLPParams",
    "MLPRegressor",
    "RandomForestRegressor",
    "RegressionTree",
    "SGDParams",
    "SGDRegressor",
    "SchemaMismatch",
    "TrainedModel",
    "TrainingError",
    "VotingRegressor",
    "fit_estimator",
    "make_estimator",
    "make_params",
]
