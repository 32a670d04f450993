"""Coverageability: static metrics and learned predictors of attainable test coverage for Java classes."""

__version__ = "0.1.0"
