"""Metric catalog: method, class, package and lexical metrics under one schema."""

from .extract import (
    FeatureVector,
    MetricsTable,
    assemble_feature_vector,
    extract_metrics,
    metrics_table_text,
    read_metrics_table,
)
from .lexical import compute_lexical_metrics
from .method import compute_cc
from .schema import SCHEMA_VERSION, MetricSchema, full_schema
from .submetrics import apply_op, derive_submetrics

__all__ = [
    "FeatureVector",
    "MetricSchema",
    "MetricsTable",
    "SCHEMA_VERSION",
    "apply_op",
    "assemble_feature_vector",
    "compute_cc",
    "compute_lexical_metrics",
    "derive_submetrics",
    "extract_metrics",
    "full_schema",
    "metrics_table_text",
    "read_metrics_table",
]
