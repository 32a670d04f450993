"""Feature-vector assembly and the metrics table file."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from ..javamodel.model import ClassDecl, ProjectModel
from .classlevel import ClassMetricsContext
from .lexical import compute_lexical_metrics
from .package import compute_package_metrics
from .schema import CLASS, FILE, PACKAGE, MetricSchema, full_schema


@dataclass(frozen=True)
class FeatureVector:
    qualified_name: str
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != len(full_schema()):
            raise ValueError(f"vector for {self.qualified_name} has {len(self.values)} values")

    def __getitem__(self, name: str) -> float:
        return self.values[full_schema().index(name)]

    def slice(self, level: str) -> tuple[float, ...]:
        schema = full_schema()
        return tuple(self.values[schema.index(n)] for n in schema.partition(level))

    def as_dict(self) -> dict[str, float]:
        return dict(zip(full_schema().names, self.values))


class MetricsExtractor:
    """Computes vectors for the classes of one model, caching shared slices."""

    def __init__(self, model: ProjectModel):
        self.model = model
        self.ctx = ClassMetricsContext(model)
        self._class: dict[str, tuple] = {}
        self._package: dict[str, dict] = {}
        self._file: dict[str, dict] = {}

    def class_slice(self, cls: ClassDecl):
        qn = cls.qualified_name
        if qn not in self._class:
            self._class[qn] = self.ctx.compute(cls)
        return self._class[qn]

    def package_slice(self, name: str) -> dict:
        if name not in self._package:
            pkg = self.model.package(name)
            members = [self.model.cls(q) for q in pkg.classes]
            parts = [self.class_slice(c) for c in members]
            self._package[name] = compute_package_metrics(
                pkg,
                members,
                [p[0] for p in parts],
                [p[2] for p in parts],
                [p[1] for p in parts],
            )
        return self._package[name]

    def file_slice(self, path: str) -> dict:
        if path not in self._file:
            self._file[path] = compute_lexical_metrics(self.model.file(path).tokens)
        return self._file[path]

    def vector(self, cls: ClassDecl) -> FeatureVector:
        merged = {}
        merged.update(self.package_slice(cls.package))
        merged.update(self.file_slice(cls.file))
        merged.update(self.class_slice(cls)[0])
        schema = full_schema()
        values = tuple(float(merged[n]) for n in schema.names)
        bad = [n for n, x in zip(schema.names, values) if not math.isfinite(x)]
        if bad:
            raise ArithmeticError(f"non-finite metrics for {cls.qualified_name}: {bad}")
        return FeatureVector(cls.qualified_name, values)


def assemble_feature_vector(cls: ClassDecl, model: ProjectModel) -> FeatureVector:
    return MetricsExtractor(model).vector(cls)


def extract_metrics(model: ProjectModel) -> list[FeatureVector]:
    """One vector per class, ordered by qualified name."""
    ex = MetricsExtractor(model)
    return [ex.vector(model.cls(qn)) for qn in sorted(c.qualified_name for c in model.classes)]


# ----------------------------------------------------------------- table IO


def format_value(x: float) -> str:
    """Integral values print without a fraction; others as shortest repr."""
    if float(x).is_integer():
        return str(int(x))
    return repr(float(x))


def metrics_table_text(vectors: Iterable[FeatureVector], schema: Optional[MetricSchema] = None) -> str:
    schema = schema or full_schema()
    buf = io.StringIO()
    buf.write(f"# schema: {schema.version}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("class",) + schema.names)
    for v in vectors:
        w.writerow([v.qualified_name] + [format_value(x) for x in v.values])
    return buf.getvalue()


@dataclass(frozen=True)
class MetricsTable:
    classes: tuple[str, ...]
    columns: tuple[str, ...]
    values: np.ndarray
    schema_version: str

    def column(self, name: str) -> np.ndarray:
        return self.values[:, self.columns.index(name)]

    def row(self, qualified_name: str) -> dict[str, float]:
        i = self.classes.index(qualified_name)
        return dict(zip(self.columns, self.values[i].tolist()))


def read_metrics_table(text: str) -> MetricsTable:
    lines = text.splitlines()
    version = ""
    if lines and lines[0].startswith("#"):
        head = lines.pop(0)[1:].strip()
        if head.startswith("schema:"):
            version = head.split(":", 1)[1].strip()
    rows = list(csv.reader(lines))
    if not rows or rows[0][0] != "class":
        raise ValueError("metrics table must start with a 'class' header")
    columns = tuple(rows[0][1:])
    classes = []
    data = []
    for lineno, r in enumerate(rows[1:], start=3 if version else 2):
        if len(r) != len(columns) + 1:
            raise ValueError(f"line {lineno}: expected {len(columns) + 1} fields, got {len(r)}")
        classes.append(r[0])
        data.append([float(x) for x in r[1:]])
    values = np.array(data, dtype=float).reshape(len(data), len(columns))
    return MetricsTable(tuple(classes), columns, values, version)


def vectors_to_matrix(vectors: Sequence[FeatureVector]) -> np.ndarray:
    return np.array([v.values for v in vectors], dtype=float).reshape(len(vectors), len(full_schema()))


__all__ = [
    "CLASS",
    "FILE",
    "PACKAGE",
    "FeatureVector",
    "MetricsExtractor",
    "MetricsTable",
    "assemble_feature_vector",
    "extract_metrics",
    "metrics_table_text",
    "read_metrics_table",
]
