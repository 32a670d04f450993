"""Coverage-report ingestion and the Coverageability targets."""

from __future__ import annotations

import csv
import io
import logging
import math
import warnings
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Iterable, Sequence

log = logging.getLogger(__name__)

REPORT_HEADER = ("class", "statement_coverage", "branch_coverage", "test_suite_size")
OPTIONAL_COLUMN = "mutation_score"
TARGET_COLUMNS = ("target_statement", "target_branch", "target_mean", "target_coverageability")


class CoverageReportError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class BudgetClampWarning(UserWarning):
    pass


@dataclass(frozen=True)
class CoverageRecord:
    qualified_name: str
    statement: float
    branch: float
    suite_size: int
    repetitions: int = 1

    def __post_init__(self):
        for label, x in (("statement", self.statement), ("branch", self.branch)):
            if not 0.0 <= x <= 1.0:
                raise ValueError(f"{self.qualified_name}: {label} coverage {x} outside [0, 1]")
        if self.suite_size < 1:
            raise ValueError(f"{self.qualified_name}: test suite size must be at least 1")


@dataclass(frozen=True)
class LabelingConfig:
    b: int = 1

    def __post_init__(self):
        if self.b < 1:
            raise ValueError("b must be a positive integer")


@dataclass(frozen=True)
class TargetVector:
    statement: float
    branch: float
    mean: float
    coverageability: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.statement, self.branch, self.mean, self.coverageability)


def round_half_up(x: float) -> int:
    return int(Decimal(repr(x)).quantize(Decimal(1), rounding=ROUND_HALF_UP))


def _parse_float(text: str, what: str, line: int) -> float:
    try:
        x = float(text)
    except ValueError:
        raise CoverageReportError(f"{what} {text!r} is not a number", line) from None
    if not math.isfinite(x):
        raise CoverageReportError(f"{what} is not finite", line)
    return x


def parse_coverage_report(text: str) -> list[CoverageRecord]:
    """Parse report text; repeated rows for one class are averaged."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        return []
    header = tuple(h.strip() for h in rows[0])
    if header[:4] != REPORT_HEADER or len(header) > 5 or (len(header) == 5 and header[4] != OPTIONAL_COLUMN):
        raise CoverageReportError(f"unexpected header {','.join(header)}", 1)
    width = len(header)
    runs: dict[str, list[tuple[float, float, float]]] = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != width:
            raise CoverageReportError(f"expected {width} fields, got {len(row)}", lineno)
        name = row[0].strip()
        if not name:
            raise CoverageReportError("empty class name", lineno)
        st = _parse_float(row[1], "statement coverage", lineno)
        br = _parse_float(row[2], "branch coverage", lineno)
        size = _parse_float(row[3], "test suite size", lineno)
        for label, x in (("statement coverage", st), ("branch coverage", br)):
            if not 0.0 <= x <= 1.0:
                raise CoverageReportError(f"{label} {x} outside [0, 1]", lineno)
        if size < 1 or not float(size).is_integer():
            raise CoverageReportError(f"test suite size {row[3]!r} must be a positive integer", lineno)
        runs.setdefault(name, []).append((st, br, size))
    records = []
    for name in sorted(runs):
        rs = runs[name]
        n = len(rs)
        records.append(
            CoverageRecord(
                qualified_name=name,
                statement=math.fsum(r[0] for r in rs) / n,
                branch=math.fsum(r[1] for r in rs) / n,
                suite_size=round_half_up(math.fsum(r[2] for r in rs) / n),
                repetitions=n,
            )
        )
    return records


def load_coverage_report(path) -> list[CoverageRecord]:
    return parse_coverage_report(Path(path).read_text(encoding="utf-8"))


def coverage_report_text(rows: Iterable[tuple[str, float, float, int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_HEADER)
    for name, st, br, size in rows:
        w.writerow([name, repr(float(st)), repr(float(br)), int(size)])
    return buf.getvalue()


def mean_coverage(statement: float, branch: float) -> float:
    return (statement + branch) / 2


def coverageability(mean: float, b: int, suite_size: int) -> float:
    """Expected coverage per test case, scaled by the budget ``b``."""
    if suite_size < 1:
        raise ValueError("test suite size must be at least 1")
    if b < 1:
        raise ValueError("b must be at least 1")
    if b > suite_size:
        warnings.warn(
            f"b={b} exceeds the test suite size {suite_size}; clamped", BudgetClampWarning, stacklevel=2
        )
        b = suite_size
    # the ratio is exactly 1.0 when the budget covers the whole suite
    return mean * (b / suite_size)


def module_coverageability(values: Sequence[float]) -> float:
    if len(values) == 0:
        raise ValueError("module Coverageability needs at least one class")
    return math.fsum(values) / len(values)


def build_target_vector(record: CoverageRecord, config: LabelingConfig = LabelingConfig()) -> TargetVector:
    e = mean_coverage(record.statement, record.branch)
    return TargetVector(record.statement, record.branch, e, coverageability(e, config.b, record.suite_size))
