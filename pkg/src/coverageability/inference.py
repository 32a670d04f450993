"""Per-class Coverageability: trivial-class rules first, then the model."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Mapping, Sequence

from .dataset import trivial_reason
from .learners.model import TrainedModel

RULE_SOURCES = {"simple": "rule-simple", "data": "rule-data"}
DEFAULT_GATE = 0.50


class PredictionError(ValueError):
    def __init__(self, class_name: str, value: float):
        super().__init__(f"Prediction Error: {class_name} scored {value!r}, outside [0, 1]")
        self.class_name = class_name
        self.value = value


@dataclass(frozen=True)
class PredictionOutcome:
    class_name: str
    coverageability: float
    source: str


def decide(class_name: str, metrics: Mapping[str, float], model: TrainedModel) -> PredictionOutcome:
    reason = trivial_reason(metrics)
    if reason is not None:
        return PredictionOutcome(class_name, 1.0, RULE_SOURCES[reason])
    value = model.predict(metrics)
    if not 0.0 <= value <= 1.0:
        raise PredictionError(class_name, value)
    return PredictionOutcome(class_name, value, "model")


def predict_class_coverageability(source_root, class_name: str, model: TrainedModel) -> PredictionOutcome:
    from .javamodel import parse_project
    from .metrics.extract import MetricsExtractor

    project = parse_project(source_root)
    try:
        cls = project.cls(class_name)
    except KeyError:
        raise KeyError(f"class {class_name!r} not found under {source_root}") from None
    vec = MetricsExtractor(project).vector(cls)
    return decide(class_name, vec.as_dict(), model)


def outcomes_text(outcomes: Sequence[PredictionOutcome]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["class", "coverageability", "source"])
    for o in outcomes:
        w.writerow([o.class_name, repr(o.coverageability), o.source])
    return buf.getvalue()


def read_outcomes(text: str) -> list[PredictionOutcome]:
    rows = list(csv.DictReader(io.StringIO(text)))
    return [PredictionOutcome(r["class"], float(r["coverageability"]), r["source"]) for r in rows]


@dataclass(frozen=True)
class GateResult:
    passed: bool
    failing: tuple[PredictionOutcome, ...]
    note: str = ""

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def text(self, threshold: float) -> str:
        lines = [f"gate threshold {threshold}: {'PASS' if self.passed else 'FAIL'}"]
        if self.note:
            lines.append(self.note)
        for o in self.failing:
            lines.append(f"  {o.class_name}\t{o.coverageability!r}")
        return "\n".join(lines) + "\n"


def gate_check(outcomes: Sequence[PredictionOutcome], threshold: float = DEFAULT_GATE) -> GateResult:
    failing = tuple(o for o in outcomes if o.coverageability < threshold)
    note = ""
    if not any(o.source == "model" for o in outcomes):
        note = "no non-trivial classes to check"
    return GateResult(not failing, failing, note)
