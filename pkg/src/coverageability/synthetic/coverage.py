"""Plausible coverage reports for a metrics table, for demos and tests.

Coverage falls with complexity and size; suites grow with the number of
non-accessor methods. Values are seeded and reproducible.
"""

from __future__ import annotations

import numpy as np

from ..labeling import coverage_report_text
from ..metrics.extract import MetricsTable


def synthesize_coverage(table: MetricsTable, seed: int) -> list[tuple[str, float, float, int]]:
    rng = np.random.default_rng(seed)
    cc = table.column("CSCC")
    loc = table.column("CSLOC")
    nom = table.column("CSNOMNAMM")
    rows = []
    for i, name in enumerate(table.classes):
        load = 0.015 * cc[i] + 0.003 * loc[i]
        st = float(np.clip(1.0 - load + rng.normal(0, 0.05), 0.05, 1.0))
        br = float(np.clip(st - 0.01 * cc[i] + rng.normal(0, 0.05), 0.0, st))
        size = int(1 + round(1.5 * nom[i] + 0.5 * cc[i] + rng.integers(0, 3)))
        rows.append((name, round(st, 4), round(br, 4), size))
    return rows


def coverage_report_for(table: MetricsTable, seed: int) -> str:
    return coverage_report_text(synthesize_coverage(table, seed))
