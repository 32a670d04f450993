"""Shared fixtures: bundled corpora, a random Java method generator, small helpers."""

from __future__ import annotations

import random
import sys
from pathlib import Path

import numpy as np
import pytest

from coverageability.javamodel import parse_project
from coverageability.labeling import LabelingConfig, load_coverage_report
from coverageability.metrics.extract import extract_metrics, read_metrics_table
from coverageability.dataset import join_features_targets

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = FIXTURES / "corpus"
RULES = FIXTURES / "rules"
GOLDEN = FIXTURES / "golden_metrics.csv"
COVERAGE = FIXTURES / "coverage.csv"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: runs for tens of seconds or more")


@pytest.fixture(scope="session")
def corpus_vectors():
    return extract_metrics(parse_project(CORPUS))


@pytest.fixture(scope="session")
def golden_table():
    return read_metrics_table(GOLDEN.read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def rules_vectors():
    return {v.qualified_name: v for v in extract_metrics(parse_project(RULES))}


@pytest.fixture(scope="session")
def corpus_dataset(golden_table):
    return join_features_targets(golden_table, load_coverage_report(COVERAGE), LabelingConfig(b=1))


# ---------------------------------------------------------------- random Java

_CONDS = ["a > 0", "b < 3", "a == b", "flag", "!flag", "s.isEmpty()", "a % 2 == 0"]


def _cond(rng: random.Random) -> str:
    parts = [rng.choice(_CONDS) for _ in range(rng.randint(1, 4))]
    out = parts[0]
    for p in parts[1:]:
        out = f"({out} {rng.choice(['&&', '||'])} {p})" if rng.random() < 0.5 else f"{out} {rng.choice(['&&', '||'])} {p}"
    return out


def _stmts(rng: random.Random, depth: int) -> list[str]:
    out = []
    for _ in range(rng.randint(1, 3)):
        kind = rng.choice(["assign", "if", "ifelse", "while", "for", "switch", "ternary", "do", "try", "foreach"])
        if depth <= 0 or kind == "assign":
            out.append(f"a = a + {rng.randint(1, 9)};")
        elif kind == "ternary":
            out.append(f"b = {_cond(rng)} ? a : b;")
        elif kind == "if":
            out.append(f"if ({_cond(rng)}) {{ {' '.join(_stmts(rng, depth - 1))} }}")
        elif kind == "ifelse":
            out.append(
                f"if ({_cond(rng)}) {{ {' '.join(_stmts(rng, depth - 1))} }} "
                f"else {{ {' '.join(_stmts(rng, depth - 1))} }}"
            )
        elif kind == "while":
            out.append(f"while ({_cond(rng)}) {{ a--; {' '.join(_stmts(rng, depth - 1))} }}")
        elif kind == "do":
            out.append(f"do {{ a--; {' '.join(_stmts(rng, depth - 1))} }} while ({_cond(rng)});")
        elif kind == "for":
            out.append(f"for (int i = 0; i < a && {rng.choice(_CONDS)}; i++) {{ {' '.join(_stmts(rng, depth - 1))} }}")
        elif kind == "foreach":
            out.append(f"for (int x : xs) {{ {' '.join(_stmts(rng, depth - 1))} }}")
        elif kind == "try":
            out.append(f"try {{ {' '.join(_stmts(rng, depth - 1))} }} catch (RuntimeException e) {{ a = 0; }}")
        else:
            cases = " ".join(
                f"case {c}: {' '.join(_stmts(rng, depth - 1))} {'break;' if rng.random() < 0.7 else ''}"
                for c in range(rng.randint(1, 4))
            )
            default = "default: a = 1;" if rng.random() < 0.5 else ""
            out.append(f"switch (a) {{ {cases} {default} }}")
    return out


def random_method(rng: random.Random, name: str) -> str:
    body = " ".join(_stmts(rng, rng.randint(0, 3)))
    return f"int {name}(int a, int b, boolean flag, String s, int[] xs) {{ {body} return a + b; }}"


@pytest.fixture
def np_rng():
    return np.random.default_rng(20240611)


def constant_model(value: float, columns=None):
    """A linear model over the given raw columns that always answers `value`."""
    from coverageability.dataset import RobustScalerStats
    from coverageability.learners.model import TrainedModel
    from coverageability.learners.sgd import SGDParams, SGDRegressor
    from coverageability.metrics.schema import full_schema

    columns = tuple(columns or full_schema().base_names())
    d = len(columns)
    est = SGDRegressor(SGDParams())
    est.coef_ = np.zeros(d)
    est.intercept_ = float(value)
    scaler = RobustScalerStats(columns, np.zeros(d), np.ones(d))
    return TrainedModel("sgdr", {}, est, columns, scaler, np.zeros(d), np.ones(d), 0)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}")
    missing = [n for n in range(1, 11) if n not in results]
    if missing:
        terminalreporter.write_line(f"not run: criteria {missing}")
