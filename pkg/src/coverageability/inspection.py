"""Permutation importance and correlation-based impact labels."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .selection import r2_score

P_THRESHOLD = 0.05
DEFAULT_REPEATS = 50


class UndefinedCorrelation(ValueError):
    pass


# ------------------------------------------------------------- importance


@dataclass(frozen=True)
class ImportanceReport:
    columns: tuple[str, ...]
    drops: np.ndarray  # (features, repeats)
    baseline: float
    repeats: int
    seed: int

    @property
    def mean_drop(self) -> np.ndarray:
        return self.drops.mean(axis=1)

    @property
    def order(self) -> np.ndarray:
        """Feature indices by descending mean drop; ties keep column order."""
        return np.argsort(-self.mean_drop, kind="stable")

    @property
    def ranks(self) -> np.ndarray:
        r = np.empty(len(self.columns), dtype=int)
        r[self.order] = np.arange(1, len(self.columns) + 1)
        return r

    def top(self, k: int) -> list[str]:
        return [self.columns[i] for i in self.order[:k]]


def permutation_importance(
    predict: Callable[[np.ndarray], np.ndarray],
    X,
    y,
    columns: Sequence[str],
    repeats: int = DEFAULT_REPEATS,
    seed: int = 0,
    permute: Optional[Callable[[np.random.Generator, int], np.ndarray]] = None,
) -> ImportanceReport:
    """Drop in R^2 when one column is shuffled, per feature and repeat.

    Each (feature, repeat) pair draws from its own generator, so results do not
    depend on evaluation order. `permute` overrides the shuffle (tests only).
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    n, d = X.shape
    if repeats < 1:
        raise ValueError("repeats must be positive")
    base, _ = r2_score(y, np.asarray(predict(X), dtype=float))
    permute = permute or (lambda rng, m: rng.permutation(m))
    drops = np.empty((d, repeats))
    for j in range(d):
        stack = np.repeat(X[None, :, :], repeats, axis=0)
        for r in range(repeats):
            rng = np.random.default_rng([seed, j, r])
            stack[r, :, j] = X[permute(rng, n), j]
        preds = np.asarray(predict(stack.reshape(repeats * n, d)), dtype=float).reshape(repeats, n)
        for r in range(repeats):
            drops[j, r] = base - r2_score(y, preds[r])[0]
    return ImportanceReport(tuple(columns), drops, base, repeats, seed)


def importance_text(rep: ImportanceReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["feature", "rank", "mean_drop", *(f"drop_{i + 1}" for i in range(rep.repeats))])
    means = rep.mean_drop
    for i in rep.order:
        w.writerow([rep.columns[i], rep.ranks[i], repr(float(means[i])), *(repr(float(v)) for v in rep.drops[i])])
    return buf.getvalue()


# ------------------------------------------------------------ correlation


def _betacf(a: float, b: float, x: float, tol: float = 1e-12, max_iter: int = 10_000) -> float:
    """Continued fraction for the regularized incomplete beta (modified Lentz)."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    d = 1.0 / (d if abs(d) > tiny else tiny)
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        d = 1.0 / (d if abs(d) > tiny else tiny)
        c = 1.0 + aa / c
        c = c if abs(c) > tiny else tiny
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        d = 1.0 / (d if abs(d) > tiny else tiny)
        c = 1.0 + aa / c
        c = c if abs(c) > tiny else tiny
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < tol:
            return h
    raise ArithmeticError("incomplete beta continued fraction did not converge")


def betainc(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b)."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b) + a * math.log(x) + b * math.log1p(-x)
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def t_two_sided_p(t: float, df: float) -> float:
    if math.isinf(t):
        return 0.0
    return betainc(df / 2.0, 0.5, df / (df + t * t))


def pearson_correlation(x, y) -> tuple[float, float]:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("x and y must be 1-d and of equal length")
    n = x.size
    if n < 3:
        raise ValueError("correlation needs at least 3 points")
    xc = x - x.mean()
    yc = y - y.mean()
    sxx = float(xc @ xc)
    syy = float(yc @ yc)
    if sxx == 0.0 or syy == 0.0:
        raise UndefinedCorrelation("correlation is undefined for a constant variable")
    r = float(xc @ yc) / math.sqrt(sxx * syy)
    r = max(-1.0, min(1.0, r))
    df = n - 2
    if abs(r) == 1.0:
        return r, 0.0
    t = r * math.sqrt(df / (1.0 - r * r))
    return r, t_two_sided_p(t, df)


def classify_impact(r: float, p: float) -> str:
    if p > P_THRESHOLD or r == 0:
        return "Unknown"
    return "Positive" if r > 0 else "Negative"


@dataclass(frozen=True)
class ImpactRecord:
    metric: str
    r: float
    p: float
    impact: str


def impact_table(X, y, columns: Sequence[str], names: Sequence[str]) -> list[ImpactRecord]:
    """Correlate each named raw column with the target; constant columns are Unknown."""
    X = np.asarray(X, dtype=float)
    out = []
    for name in names:
        try:
            r, p = pearson_correlation(X[:, list(columns).index(name)], y)
        except UndefinedCorrelation:
            out.append(ImpactRecord(name, math.nan, math.nan, "Unknown"))
            continue
        out.append(ImpactRecord(name, r, p, classify_impact(r, p)))
    return out


def impact_text(records: Sequence[ImpactRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["Metric", "Correlation", "P-value", "Impact"])
    for rec in records:
        w.writerow([rec.metric, repr(rec.r), repr(rec.p), rec.impact])
    return buf.getvalue()
