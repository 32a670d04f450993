"""Dataset assembly and preprocessing: filter, outliers, split, scale, select."""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import warnings
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional, Sequence

import numpy as np

from .labeling import TARGET_COLUMNS, CoverageRecord, LabelingConfig, build_target_vector
from .metrics.extract import MetricsTable, format_value
from .metrics.schema import DS2_K, VARIANTS, full_schema

log = logging.getLogger(__name__)

TARGET = "target_coverageability"
LOF_EPS = 1e-10


class LOFSkipped(UserWarning):
    pass


@dataclass(frozen=True)
class Dataset:
    ids: tuple[str, ...]
    columns: tuple[str, ...]
    X: np.ndarray
    Y: np.ndarray  # columns as in TARGET_COLUMNS
    variant: str = "DS1"
    provenance: Mapping = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.ids)
        if self.X.shape != (n, len(self.columns)):
            raise ValueError(f"feature matrix {self.X.shape} does not match {n} rows x {len(self.columns)} columns")
        if self.Y.shape != (n, len(TARGET_COLUMNS)):
            raise ValueError(f"target matrix {self.Y.shape} does not match {n} rows")

    def __len__(self) -> int:
        return len(self.ids)

    def target(self, name: str = TARGET) -> np.ndarray:
        return self.Y[:, TARGET_COLUMNS.index(name)]

    def column(self, name: str) -> np.ndarray:
        return self.X[:, self.columns.index(name)]

    def rows(self, idx) -> "Dataset":
        idx = np.asarray(idx, dtype=int)
        return replace(self, ids=tuple(self.ids[i] for i in idx), X=self.X[idx], Y=self.Y[idx])

    def select_columns(self, names: Sequence[str], variant: Optional[str] = None) -> "Dataset":
        pos = [self.columns.index(n) for n in names]
        return replace(self, columns=tuple(names), X=self.X[:, pos], variant=variant or self.variant)

    def with_provenance(self, **items) -> "Dataset":
        prov = dict(self.provenance)
        prov.update(items)
        return replace(self, provenance=prov)


def join_features_targets(
    table: MetricsTable, records: Sequence[CoverageRecord], config: LabelingConfig = LabelingConfig()
) -> Dataset:
    """Inner join on class name; classes lacking either side are logged and dropped."""
    by_name = {r.qualified_name: r for r in records}
    ids, xs, ys = [], [], []
    for i, qn in enumerate(table.classes):
        rec = by_name.get(qn)
        if rec is None:
            continue
        ids.append(qn)
        xs.append(table.values[i])
        ys.append(build_target_vector(rec, config).as_tuple())
    unlabeled = len(table.classes) - len(ids)
    unmatched = len(set(by_name) - set(table.classes))
    if unlabeled or unmatched:
        log.info("join: %d classes without coverage, %d coverage rows without metrics", unlabeled, unmatched)
    X = np.array(xs, dtype=float).reshape(len(ids), len(table.columns))
    Y = np.array(ys, dtype=float).reshape(len(ids), len(TARGET_COLUMNS))
    return Dataset(tuple(ids), table.columns, X, Y, "DS1", {"b": config.b})


# ------------------------------------------------------------- filtering


def trivial_reason(row: Mapping[str, float]) -> Optional[str]:
    """'simple' / 'data' when a class is trivially coverable, else None."""
    if row["CSLOC"] < 5:
        return "simple"
    if row["CSNOMNAMM"] == 0 and row["CSNOIA"] + row["CSNOSA"] > 0:
        return "data"
    return None


def filter_trivial_classes(ds: Dataset) -> Dataset:
    keep, removed = [], []
    cols = {n: ds.columns.index(n) for n in ("CSLOC", "CSNOMNAMM", "CSNOIA", "CSNOSA")}
    for i, qn in enumerate(ds.ids):
        reason = trivial_reason({n: ds.X[i, j] for n, j in cols.items()})
        if reason is None:
            keep.append(i)
        else:
            removed.append([qn, reason])
    return ds.rows(keep).with_provenance(trivial_removed=removed)


# ------------------------------------------------------------------- LOF


def lof_scores(X: np.ndarray, k: int) -> np.ndarray:
    """Local Outlier Factor of every row under Euclidean distance."""
    X = np.asarray(X, dtype=float)
    n = X.shape[0]
    if k < 1 or k >= n:
        raise ValueError(f"LOF needs 1 <= k < n (k={k}, n={n})")
    sq = np.einsum("ij,ij->i", X, X)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (X @ X.T)
    np.maximum(d2, 0.0, out=d2)
    D = np.sqrt(d2)
    np.fill_diagonal(D, np.inf)
    # stable sort keeps the lower index first among equidistant neighbours
    nbrs = np.argsort(D, axis=1, kind="stable")[:, :k]
    dist = np.take_along_axis(D, nbrs, axis=1)
    k_dist = dist[:, -1]
    reach = np.maximum(dist, k_dist[nbrs])
    lrd = 1.0 / (reach.mean(axis=1) + LOF_EPS)
    return lrd[nbrs].mean(axis=1) / lrd


def lof_outlier_removal(ds: Dataset, k: int = 20, threshold: float = 1.5) -> Dataset:
    if len(ds) < k + 1:
        warnings.warn(f"LOF skipped: {len(ds)} rows is fewer than k+1={k + 1}", LOFSkipped, stacklevel=2)
        return ds.with_provenance(lof={"skipped": True, "k": k, "threshold": threshold, "removed": []})
    scores = lof_scores(ds.X, k)
    keep = np.flatnonzero(scores <= threshold)
    removed = [ds.ids[i] for i in np.flatnonzero(scores > threshold)]
    return ds.rows(keep).with_provenance(lof={"skipped": False, "k": k, "threshold": threshold, "removed": removed})


# ----------------------------------------------------------------- split


def train_size(n: int, fraction: float) -> int:
    """Rows going to training: nearest integer to ``n * fraction``, ties to train."""
    if not 0.0 < fraction < 1.0:
        raise ValueError("train fraction must lie strictly between 0 and 1")
    return int(math.floor(n * fraction + 0.5))


def split_indices(n: int, fraction: float, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    perm = rng.permutation(n)
    m = train_size(n, fraction)
    return np.sort(perm[:m]), np.sort(perm[m:])


def split(ds: Dataset, train_fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    tr, te = split_indices(len(ds), train_fraction, np.random.default_rng(seed))
    prov = {"split": {"seed": seed, "train_fraction": train_fraction}}
    return ds.rows(tr).with_provenance(**prov), ds.rows(te).with_provenance(**prov)


# ----------------------------------------------------------------- scale


@dataclass(frozen=True)
class RobustScalerStats:
    columns: tuple[str, ...]
    median: np.ndarray
    iqr: np.ndarray

    @classmethod
    def fit(cls, X: np.ndarray, columns: Sequence[str]) -> "RobustScalerStats":
        X = np.asarray(X, dtype=float)
        if X.shape[0] == 0:
            raise ValueError("cannot fit a scaler on zero rows")
        q1, med, q3 = np.percentile(X, [25, 50, 75], axis=0)
        return cls(tuple(columns), med, q3 - q1)

    def transform(self, X: np.ndarray) -> np.ndarray:
        scale = np.where(self.iqr > 0, self.iqr, 1.0)
        return (np.asarray(X, dtype=float) - self.median) / scale

    def subset(self, names: Sequence[str]) -> "RobustScalerStats":
        pos = [self.columns.index(n) for n in names]
        return RobustScalerStats(tuple(names), self.median[pos], self.iqr[pos])

    def to_json(self) -> dict:
        return {"columns": list(self.columns), "median": self.median.tolist(), "iqr": self.iqr.tolist()}

    @classmethod
    def from_json(cls, d: Mapping) -> "RobustScalerStats":
        return cls(tuple(d["columns"]), np.array(d["median"], dtype=float), np.array(d["iqr"], dtype=float))


def robust_scale(train: Dataset, test: Dataset) -> tuple[Dataset, Dataset, RobustScalerStats]:
    stats = RobustScalerStats.fit(train.X, train.columns)
    return replace(train, X=stats.transform(train.X)), replace(test, X=stats.transform(test.X)), stats


# ---------------------------------------------------------------- select


def f_regression(X: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Univariate linear-regression F statistic per column; constant columns score 0."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    n = X.shape[0]
    xc = X - X.mean(axis=0)
    yc = y - y.mean()
    sxx = np.einsum("ij,ij->j", xc, xc)
    syy = float(yc @ yc)
    sxy = xc.T @ yc
    with np.errstate(divide="ignore", invalid="ignore"):
        r2 = np.where((sxx > 0) & (syy > 0), sxy**2 / (sxx * syy), 0.0)
        r2 = np.clip(r2, 0.0, 1.0)
        F = np.where(r2 < 1.0, r2 / (1.0 - r2) * (n - 2), np.inf)
    return np.where(r2 > 0, F, 0.0)


def select_k_best(X: np.ndarray, y: np.ndarray, k: int) -> np.ndarray:
    """Boolean mask of the `k` highest-F columns; ties go to the earlier column."""
    d = X.shape[1]
    if not 1 <= k <= d:
        raise ValueError(f"k={k} outside 1..{d}")
    order = np.argsort(-f_regression(X, y), kind="stable")
    mask = np.zeros(d, dtype=bool)
    mask[order[:k]] = True
    return mask


# --------------------------------------------------------------- variants


def materialize_variant(full: Dataset, variant: str, train: Optional[Dataset] = None, k: int = DS2_K) -> Dataset:
    """Column subset for `variant`. DS2 ranks features on `train` (defaults to `full`)."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "DS2":
        ref = train if train is not None else full
        mask = select_k_best(ref.X, ref.target(TARGET), k)
        names = [c for c, keep in zip(full.columns, mask) if keep]
        return full.select_columns(names, "DS2").with_provenance(selected=names)
    names = full_schema().variant_columns(variant)
    return full.select_columns(names, variant)


@dataclass(frozen=True)
class PreparedData:
    train: Dataset
    test: Dataset
    scaler: RobustScalerStats
    provenance: Mapping


def prepare(
    full: Dataset,
    variant: str,
    seed: int,
    train_fraction: float = 0.75,
    lof_k: int = 20,
    lof_threshold: float = 1.5,
    k_best: int = DS2_K,
) -> PreparedData:
    """filter -> outlier removal -> split -> scale -> select, in that order."""
    ds = filter_trivial_classes(full)
    if variant != "DS2":
        ds = materialize_variant(ds, variant)
    ds = lof_outlier_removal(ds, lof_k, lof_threshold)
    if len(ds) < 2:
        raise ValueError(f"only {len(ds)} rows left after filtering; cannot split")
    train, test = split(ds, train_fraction, seed)
    train, test, stats = robust_scale(train, test)
    if variant == "DS2":
        sel = materialize_variant(train, "DS2", train, k_best)
        names = sel.provenance["selected"]
        train = sel
        test = test.select_columns(names, "DS2")
        stats = stats.subset(names)
    prov = dict(ds.provenance)
    prov.update(
        variant=variant,
        seed=seed,
        train_fraction=train_fraction,
        scaler=stats.to_json(),
        selected=list(train.columns),
        train_ids=list(train.ids),
        test_ids=list(test.ids),
    )
    return PreparedData(train.with_provenance(**prov), test.with_provenance(**prov), stats, prov)


# -------------------------------------------------------------------- I/O


def dataset_text(ds: Dataset) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("class",) + ds.columns + TARGET_COLUMNS)
    for i, qn in enumerate(ds.ids):
        w.writerow([qn] + [format_value(x) for x in ds.X[i]] + [repr(float(y)) for y in ds.Y[i]])
    return buf.getvalue()


def read_dataset_text(text: str, variant: str = "DS1") -> Dataset:
    rows = list(csv.reader(io.StringIO(text)))
    header = tuple(rows[0])
    if header[0] != "class" or header[-4:] != TARGET_COLUMNS:
        raise ValueError("dataset header must be class,<features>,<four targets>")
    columns = header[1:-4]
    ids, xs, ys = [], [], []
    for lineno, r in enumerate(rows[1:], start=2):
        if len(r) != len(header):
            raise ValueError(f"line {lineno}: expected {len(header)} fields")
        ids.append(r[0])
        xs.append([float(v) for v in r[1:-4]])
        ys.append([float(v) for v in r[-4:]])
    n = len(ids)
    return Dataset(
        tuple(ids),
        columns,
        np.array(xs, dtype=float).reshape(n, len(columns)),
        np.array(ys, dtype=float).reshape(n, 4),
        variant,
    )


def provenance_text(prov: Mapping) -> str:
    return json.dumps(prov, indent=2, sort_keys=True) + "\n"
