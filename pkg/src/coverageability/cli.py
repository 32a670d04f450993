"""Command-line entry point: extract, label, dataset, train, evaluate, predict,
gate, inspect, report and pipeline."""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .dataset import (
    TARGET,
    Dataset,
    RobustScalerStats,
    dataset_text,
    join_features_targets,
    prepare,
    provenance_text,
    read_dataset_text,
)
from .fileio import output_path, thread_count, write_atomic
from .inference import (
    DEFAULT_GATE,
    PredictionError,
    decide,
    gate_check,
    outcomes_text,
    read_outcomes,
)
from .inspection import DEFAULT_REPEATS, impact_table, impact_text, importance_text, permutation_importance
from .labeling import TARGET_COLUMNS, LabelingConfig, build_target_vector, load_coverage_report
from .learners.model import KINDS, TrainedModel
from .metrics.extract import MetricsExtractor, extract_metrics, metrics_table_text, read_metrics_table
from .metrics.schema import VARIANTS
from .reporting import DEFAULT_BINS, render_distribution_report
from .selection import evaluate, trace_text
from .training import load_grid, train_model

log = logging.getLogger("coverageability")


class StageError(RuntimeError):
    def __init__(self, stage: str, cause: BaseException):
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause


# ----------------------------------------------------------------- helpers


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path, text: str) -> Path:
    p = write_atomic(output_path(path), text)
    log.info("wrote %s", p)
    return p


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def targets_text(records, config: LabelingConfig) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("class",) + TARGET_COLUMNS)
    for r in records:
        w.writerow([r.qualified_name, *(repr(float(v)) for v in build_target_vector(r, config).as_tuple())])
    return buf.getvalue()


def read_target_columns(text: str) -> tuple[np.ndarray, np.ndarray]:
    """(coverageability, mean coverage) from a targets or dataset file."""
    rows = list(csv.DictReader(io.StringIO(text)))
    if not rows or TARGET not in rows[0] or "target_mean" not in rows[0]:
        raise ValueError("input lacks target_coverageability / target_mean columns")
    return (
        np.array([float(r[TARGET]) for r in rows]),
        np.array([float(r["target_mean"]) for r in rows]),
    )


def _load_split(dataset_dir: Path) -> tuple[Dataset, Dataset, RobustScalerStats, dict]:
    prov = json.loads(_read(dataset_dir / "provenance.json"))
    train = read_dataset_text(_read(dataset_dir / "train.csv"), prov["variant"])
    test = read_dataset_text(_read(dataset_dir / "test.csv"), prov["variant"])
    return train, test, RobustScalerStats.from_json(prov["scaler"]), prov


def _require_seed(args, parser):
    if args.seed is None:
        parser.error(f"'{args.command}' is stochastic: --seed is required")


# ---------------------------------------------------------------- commands


def cmd_extract(args) -> int:
    from .javamodel import parse_project
    from .javamodel.model import dump_model

    project = parse_project(args.source)
    for path, why in project.skipped:
        log.warning("skipped %s: %s", path, why)
    if args.dump_model:
        _write(args.dump_model, dump_model(project))
    _write(args.out, metrics_table_text(extract_metrics(project)))
    return 0


def cmd_label(args) -> int:
    records = load_coverage_report(args.coverage)
    _write(args.out, targets_text(records, LabelingConfig(args.b)))
    return 0


def build_datasets(metrics_path, coverage_path, b, variant, seed, train_fraction, lof_k, lof_threshold):
    table = read_metrics_table(_read(metrics_path))
    full = join_features_targets(table, load_coverage_report(coverage_path), LabelingConfig(b))
    return prepare(full, variant, seed, train_fraction, lof_k, lof_threshold)


def write_datasets(prepared, out_dir: Path) -> None:
    _write(out_dir / "train.csv", dataset_text(prepared.train))
    _write(out_dir / "test.csv", dataset_text(prepared.test))
    _write(out_dir / "provenance.json", provenance_text(prepared.provenance))


def cmd_dataset(args) -> int:
    prepared = build_datasets(
        args.metrics, args.coverage, args.b, args.variant, args.seed, args.train_fraction, args.lof_k, args.lof_threshold
    )
    write_datasets(prepared, Path(args.out))
    return 0


def cmd_train(args) -> int:
    train, _, scaler, _ = _load_split(Path(args.dataset))
    model, results = train_model(args.learner, train, scaler, load_grid(args.grid), args.seed, thread_count())
    _write(args.out, model.dumps())
    if args.trace_dir:
        for kind, res in results.items():
            _write(Path(args.trace_dir) / f"cv_trace_{kind}.csv", trace_text(res.trace))
    return 0


def cmd_evaluate(args) -> int:
    model = TrainedModel.loads(_read(args.model))
    _, test, _, _ = _load_split(Path(args.dataset))
    if tuple(test.columns) != model.columns:
        raise ValueError("dataset columns differ from the model columns")
    report = evaluate(test.target(TARGET), model.predict_scaled(test.X))
    text = report.to_json()
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_predict(args) -> int:
    from .javamodel import parse_project

    model = TrainedModel.loads(_read(args.model))
    project = parse_project(args.source)
    ex = MetricsExtractor(project)
    names = args.class_name or sorted(c.qualified_name for c in project.classes)
    outcomes, failed = [], 0
    for name in names:
        if name not in project.index.classes:
            print(f"error: class {name!r} not found", file=sys.stderr)
            return 2
        metrics = ex.vector(project.cls(name)).as_dict()
        try:
            outcomes.append(decide(name, metrics, model))
        except PredictionError as e:
            print(str(e), file=sys.stderr)
            failed += 1
    text = outcomes_text(outcomes)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return 3 if failed else 0


def cmd_gate(args) -> int:
    outcomes = read_outcomes(_read(args.outcomes))
    res = gate_check(outcomes, args.threshold)
    sys.stdout.write(res.text(args.threshold))
    return res.exit_status


def run_inspection(model: TrainedModel, test: Dataset, repeats: int, seed: int, top: int):
    rep = permutation_importance(model.predict_scaled, test.X, test.target(TARGET), test.columns, repeats, seed)
    impacts = impact_table(test.X, test.target(TARGET), test.columns, rep.top(top))
    return rep, impacts


def cmd_inspect(args) -> int:
    model = TrainedModel.loads(_read(args.model))
    _, test, _, _ = _load_split(Path(args.dataset))
    rep, impacts = run_inspection(model, test, args.repeats, args.seed, args.top)
    _write(args.importance_out, importance_text(rep))
    _write(args.impact_out, impact_text(impacts))
    return 0


def cmd_report(args) -> int:
    cmu, mean = read_target_columns(_read(args.targets))
    rep = render_distribution_report(cmu, mean, args.bins)
    _write(args.out, rep.text())
    if args.svg:
        _write(args.svg, rep.svg())
    return 0


# ---------------------------------------------------------------- pipeline

PIPELINE_DEFAULTS = {
    "b": "1",
    "variant": "DS3",
    "train_fraction": "0.75",
    "lof_k": "20",
    "lof_threshold": "1.5",
    "learner": "vor",
    "grid": "reduced",
    "repeats": str(DEFAULT_REPEATS),
    "top": "15",
    "bins": str(DEFAULT_BINS),
}


def read_pipeline_config(path) -> dict:
    cp = configparser.ConfigParser()
    if not cp.read(path, encoding="utf-8"):
        raise FileNotFoundError(f"config {path} not found")
    if "pipeline" not in cp:
        raise ValueError("config needs a [pipeline] section")
    sec = cp["pipeline"]
    cfg = dict(PIPELINE_DEFAULTS)
    cfg.update(sec)
    for key in ("source", "coverage", "output"):
        if key not in cfg:
            raise ValueError(f"config [pipeline] lacks '{key}'")
    base = Path(path).parent
    for key in ("source", "coverage"):
        p = Path(cfg[key])
        cfg[key] = str(p if p.is_absolute() else base / p)
    if cfg["grid"] not in ("reduced", "full"):
        g = Path(cfg["grid"])
        cfg["grid"] = str(g if g.is_absolute() else base / g)
    return cfg


def run_pipeline(cfg: dict) -> Path:
    from .javamodel import parse_project

    out = output_path(cfg["output"])
    seed = int(cfg["seed"])
    stage = "config"
    try:
        stage = "extract"
        project = parse_project(cfg["source"])
        write_atomic(out / "metrics.csv", metrics_table_text(extract_metrics(project)))
        stage = "label"
        records = load_coverage_report(cfg["coverage"])
        write_atomic(out / "targets.csv", targets_text(records, LabelingConfig(int(cfg["b"]))))
        stage = "dataset"
        prepared = build_datasets(
            out / "metrics.csv",
            cfg["coverage"],
            int(cfg["b"]),
            cfg["variant"],
            seed,
            float(cfg["train_fraction"]),
            int(cfg["lof_k"]),
            float(cfg["lof_threshold"]),
        )
        for name, text in (
            ("train.csv", dataset_text(prepared.train)),
            ("test.csv", dataset_text(prepared.test)),
            ("provenance.json", provenance_text(prepared.provenance)),
        ):
            write_atomic(out / "dataset" / name, text)
        stage = "train"
        model, results = train_model(
            cfg["learner"], prepared.train, prepared.scaler, load_grid(cfg["grid"]), seed, thread_count()
        )
        for kind, res in results.items():
            write_atomic(out / f"cv_trace_{kind}.csv", trace_text(res.trace))
        write_atomic(out / "model.json", model.dumps())
        stage = "evaluate"
        test = prepared.test
        write_atomic(out / "evaluation.json", evaluate(test.target(TARGET), model.predict_scaled(test.X)).to_json())
        stage = "inspect"
        rep, impacts = run_inspection(model, test, int(cfg["repeats"]), seed, int(cfg["top"]))
        write_atomic(out / "importance.csv", importance_text(rep))
        write_atomic(out / "impact.csv", impact_text(impacts))
        stage = "report"
        cmu, mean = read_target_columns(_read(out / "targets.csv"))
        dist = render_distribution_report(cmu, mean, int(cfg["bins"]))
        write_atomic(out / "distribution.csv", dist.text())
        write_atomic(out / "distribution.svg", dist.svg())
    except Exception as e:
        write_atomic(out / "PARTIAL", f"pipeline stopped in stage '{stage}': {e}\n")
        raise StageError(stage, e) from e
    partial = out / "PARTIAL"
    if partial.exists():
        partial.unlink()
    return out


def cmd_pipeline(args) -> int:
    cfg = read_pipeline_config(args.config)
    if args.seed is not None:
        cfg["seed"] = str(args.seed)
    if args.output:
        cfg["output"] = args.output
    if "seed" not in cfg:
        print("error: 'pipeline' is stochastic: give seed in the config or --seed", file=sys.stderr)
        return 2
    out = run_pipeline(cfg)
    print(f"artifacts written to {out}")
    return 0


# ------------------------------------------------------------------ parser

STOCHASTIC = {"dataset", "train", "inspect"}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coverageability", description="Predict test-effort-aware coverage of Java classes.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--seed", type=int, default=None, help="random seed (required for stochastic commands)")
        return sp

    sp = add("extract", "compute the metrics table for a Java source tree")
    sp.add_argument("--source", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--dump-model", metavar="PATH", help="also write the parsed project model as text")
    sp.set_defaults(func=cmd_extract)

    sp = add("label", "turn a coverage report into target vectors")
    sp.add_argument("--coverage", required=True)
    sp.add_argument("--b", type=int, default=1)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_label)

    sp = add("dataset", "join, filter, split, scale and select")
    sp.add_argument("--metrics", required=True)
    sp.add_argument("--coverage", required=True)
    sp.add_argument("--b", type=int, default=1)
    sp.add_argument("--variant", choices=VARIANTS, default="DS1")
    sp.add_argument("--train-fraction", type=float, default=0.75)
    sp.add_argument("--lof-k", type=int, default=20)
    sp.add_argument("--lof-threshold", type=float, default=1.5)
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=cmd_dataset)

    sp = add("train", "grid-search a learner and save the refit model")
    sp.add_argument("--dataset", required=True, help="directory written by 'dataset'")
    sp.add_argument("--learner", choices=KINDS, required=True)
    sp.add_argument("--grid", default="reduced", help="'reduced', 'full', or an INI grid file")
    sp.add_argument("--out", required=True)
    sp.add_argument("--trace-dir")
    sp.set_defaults(func=cmd_train)

    sp = add("evaluate", "score a model on the held-out rows")
    sp.add_argument("--model", required=True)
    sp.add_argument("--dataset", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_evaluate)

    sp = add("predict", "Coverageability of classes in a source tree")
    sp.add_argument("--source", required=True)
    sp.add_argument("--model", required=True)
    sp.add_argument("--class", dest="class_name", action="append", help="qualified class name; repeatable")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_predict)

    sp = add("gate", "fail when any class falls below a threshold")
    sp.add_argument("--outcomes", required=True)
    sp.add_argument("--threshold", type=float, default=DEFAULT_GATE)
    sp.set_defaults(func=cmd_gate)

    sp = add("inspect", "permutation importance and impact table")
    sp.add_argument("--model", required=True)
    sp.add_argument("--dataset", required=True)
    sp.add_argument("--repeats", type=int, default=DEFAULT_REPEATS)
    sp.add_argument("--top", type=int, default=15)
    sp.add_argument("--importance-out", required=True)
    sp.add_argument("--impact-out", required=True)
    sp.set_defaults(func=cmd_inspect)

    sp = add("report", "histogram of Coverageability and mean coverage")
    sp.add_argument("--targets", required=True, help="targets or dataset file")
    sp.add_argument("--bins", type=int, default=DEFAULT_BINS)
    sp.add_argument("--out", required=True)
    sp.add_argument("--svg")
    sp.set_defaults(func=cmd_report)

    sp = add("pipeline", "run every stage from an INI config")
    sp.add_argument("config")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_pipeline)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.command in STOCHASTIC:
        _require_seed(args, parser)
    try:
        return args.func(args)
    except StageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
