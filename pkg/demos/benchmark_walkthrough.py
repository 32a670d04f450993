"""Synthetic benchmark, start to finish.

Two thousand rows whose target is a known nonlinear function of ten columns
(plus ten noise columns). We grid-search the four learners and the voter,
score them on held-out rows, then ask permutation importance which columns
mattered. The informative ones are M00..M09.

Takes a little over a minute on one core.

Usage:
    python3 demos/benchmark_walkthrough.py [seed]
"""

import sys
import time

from coverageability.inspection import permutation_importance
from coverageability.synthetic.benchmark import make_benchmark, run_benchmark


def main(seed: int = 0) -> None:
    bench = make_benchmark(n=2000, sigma=0.05, seed=seed)
    print(f"{bench.X.shape[0]} rows, {bench.X.shape[1]} columns, informative: {bench.columns[0]}..{bench.columns[9]}")

    t = time.perf_counter()
    run = run_benchmark(bench, seed)
    print(f"grid search + refit: {time.perf_counter() - t:.0f} s\n")

    print(f"{'learner':<6} {'R2':>7} {'RMSE':>8} {'MAE':>8}  chosen")
    for kind, rep in run.reports.items():
        chosen = run.results[kind].best_hp
        print(f"{kind:<6} {rep.r2:>7.3f} {rep.rmse:>8.4f} {rep.mae:>8.4f}  {chosen}")

    # importance on held-out rows, using the boosted trees (cheap to predict)
    model = run.results["hgbr"].estimator
    rep = permutation_importance(model.predict, run.X_test, run.y_test, run.columns, repeats=10, seed=seed)
    print("\nmean R2 drop when a column is shuffled (top 12):")
    for j in rep.order[:12]:
        tag = "" if j < 10 else "   <- noise"
        print(f"  {run.columns[j]}  {rep.mean_drop[j]:.4f}{tag}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 0)
