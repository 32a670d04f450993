"""Rebuild the bundled corpus, its golden metrics and a coverage report.

Run from the repository root: ``python3 tests/fixtures/regenerate.py``.
The golden table comes from the generator's own bookkeeping, not from the
extractor, so it stays an independent oracle.
"""

import shutil
from pathlib import Path

from coverageability.metrics.extract import FeatureVector, metrics_table_text
from coverageability.metrics.schema import full_schema
from coverageability.synthetic.coverage import synthesize_coverage
from coverageability.labeling import coverage_report_text
from coverageability.metrics.extract import read_metrics_table
from coverageability.synthetic.javacorpus import generate_corpus

HERE = Path(__file__).parent
SEED = 7


def main() -> None:
    corpus = HERE / "corpus"
    shutil.rmtree(corpus, ignore_errors=True)
    golden = generate_corpus(corpus, SEED)
    names = full_schema().names
    vectors = [FeatureVector(qn, tuple(float(golden[qn][n]) for n in names)) for qn in sorted(golden)]
    text = metrics_table_text(vectors)
    (HERE / "golden_metrics.csv").write_text(text, encoding="utf-8")
    rows = synthesize_coverage(read_metrics_table(text), SEED)
    (HERE / "coverage.csv").write_text(coverage_report_text(rows), encoding="utf-8")


if __name__ == "__main__":
    main()
