"""From Java sources to a CI gate, driven through the command line.

Generates a small synthetic Java project with a matching coverage report,
runs the whole pipeline from an INI file, then scores two hand-written
classes and gates on them. One is trivial and never reaches the model.

Everything lands in a temporary directory that is printed at the end
(pass --keep to leave it behind).

Usage:
    python3 demos/corpus_to_gate.py [--keep]
"""

import shutil
import sys
import tempfile
from pathlib import Path

from coverageability.cli import main as cli
from coverageability.labeling import coverage_report_text
from coverageability.metrics.extract import extract_metrics, metrics_table_text, read_metrics_table
from coverageability.javamodel import parse_project
from coverageability.synthetic.coverage import synthesize_coverage
from coverageability.synthetic.javacorpus import CorpusGenerator, CorpusSpec

# a quick grid; the named grids ("reduced", "full") take much longer
GRID = """\
[grid.sgdr]
max_iter = 20

[grid.mlpr]
hidden = (16,)
epochs = 30

[grid.rfr]
n_estimators = 20
max_depth = 6

[grid.hgbr]
max_iter = 50
min_samples_leaf = 3
"""

NEW_CODE = {
    "Point.java": """\
package app;

public class Point {
    private int x;
    public int getX() { return x; }
    public void setX(int x) { this.x = x; }
}
""",
    "Parser.java": """\
package app;

public class Parser {
    private int pos;
    private String text;

    public Parser(String text) { this.text = text; }

    public int number() {
        int value = 0;
        while (pos < text.length() && Character.isDigit(text.charAt(pos))) {
            value = value * 10 + (text.charAt(pos) - '0');
            pos++;
        }
        if (pos < text.length() && text.charAt(pos) == '-') {
            throw new IllegalStateException("unexpected sign");
        }
        return value;
    }

    public void skipSpaces() {
        while (pos < text.length() && text.charAt(pos) == ' ') {
            pos++;
        }
    }
}
""",
}


def run(*argv) -> int:
    print("$ coverageability", " ".join(str(a) for a in argv))
    code = cli([str(a) for a in argv])
    print(f"  -> exit {code}")
    return code


def main(keep: bool) -> None:
    root = Path(tempfile.mkdtemp(prefix="coverageability-demo-"))

    # a synthetic project and a coverage report that depends on its metrics
    CorpusGenerator(CorpusSpec(seed=7, classes_per_package=60)).write(root / "project")
    table = read_metrics_table(metrics_table_text(extract_metrics(parse_project(root / "project"))))
    (root / "coverage.csv").write_text(coverage_report_text(synthesize_coverage(table, seed=7)), encoding="utf-8")
    (root / "grid.ini").write_text(GRID, encoding="utf-8")
    (root / "pipeline.ini").write_text(
        "[pipeline]\n"
        "source = project\n"
        "coverage = coverage.csv\n"
        f"output = {root / 'out'}\n"
        "seed = 5\n"
        "variant = DS5\n"
                "learner = hgbr\n"
        "grid = grid.ini\n"
        "repeats = 5\n"
        "top = 5\n",
        encoding="utf-8",
    )
    run("pipeline", root / "pipeline.ini")
    print((root / "out" / "evaluation.json").read_text())
    print((root / "out" / "impact.csv").read_text())

    # new code arrives; score it and gate the build
    (root / "incoming" / "app").mkdir(parents=True)
    for name, text in NEW_CODE.items():
        (root / "incoming" / "app" / name).write_text(text, encoding="utf-8")
    run("predict", "--source", root / "incoming", "--model", root / "out" / "model.json", "--out", root / "outcomes.csv")
    print((root / "outcomes.csv").read_text())
    run("gate", "--outcomes", root / "outcomes.csv", "--threshold", 0.05)
    run("gate", "--outcomes", root / "outcomes.csv", "--threshold", 0.9)

    if keep:
        print(f"artifacts kept in {root}")
    else:
        shutil.rmtree(root)


if __name__ == "__main__":
    main("--keep" in sys.argv[1:])
