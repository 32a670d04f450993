"""Walk one small Java class through the code model and the metric catalog.

Prints each method's complexity figures, then a handful of the class-level
features the regressors see.

Usage:
    python3 demos/metrics_tour.py
"""

import tempfile
from pathlib import Path

from coverageability.javamodel import build_cfg, parse_project
from coverageability.metrics import compute_cc, full_schema
from coverageability.metrics.extract import MetricsExtractor
from coverageability.metrics.method import nesting, npath

SOURCE = """\
package demo;

public class Account {
    private long balance;
    private String owner;

    public long getBalance() { return balance; }

    public void setOwner(String owner) { this.owner = owner; }

    public boolean withdraw(long amount, boolean overdraft) {
        if (amount <= 0 || (balance < amount && !overdraft)) {
            return false;
        }
        for (int i = 0; i < 3; i++) {
            if (audit(i)) {
                break;
            }
        }
        balance -= amount;
        return true;
    }

    private boolean audit(int round) {
        switch (round) {
            case 0: return owner != null;
            case 1: return balance > 0;
            default: return round % 2 == 0 ? true : false;
        }
    }
}
"""


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        (Path(tmp) / "demo").mkdir()
        (Path(tmp) / "demo" / "Account.java").write_text(SOURCE, encoding="utf-8")
        project = parse_project(tmp)
        cls = project.cls("demo.Account")

        print(f"{'method':<12} {'kind':<9} {'CC':>3} {'strict':>6} {'mod':>4} {'ess':>4} {'npath':>6} {'nest':>5}")
        for m in cls.callables:
            cfg = build_cfg(m.body)
            kind = "accessor" if m.is_accessor else "mutator" if m.is_mutator else "-"
            print(
                f"{m.name:<12} {kind:<9} {compute_cc(cfg, 'CC'):>3} {compute_cc(cfg, 'CC-strict'):>6} "
                f"{compute_cc(cfg, 'CC-modified'):>4} {compute_cc(cfg, 'CC-essential'):>4} "
                f"{npath(m.body):>6} {nesting(m.body):>5}"
            )

        # the same numbers, lifted to the class through the sub-metric web
        row = MetricsExtractor(project).vector(cls).as_dict()
        print()
        for name in ("CSCC", "CSCC_AVG", "CSCC_NAMM", "CSCCS", "CSPATH_MAX", "CSNOMNAMM", "CSNOAMM", "LOCM", "NOTK"):
            print(f"{name:<12} {row[name]:g}")
        print(f"\n{len(row)} features in schema {full_schema().version}")


if __name__ == "__main__":
    main()
