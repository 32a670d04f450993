"""Per-class decisions, the CI gate and the distribution report."""

import numpy as np
import pytest

from coverageability.inference import (
    PredictionError,
    PredictionOutcome,
    decide,
    gate_check,
    outcomes_text,
    predict_class_coverageability,
    read_outcomes,
)
from coverageability.reporting import bin_index, log_count, render_distribution_report

from conftest import RULES, constant_model


class TestDecide:
    def test_simple_class_short_circuits(self, rules_vectors):
        out = decide("shop.Tiny", rules_vectors["shop.Tiny"].as_dict(), constant_model(1.2))
        assert (out.coverageability, out.source) == (1.0, "rule-simple")

    def test_data_class_short_circuits(self, rules_vectors):
        out = decide("shop.Bean", rules_vectors["shop.Bean"].as_dict(), constant_model(1.2))
        assert (out.coverageability, out.source) == (1.0, "rule-data")

    def test_model_path(self, rules_vectors):
        out = decide("shop.Cart", rules_vectors["shop.Cart"].as_dict(), constant_model(0.375))
        assert (out.coverageability, out.source) == (0.375, "model")

    @pytest.mark.parametrize("value", [1.2, -0.01])
    def test_out_of_range_is_an_error(self, rules_vectors, value):
        with pytest.raises(PredictionError, match="^Prediction Error"):
            decide("shop.Ledger", rules_vectors["shop.Ledger"].as_dict(), constant_model(value))

    def test_bounds_are_inclusive(self, rules_vectors):
        row = rules_vectors["shop.Cart"].as_dict()
        assert decide("shop.Cart", row, constant_model(0.0)).coverageability == 0.0
        assert decide("shop.Cart", row, constant_model(1.0)).coverageability == 1.0

    def test_from_source_tree(self):
        out = predict_class_coverageability(RULES, "shop.Ledger", constant_model(0.5))
        assert out == PredictionOutcome("shop.Ledger", 0.5, "model")
        with pytest.raises(KeyError):
            predict_class_coverageability(RULES, "shop.Missing", constant_model(0.5))


class TestGate:
    def outcomes(self):
        return [
            PredictionOutcome("a.A", 0.9, "model"),
            PredictionOutcome("a.B", 0.49, "model"),
            PredictionOutcome("a.C", 1.0, "rule-simple"),
        ]

    def test_fails_below_threshold(self):
        res = gate_check(self.outcomes(), 0.5)
        assert not res.passed and res.exit_status == 1
        assert [o.class_name for o in res.failing] == ["a.B"]

    def test_equal_to_threshold_passes(self):
        assert gate_check([PredictionOutcome("a.A", 0.5, "model")], 0.5).passed

    def test_only_trivial_classes_note(self):
        res = gate_check([PredictionOutcome("a.C", 1.0, "rule-data")], 0.5)
        assert res.passed and res.note

    def test_outcome_text_round_trip(self):
        outs = self.outcomes()
        assert read_outcomes(outcomes_text(outs)) == outs


class TestDistribution:
    def test_bin_edges(self):
        got = bin_index([0.0, 0.02, 0.021, 0.5, 0.98, 0.981, 1.0], 50)
        assert got.tolist() == [0, 0, 1, 24, 48, 49, 49]

    def test_counts_against_loop(self, np_rng):
        v = np_rng.uniform(size=500)
        rep = render_distribution_report(v, v ** 2, bins=20)
        want = np.zeros(20, dtype=int)
        for x in v:
            i = 0
            while not (x <= (i + 1) / 20) and i < 19:
                i += 1
            want[i] += 1
        np.testing.assert_array_equal(rep.cmu, want)
        assert rep.cmu.sum() == rep.mean.sum() == 500

    def test_log_counts(self):
        np.testing.assert_array_equal(log_count([0, 9, 99]), [0.0, 1.0, 2.0])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            bin_index([1.5], 10)

    def test_svg_is_deterministic(self, np_rng):
        v = np_rng.uniform(size=100)
        a = render_distribution_report(v, v).svg()
        assert a == render_distribution_report(v, v).svg()
        assert a.startswith("<svg") and a.rstrip().endswith("</svg>")
