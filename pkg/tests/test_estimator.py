import numpy as np
import pytest

from mghdist import BoundsReport, baseline_lower, estimate_mgh, validate
from oracles import bfs_distances, exact_mgh, random_connected_edges


class TestBaseline:
    def test_examples(self, k3, p3, point):
        assert baseline_lower(p3, k3) == 0.5
        assert baseline_lower(k3, k3) == 0.0
        assert baseline_lower(p3, point) == 1.0

    def test_symmetric(self, k3, p3):
        assert baseline_lower(k3, p3) == baseline_lower(p3, k3)


class TestBoundsReport:
    @staticmethod
    def build(lower, upper, baseline):
        if upper > 0:
            eta = (upper - lower) / (lower + upper)
            ups = (lower - baseline) / (lower + upper)
        else:
            eta = ups = 0.0
        return BoundsReport(
            lower=lower,
            upper=upper,
            estimate=(lower + upper) / 2.0,
            relative_error=eta,
            utility=ups,
            baseline=baseline,
            exact=lower == upper,
            elapsed_lower=0.0,
            elapsed_upper=0.0,
        )

    def test_metric_formulas(self):
        report = self.build(lower=1.0, upper=2.0, baseline=0.5)
        assert report.relative_error == pytest.approx(1 / 3)
        assert report.utility == pytest.approx(0.5 / 3)
        assert not report.exact

    def test_degenerate_pair_zeroes_metrics(self):
        report = self.build(lower=0.0, upper=0.0, baseline=0.0)
        assert report.relative_error == 0.0 and report.utility == 0.0
        assert report.exact

    def test_rejects_out_of_order_bounds(self):
        with pytest.raises(ValueError, match="out of order"):
            self.build(lower=2.0, upper=1.0, baseline=0.0)
        with pytest.raises(ValueError, match="out of order"):
            self.build(lower=0.5, upper=1.0, baseline=0.7)

    def test_rejects_wrong_midpoint(self):
        with pytest.raises(ValueError, match="midpoint"):
            BoundsReport(
                lower=1.0, upper=2.0, estimate=2.0, relative_error=1 / 3,
                utility=0.0, baseline=1.0, exact=False,
                elapsed_lower=0.0, elapsed_upper=0.0,
            )

    def test_rejects_wrong_exact_flag(self):
        with pytest.raises(ValueError, match="exact"):
            BoundsReport(
                lower=1.0, upper=1.0, estimate=1.0, relative_error=0.0,
                utility=0.0, baseline=1.0, exact=False,
                elapsed_lower=0.0, elapsed_upper=0.0,
            )

    def test_to_dict_round_trip(self):
        report = self.build(lower=1.0, upper=2.0, baseline=0.5)
        data = report.to_dict()
        assert data["estimate"] == 1.5
        assert BoundsReport(**data) == report


class TestEstimateMgh:
    def test_triangle_vs_path(self, k3, p3):
        report = estimate_mgh(k3, p3, 7)
        assert report.lower == report.upper == 0.5
        assert report.exact
        assert report.relative_error == 0.0
        assert report.utility == 0.0
        assert report.baseline == 0.5

    def test_identical_singletons(self, point):
        report = estimate_mgh(point, point, 1)
        assert report.upper == 0.0
        assert report.relative_error == 0.0 and report.utility == 0.0

    def test_invariants_on_random_pairs(self):
        rng = np.random.default_rng(23)
        for trial in range(40):
            n, e1 = random_connected_edges(rng, 2, 6)
            m, e2 = random_connected_edges(rng, 2, 6)
            dx = validate(bfs_distances(n, e1))
            dy = validate(bfs_distances(m, e2))
            report = estimate_mgh(dx, dy, trial)
            truth = exact_mgh(dx.d, dy.d)
            assert report.baseline <= report.lower <= truth + 1e-12
            assert truth - 1e-12 <= report.upper
            assert report.estimate == (report.lower + report.upper) / 2
            assert report.exact == (report.lower == report.upper)
            if report.upper > 0:
                assert (report.relative_error == 0.0) == report.exact
            assert report.elapsed_lower >= 0 and report.elapsed_upper >= 0

    def test_lower_is_clamped_to_baseline(self, p3, point):
        report = estimate_mgh(p3, point, 2)
        assert report.lower >= report.baseline == 1.0

    def test_sample_budget_override_threads_through(self, k3, p3):
        report = estimate_mgh(k3, p3, 3, samples_x=1, samples_y=1)
        assert report.upper >= 0.5

    def test_binary_search_mode_never_exceeds_scan(self):
        rng = np.random.default_rng(24)
        for trial in range(10):
            n, e1 = random_connected_edges(rng, 3, 7)
            m, e2 = random_connected_edges(rng, 3, 7)
            dx = validate(bfs_distances(n, e1))
            dy = validate(bfs_distances(m, e2))
            scan = estimate_mgh(dx, dy, trial)
            fast = estimate_mgh(dx, dy, trial, binary_search_lb=True)
            assert fast.lower <= scan.lower
