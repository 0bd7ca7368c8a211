import math
import random

import pytest

from zetasym import bounds, specfun, verify
from zetasym.config import EvalConfig
from zetasym.errors import BracketError, DomainError

# pinned from a one-off arbitrary-precision zeta evaluation
EQ2_RATIO_GOLDEN = -8.0759523056236264e-08
TAU_MARGIN_AT_6_4_5 = 0.13446681035531096


class TestGrid:
    def test_standard_grid_cardinality(self):
        pts = verify.grid_points(0.51, 2.0, 0.01)
        assert len(pts) == 150
        assert pts[0] == 0.51
        assert pts[-1] == 2.0

    def test_single_point(self):
        assert verify.grid_points(1.5, 1.5, 0.1) == [1.5]

    def test_clamps_final_point(self):
        pts = verify.grid_points(0.0, 1.05, 0.5)
        assert pts == [0.0, 0.5, 1.0, 1.05]

    def test_bad_step(self):
        with pytest.raises(DomainError):
            verify.grid_points(0, 1, 0)


class TestFindThreshold:
    def test_identity_root(self):
        res = verify.find_threshold(lambda x: x, -1, 1, 1e-9)
        assert res.lo < 0 < res.hi
        assert res.hi - res.lo <= 1e-9

    def test_g_bracket_containment(self):
        res = verify.find_threshold(bounds.G, 6, 7, 1e-6)
        assert 6.29072 <= res.lo < res.hi <= 6.29073
        assert res.f_lo < 0 < res.f_hi

    @pytest.mark.parametrize("tol", [4e-6, 1e-7])
    def test_g_bracket_containment_other_tols(self, tol):
        # the root sits ~3.8e-6 above 6.29072, so containment in the
        # five-decimal reference bracket needs tol <= ~4e-6
        res = verify.find_threshold(bounds.G, 6, 7, tol)
        assert 6.29072 <= res.lo < res.hi <= 6.29073

    def test_h_bracket_inside_printed_interval(self):
        res = verify.find_threshold(bounds.H, 3.5, 4.0, 1e-6)
        assert 3.8024 < res.lo < res.hi < 3.8085

    def test_bad_bracket(self):
        with pytest.raises(BracketError):
            verify.find_threshold(bounds.G, 7.0, 8.0, 1e-6)

    def test_bad_tol(self):
        with pytest.raises(DomainError):
            verify.find_threshold(bounds.G, 6, 7, -1.0)


class TestCounterexample:
    def test_value_below_published_bound(self):
        value = verify.verify_counterexample()
        assert value <= -8e-8
        assert value == pytest.approx(EQ2_RATIO_GOLDEN, abs=1e-13)

    def test_stability_under_tighter_precision(self):
        v12 = verify.verify_counterexample(EvalConfig(target_abs_err=1e-12))
        v13 = verify.verify_counterexample(EvalConfig(target_abs_err=1e-13))
        assert abs(v12 - v13) < 1e-10

    def test_h_restatement(self):
        assert specfun.h_value(complex(0.52, 6.2898)) < 0

    def test_no_violation_above_threshold(self):
        assert verify.verify_counterexample(t=7.0) > 0

    def test_precision_guard(self):
        with pytest.raises(DomainError):
            verify.verify_counterexample(EvalConfig(target_abs_err=1e-11))


class TestCheckChain:
    def test_ordering_at_interior_point(self):
        rep = verify.check_chain(1.0, 7.0)
        w = rep.sigma - 0.5
        assert rep.h_exact > 0
        assert w * rep.rhs_true_digamma > 0
        assert w * rep.g_of_t > 0
        assert rep.ordered()

    def test_ordering_near_threshold(self):
        assert verify.check_chain(0.51, 6.3).ordered()

    def test_below_threshold_consistency(self):
        rep = verify.check_chain(0.52, 6.2898)
        assert (rep.sigma - 0.5) * rep.g_of_t < 0
        assert rep.h_exact < 0

    def test_random_sample_ordering(self):
        rng = random.Random(20260826)
        for _ in range(300):
            sigma = rng.uniform(0.5 + 1e-6, 3.0)
            t = rng.uniform(6.29073, 50.0)
            assert verify.check_chain(sigma, t).ordered(), (sigma, t)

    def test_domain(self):
        with pytest.raises(DomainError):
            verify.check_chain(0.5, 7.0)


class TestMonotonicityProbe:
    def test_g_increasing(self):
        ok, where = verify.monotonicity_probe(bounds.G, 6.2, 50.0, 0.01)
        assert ok and where is None

    def test_h_increasing(self):
        ok, where = verify.monotonicity_probe(bounds.H, 3.8, 50.0, 0.01)
        assert ok and where is None

    def test_decreasing_detected(self):
        ok, where = verify.monotonicity_probe(lambda t: -t, 0.0, 1.0, 0.25)
        assert not ok
        assert where == 0.25


class TestZetaScan:
    def test_single_point_margin_is_h(self):
        rep = verify.scan_zeta_inequality((1.5, 1.5, 1.0), (10.0, 10.0, 1.0))
        assert rep.points_checked == 1
        assert rep.min_margin == pytest.approx(
            specfun.h_value(complex(1.5, 10.0)), abs=0)
        assert not rep.violations

    def test_small_grid_clean(self):
        rep = verify.scan_zeta_inequality((0.51, 0.9, 0.1), (6.29073, 9.0, 0.5))
        assert rep.points_checked == 5 * 7
        assert not rep.violations
        assert rep.min_margin > 0
        assert len(rep.points) == rep.points_checked

    def test_demonstration_grid_finds_counterexample(self):
        rep = verify.scan_zeta_inequality((0.52, 0.52, 1.0), (6.2898, 6.2898, 1.0),
                                          allow_outside=True)
        assert len(rep.violations) == 1
        sigma, t, margin = rep.violations[0]
        assert (sigma, t) == (0.52, 6.2898)
        assert margin < 0

    def test_region_guard(self):
        with pytest.raises(DomainError):
            verify.scan_zeta_inequality((0.4, 1.0, 0.1), (7.0, 8.0, 0.5))
        with pytest.raises(DomainError):
            verify.scan_zeta_inequality((0.6, 1.0, 0.1), (5.0, 8.0, 0.5))

    def test_parallel_matches_serial(self):
        serial = verify.scan_zeta_inequality((0.51, 0.9, 0.1), (6.3, 8.0, 0.5))
        parallel = verify.scan_zeta_inequality((0.51, 0.9, 0.1), (6.3, 8.0, 0.5),
                                               workers=2)
        assert serial.points == parallel.points
        assert serial.min_margin == parallel.min_margin


class TestTauScan:
    def test_single_point_golden(self, table_small):
        rep = verify.scan_tau_inequality((6.4, 6.4, 1.0), (5.0, 5.0, 1.0),
                                         table_small)
        assert rep.points_checked == 1
        assert rep.min_margin == pytest.approx(TAU_MARGIN_AT_6_4_5, abs=1e-9)

    def test_small_grid_clean(self, table_small):
        rep = verify.scan_tau_inequality((6.05, 6.45, 0.1), (3.8085, 8.0, 0.5),
                                         table_small)
        assert not rep.violations
        assert rep.min_margin > 0

    def test_region_guard(self, table_small):
        with pytest.raises(DomainError):
            verify.scan_tau_inequality((5.9, 6.4, 0.1), (4.0, 5.0, 0.5),
                                       table_small)
        with pytest.raises(DomainError):
            verify.scan_tau_inequality((6.05, 6.45, 0.1), (3.0, 5.0, 0.5),
                                       table_small)
