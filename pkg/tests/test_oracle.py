import numpy as np
import pytest

from pqfs.bounds import fs_bound_starlike
from pqfs.classes import MaMindaTarget
from pqfs.oracle import (
    OracleConfig,
    brute_force_caratheodory_max,
    brute_force_caratheodory_piecewise,
    summarize,
    sweep,
    verify_fs,
    verify_refined,
)
from pqfs.pq_core import DomainError, PQParams

KOEBE = MaMindaTarget.koebe()
CLASSIC = PQParams.limit(1.0, 1.0)
PQ = PQParams(0.9, 0.6)

CFG = OracleConfig(grid_density=12, random_samples=3000)


class TestConfig:
    def test_defaults(self):
        cfg = OracleConfig()
        assert cfg.grid_density == 24 and cfg.include_extremals

    @pytest.mark.parametrize(
        "kwargs",
        [dict(grid_density=7), dict(tolerance=0.0), dict(tolerance=-1.0), dict(random_samples=-5)],
    )
    def test_validation(self, kwargs):
        with pytest.raises(DomainError):
            OracleConfig(**kwargs)


class TestCaratheodoryOracles:
    @pytest.mark.parametrize("mu, expected", [(0.0, 2.0), (1.0, 2.0), (2.0, 6.0)])
    def test_max_form(self, mu, expected):
        record = brute_force_caratheodory_max(mu, CFG)
        assert record.theoretical == expected
        assert record.empirical_max <= record.theoretical + 1e-9
        assert record.gap <= 1e-6
        assert record.attained

    def test_complex_mu_spot_check(self):
        record = brute_force_caratheodory_max(0.3 + 0.4j, CFG)
        assert record.theoretical == pytest.approx(2.0)
        assert record.attained

    def test_witness_reproduces_empirical_maximum(self):
        record = brute_force_caratheodory_max(2.0, CFG)
        w = record.witness
        c1, c2 = 2 * w.w1, 2 * w.w1**2 + 2 * w.w2
        assert abs(c2 - 2.0 * c1**2) == pytest.approx(record.empirical_max, abs=1e-12)

    @pytest.mark.parametrize("v, expected", [(0.0, 2.0), (-1.0, 6.0)])
    def test_piecewise(self, v, expected):
        record = brute_force_caratheodory_piecewise(v, CFG)
        assert record.theoretical == expected
        assert record.empirical_max <= expected + 1e-9
        assert record.gap <= 1e-6

    @pytest.mark.parametrize("v", [0.3, 0.4, 0.5, 0.7])
    def test_refined_forms_capped_at_two(self, v):
        record = brute_force_caratheodory_piecewise(v, CFG, refined=True)
        assert record.theoretical == 2.0
        assert record.empirical_max <= 2.0 + 1e-9
        assert record.gap <= 1e-6

    @pytest.mark.parametrize("v", [-0.1, 0.0, 1.0, 1.5])
    def test_refined_outside_open_interval_rejected(self, v):
        with pytest.raises(DomainError):
            brute_force_caratheodory_piecewise(v, CFG, refined=True)


class TestVerificationRecord:
    def test_fail_status_when_bound_exceeded(self):
        from pqfs.classes import SchwarzJet
        from pqfs.oracle import VerificationRecord

        record = VerificationRecord(
            mu=0.0,
            theoretical=1.0,
            empirical_max=1.0 + 1e-6,
            gap=-1e-6,
            attained=True,
            witness=SchwarzJet(1, 0),
            branch="max_form",
            tolerance=1e-9,
        )
        assert not record.passed
        assert record.status == "FAIL"


class TestVerifyFS:
    def test_starlike_classical(self):
        record = verify_fs("starlike", 0.0, KOEBE, CLASSIC, CFG)
        assert record.theoretical == pytest.approx(3.0, abs=1e-12)
        assert record.empirical_max == pytest.approx(3.0, abs=1e-6)
        assert record.status == "PASS"

    def test_starlike_deformed_attains_bound(self):
        record = verify_fs("starlike", 0.0, KOEBE, PQ, CFG)
        assert record.theoretical == pytest.approx(10 / 0.71, abs=1e-12)
        assert abs(record.gap) <= 1e-6

    def test_convex_classical(self):
        record = verify_fs("convex", 0.0, KOEBE, CLASSIC, CFG)
        assert record.theoretical == pytest.approx(1.0, abs=1e-12)
        assert record.empirical_max == pytest.approx(1.0, abs=1e-6)

    def test_soundness_across_mu(self):
        for mu in np.arange(-2.0, 3.01, 0.5):
            record = verify_fs("convex", mu, KOEBE, PQ, CFG)
            assert record.empirical_max <= record.theoretical + 1e-9
            assert record.gap <= 1e-6

    def test_matches_bounds_module(self):
        record = verify_fs("starlike", 0.4, KOEBE, PQ, CFG)
        assert record.theoretical == fs_bound_starlike(0.4, KOEBE, PQ).value


class TestVerifyRefined:
    def test_low_window_equality(self):
        record = verify_refined("starlike", 0.6, KOEBE, CLASSIC, CFG)
        assert record.theoretical == pytest.approx(1.0, abs=1e-12)
        assert record.empirical_max <= 1.0 + 1e-9
        assert record.gap <= 1e-6
        assert record.branch == "refined_low"

    def test_high_window_equality(self):
        record = verify_refined("starlike", 0.9, KOEBE, CLASSIC, CFG)
        assert record.branch == "refined_high"
        assert record.empirical_max <= record.theoretical + 1e-9
        assert record.gap <= 1e-6

    def test_outside_windows_rejected(self):
        with pytest.raises(DomainError, match="refined"):
            verify_refined("starlike", 0.2, KOEBE, CLASSIC, CFG)


class TestSweep:
    def test_classical_koebe_sweep(self):
        entries = sweep("starlike", (-2.0, 3.0, 0.05), KOEBE, CLASSIC, CFG)
        assert len(entries) == 101
        assert all(e.status == "PASS" for e in entries)
        mus = [e.mu for e in entries]
        assert mus == sorted(mus)

    def test_empty_range(self):
        assert sweep("starlike", (1.0, 1.0, 0.1), KOEBE, CLASSIC, CFG) == []

    def test_degenerate_parameters_recorded_per_mu(self):
        entries = sweep("starlike", (0.0, 1.0, 0.5), KOEBE, PQParams(0.5, 0.2), CFG)
        assert [e.status for e in entries] == ["SKIP(domain)"] * 3
        assert all("p + q > 1" in e.error for e in entries)

    def test_bad_step_rejected(self):
        with pytest.raises(DomainError):
            sweep("starlike", (0.0, 1.0, 0.0), KOEBE, CLASSIC, CFG)

    def test_summary_counts(self):
        entries = sweep("starlike", (0.0, 1.0, 0.5), KOEBE, CLASSIC, CFG)
        assert summarize(entries) == (3, 0, 0)

    def test_determinism_with_fixed_seed(self):
        a = sweep("convex", (0.0, 1.0, 0.25), KOEBE, PQ, CFG)
        b = sweep("convex", (0.0, 1.0, 0.25), KOEBE, PQ, CFG)
        assert a == b


class TestRefinementMonotonicity:
    # nested budgets only: linspace(-1, 1, 2n-1) contains linspace(-1, 1, n),
    # and the random rows are prefix-stable in the sample count
    def test_grid_refinement(self):
        empirical = []
        for g in (8, 15, 29):
            cfg = OracleConfig(grid_density=g, random_samples=500, include_extremals=False)
            empirical.append(verify_fs("starlike", 0.3, KOEBE, PQ, cfg).empirical_max)
        assert empirical[0] <= empirical[1] <= empirical[2]

    def test_random_refinement(self):
        empirical = []
        for n in (1000, 4000, 16000):
            cfg = OracleConfig(grid_density=8, random_samples=n, include_extremals=False)
            empirical.append(verify_fs("convex", 0.3, KOEBE, PQ, cfg).empirical_max)
        assert empirical[0] <= empirical[1] <= empirical[2]
