"""Bound operations: values against high-precision oracles, precondition
boundaries, degenerate-support behavior, best-bound canonicalization, and
threshold inversion."""

import math

import mpmath as mp
import pytest

from hypertail import (
    BoundMethod,
    DomainError,
    HypergeomParams,
    NEG_INF,
    NoApplicableMethodError,
    PreconditionError,
    TailDirection,
    TailQuery,
    Transform,
    best_bound,
    beta_swapped,
    beta_upper,
    chernoff_swapped,
    chernoff_upper,
    exact_upper_tail,
    invert_threshold,
    serfling_upper,
)
from oracles import binom_tail_fraction, hypergeom_upper_fraction, kl_bernoulli_mpmath

mp.mp.dps = 50


def chernoff_oracle(trials: int, x: float, y: float) -> float:
    return float(mp.e ** (-trials * kl_bernoulli_mpmath(x, y)))


class TestChernoffDirect:
    def test_collapses_to_power_at_full_draw(self):
        r = chernoff_upper(HypergeomParams(5, 2, 2), 2)
        assert math.isclose(r.linear_value, 0.16, rel_tol=1e-12)
        assert r.method is BoundMethod.CHERNOFF_DIRECT
        assert r.applicable and not r.degenerate_support

    def test_worked_value(self):
        r = chernoff_upper(HypergeomParams(10, 3, 6), 3)
        ref = chernoff_oracle(6, 0.5, 0.3)  # = (21/25)^3 = 0.592704
        assert math.isclose(r.linear_value, ref, rel_tol=1e-12)
        assert math.isclose(r.linear_value, 0.592704, rel_tol=1e-12)

    def test_large_instance(self):
        r = chernoff_upper(HypergeomParams(1000, 20, 100), 10)
        ref = chernoff_oracle(100, 0.1, 0.02)
        assert math.isclose(r.linear_value, ref, rel_tol=1e-12)
        assert math.isclose(r.linear_value, 2.18183e-4, rel_tol=1e-4)

    def test_precondition_at_mean(self):
        # mean = 1.8; d=1 is not above it, d=2 is
        with pytest.raises(PreconditionError):
            chernoff_upper(HypergeomParams(10, 3, 6), 1)
        assert chernoff_upper(HypergeomParams(10, 3, 6), 2).applicable
        # integer mean: d must exceed it strictly
        with pytest.raises(PreconditionError):
            chernoff_upper(HypergeomParams(10, 5, 6), 3)

    def test_zero_draws_rejected(self):
        with pytest.raises(PreconditionError):
            chernoff_upper(HypergeomParams(10, 3, 0), 1)

    def test_beyond_draws_is_degenerate_zero(self):
        r = chernoff_upper(HypergeomParams(10, 8, 4), 5)
        assert r.degenerate_support
        assert r.log_value == NEG_INF and r.linear_value == 0.0

    def test_zero_successes_gives_zero_bound(self):
        r = chernoff_upper(HypergeomParams(10, 0, 4), 1)
        assert r.linear_value == 0.0


class TestChernoffSwapped:
    def test_worked_value(self):
        r = chernoff_swapped(HypergeomParams(10, 3, 6), 3)
        assert math.isclose(r.linear_value, 0.216, rel_tol=1e-12)

    def test_degenerate_above_successes(self):
        r = chernoff_swapped(HypergeomParams(10, 2, 6), 3)
        assert r.degenerate_support and r.linear_value == 0.0

    def test_fixed_point_when_draws_equal_successes(self):
        p = HypergeomParams(5, 2, 2)
        assert chernoff_swapped(p, 2).log_value == chernoff_upper(p, 2).log_value

    def test_swapped_tighter_on_worked_instance(self):
        p = HypergeomParams(10, 3, 6)
        assert chernoff_swapped(p, 3).linear_value < chernoff_upper(p, 3).linear_value


class TestBetaDirect:
    def test_worked_value(self):
        r = beta_upper(HypergeomParams(10, 3, 6), 3)
        ref = float(binom_tail_fraction(6, 3, 0.3))
        assert math.isclose(r.linear_value, ref, rel_tol=1e-12)
        assert math.isclose(r.linear_value, 0.25569, rel_tol=1e-11)

    def test_power_form_at_full_draw(self):
        r = beta_upper(HypergeomParams(5, 2, 2), 2)
        assert math.isclose(r.linear_value, 0.16, rel_tol=1e-12)

    def test_dominated_by_chernoff(self):
        p = HypergeomParams(10, 3, 6)
        assert beta_upper(p, 3).linear_value <= chernoff_upper(p, 3).linear_value

    def test_requires_mean_plus_one(self):
        # mean = 1.8: d=2 > mean but below mean+1, so the beta bound must
        # refuse it (it is genuinely unsound there: exact tail 2/3 > 0.58)
        p = HypergeomParams(10, 3, 6)
        with pytest.raises(PreconditionError):
            beta_upper(p, 2)
        exact = math.exp(exact_upper_tail(p, 2))
        from hypertail import reg_inc_beta
        assert reg_inc_beta(0.3, 2.0, 5.0) < exact  # the would-be violation

    def test_threshold_above_draws_rejected(self):
        with pytest.raises(PreconditionError):
            beta_upper(HypergeomParams(10, 8, 4), 5)


class TestBetaSwapped:
    def test_worked_value(self):
        r = beta_swapped(HypergeomParams(10, 3, 6), 3)
        assert math.isclose(r.linear_value, 0.216, rel_tol=1e-12)

    def test_fixed_point(self):
        p = HypergeomParams(5, 2, 2)
        assert math.isclose(beta_swapped(p, 2).linear_value, 0.16, rel_tol=1e-12)

    def test_degenerate_above_successes(self):
        r = beta_swapped(HypergeomParams(10, 2, 6), 3)
        assert r.degenerate_support and r.linear_value == 0.0

    def test_swapped_tighter_on_worked_instance(self):
        p = HypergeomParams(10, 3, 6)
        assert beta_swapped(p, 3).linear_value < beta_upper(p, 3).linear_value


class TestSerfling:
    def test_worked_value(self):
        r = serfling_upper(HypergeomParams(10, 3, 6), 3)
        assert math.isclose(r.linear_value, math.exp(-0.96), rel_tol=1e-12)
        assert math.isclose(r.linear_value, 0.3829, rel_tol=1e-4)

    def test_single_draw(self):
        r = serfling_upper(HypergeomParams(10, 3, 1), 1)
        assert math.isclose(r.linear_value, math.exp(-2 * 0.7**2), rel_tol=1e-12)

    def test_small_deviation_limit(self):
        # delta -> 0+ drives the bound to 1 (small sampling fraction keeps
        # the finite-population factor near 1)
        r = serfling_upper(HypergeomParams(10**7, 10**6, 10**4), 1001)
        assert r.linear_value > 0.999

    def test_full_draw_allowed(self):
        # n = N keeps 1 - (n-1)/N = 1/N positive
        r = serfling_upper(HypergeomParams(10, 3, 10), 4)
        expected = math.exp(-2 * 10 * (0.4 - 0.3) ** 2 * 10)
        assert math.isclose(r.linear_value, expected, rel_tol=1e-12)

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            serfling_upper(HypergeomParams(10, 3, 6), 1)

    def test_sound_above_exact(self):
        p = HypergeomParams(10, 3, 6)
        assert serfling_upper(p, 3).linear_value >= math.exp(exact_upper_tail(p, 3))


class TestBestBound:
    def test_chernoff_pair_prefers_swapped(self):
        report = best_bound(TailQuery(HypergeomParams(10, 3, 6), 3),
                            [BoundMethod.CHERNOFF_DIRECT, BoundMethod.CHERNOFF_SWAPPED])
        assert math.isclose(report.best.linear_value, 0.216, rel_tol=1e-12)
        assert len(report.results) == 8  # 2 methods x 4 orbit representations

    def test_orbit_never_beats_exact_third(self):
        # every representation's upper tail is exactly 1/3, so every
        # applicable bound value must be >= 1/3; note d=4 sits between the
        # mean (3.2) and mean+1, where only the Chernoff/Serfling family
        # applies
        report = best_bound(TailQuery(HypergeomParams(10, 8, 4), 4))
        reps = {(r.representation.params.population,
                 r.representation.params.successes,
                 r.representation.params.draws,
                 r.representation.threshold)
                for r in report.results}
        assert (10, 2, 6, 2) in reps
        for r in report.results:
            if r.applicable:
                assert r.linear_value >= 1 / 3 - 1e-12
        assert math.isclose(math.exp(report.exact), 1 / 3, rel_tol=1e-12)

    def test_degenerate_coincidence(self):
        report = best_bound(TailQuery(HypergeomParams(5, 2, 2), 2))
        assert math.isclose(report.best.linear_value, 0.16, rel_tol=1e-12)
        assert math.isclose(math.exp(report.exact), 0.1, rel_tol=1e-12)

    def test_full_default_report_worked_instance(self):
        report = best_bound(TailQuery(HypergeomParams(10, 3, 6), 3))
        identity = {r.method: r for r in report.results
                    if r.representation.transform_chain == (Transform.IDENTITY,)}
        assert math.isclose(identity[BoundMethod.CHERNOFF_DIRECT].linear_value,
                            0.592704, rel_tol=1e-12)
        assert math.isclose(identity[BoundMethod.BETA_DIRECT].linear_value,
                            0.25569, rel_tol=1e-11)
        assert math.isclose(report.best.linear_value, 0.216, rel_tol=1e-12)
        assert report.best.log_value == min(r.log_value for r in report.results
                                            if r.applicable)

    def test_exact_dominated_by_best(self):
        for (N, K, n, d) in [(10, 3, 6, 3), (30, 11, 17, 9), (25, 20, 9, 9)]:
            report = best_bound(TailQuery(HypergeomParams(N, K, n), d))
            assert report.exact <= report.best.log_value + 1e-12

    def test_lower_direction_reflects(self):
        # Pr[X <= 1] for Hypergeometric(10, 3, 6) equals 1/3
        q = TailQuery(HypergeomParams(10, 3, 6), 1, TailDirection.LOWER)
        report = best_bound(q)
        assert report.query is q
        assert math.isclose(math.exp(report.exact), 1 / 3, rel_tol=1e-12)
        assert report.best.linear_value >= 1 / 3 - 1e-12
        # the evaluated representations are those of the reflected query
        rep = report.results[0].representation
        assert rep.params.successes in (7, 6, 3, 4)

    def test_inapplicable_results_have_absent_values(self):
        report = best_bound(TailQuery(HypergeomParams(10, 3, 6), 2))
        betas = [r for r in report.results if r.method is BoundMethod.BETA_DIRECT]
        assert betas and all(not r.applicable for r in betas)
        for r in betas:
            assert r.log_value is None and r.linear_value is None

    def test_no_applicable_method(self):
        with pytest.raises(NoApplicableMethodError):
            best_bound(TailQuery(HypergeomParams(10, 3, 6), 2),
                       [BoundMethod.BETA_DIRECT])

    def test_exact_budget(self):
        report = best_bound(TailQuery(HypergeomParams(10, 3, 6), 3), exact_budget=0)
        assert report.exact is None


class TestInvertThreshold:
    def test_epsilon_one_returns_first_candidate(self):
        assert invert_threshold(HypergeomParams(5, 2, 2), 1.0) == 1

    def test_spec_examples(self):
        assert invert_threshold(HypergeomParams(5, 2, 2), 0.15) == 3
        assert invert_threshold(HypergeomParams(10, 3, 6), 0.22) == 3

    def test_tiny_epsilon_runs_off_support(self):
        p = HypergeomParams(10, 3, 6)
        # best bound at the support max d=3 is 0.216 > 1e-9
        assert invert_threshold(p, 1e-9) == 4

    def test_degenerate_params(self):
        assert invert_threshold(HypergeomParams(10, 0, 6), 0.5) == 1
        assert invert_threshold(HypergeomParams(10, 3, 0), 0.5) == 1

    @pytest.mark.parametrize("eps", [0.0, -0.5, 1.5, float("nan")])
    def test_domain_errors(self, eps):
        with pytest.raises(DomainError):
            invert_threshold(HypergeomParams(10, 3, 6), eps)

    def test_matches_linear_scan(self):
        # independent oracle: scan every candidate d directly
        epsilons = (0.9, 0.5, 0.2, 0.05, 1e-3, 1e-6)
        cases = [(12, 5, 7), (25, 10, 20), (25, 20, 10), (18, 9, 9),
                 (30, 1, 29), (30, 29, 1), (40, 13, 31)]
        for (N, K, n) in cases:
            params = HypergeomParams(N, K, n)
            for eps in epsilons:
                lo = params.mean_floor + 1
                hi = params.support_max
                expected = hi + 1
                for d in range(lo, hi + 1):
                    try:
                        rep = best_bound(TailQuery(params, d), compute_exact=False)
                    except NoApplicableMethodError:
                        continue
                    if rep.best.linear_value <= eps:
                        expected = d
                        break
                assert invert_threshold(params, eps) == expected, (N, K, n, eps)


class TestSoundnessSpotChecks:
    def test_all_bounds_dominate_exact(self):
        # a handful of corners ahead of the exhaustive acceptance run
        cases = [(10, 3, 6), (10, 6, 3), (12, 12, 5), (12, 5, 12), (9, 9, 9),
                 (17, 1, 16), (17, 16, 1), (20, 10, 10)]
        fns = (chernoff_upper, chernoff_swapped, beta_upper, beta_swapped,
               serfling_upper)
        for (N, K, n) in cases:
            params = HypergeomParams(N, K, n)
            for d in range(params.mean_floor + 1, params.support_max + 2):
                exact = float(hypergeom_upper_fraction(N, K, n, d))
                for fn in fns:
                    try:
                        r = fn(params, d)
                    except PreconditionError:
                        continue
                    assert r.linear_value + 1e-12 >= exact, (N, K, n, d, fn.__name__)
