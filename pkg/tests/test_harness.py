"""Zeta constants, tail bounds, theorem checks, suite determinism."""

import math

import mpmath
import numpy as np
import pytest
import scipy.special

from h22 import (
    TruncatedSeries,
    check_hs,
    check_inclusion_example,
    check_multiplier_bounds,
    check_product_inequality,
    check_supnorm_bound,
    compute_constants,
    run_suite,
    tail_bound,
    zeta,
)
from h22.reporting import reports_json

from conftest import poly, random_poly


class TestZeta:
    def test_against_mpmath(self):
        for s in (2, 3, 4, 5, 6):
            assert zeta(s) == pytest.approx(float(mpmath.zeta(s)), abs=1e-12)

    def test_known_closed_form(self):
        assert zeta(2) == pytest.approx(math.pi**2 / 6, abs=1e-12)

    def test_loose_tolerance_still_bounded(self):
        assert zeta(4, tol=1e-6) == pytest.approx(float(mpmath.zeta(4)), abs=1e-6)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            zeta(1)
        with pytest.raises(ValueError):
            zeta(4, tol=0.0)


class TestConstants:
    def test_cross_check(self):
        c = compute_constants()
        assert c.sharp**2 + c.zeta5 == pytest.approx(c.zeta4, abs=1e-12)
        assert c.product_const == pytest.approx(2 * math.sqrt(2) * c.sharp, abs=1e-15)
        assert c.gap == pytest.approx(0.04539, abs=1e-5)

    def test_five_decimal_agreement(self):
        c = compute_constants()
        assert round(c.zeta4, 5) == 1.08232
        assert round(c.zeta5, 5) == 1.03693
        # gap truncates to 0.04539 (it rounds to 0.04540: the quoted value
        # is a truncation, recorded here as computed)
        assert math.floor(c.gap * 1e5) / 1e5 == 0.04539


class TestTailBound:
    def test_two_routes_agree(self):
        for n in (0, 1, 10, 50, 200):
            tb = tail_bound(n)
            assert tb.direct == pytest.approx(tb.polygamma_form, abs=1e-12)

    def test_against_scipy_polygamma(self):
        # third, independent route: (1/6) psi'''(N+3) - (1/24) |psi''''(N+3)|
        for n in (0, 5, 50):
            tb = tail_bound(n)
            ref = scipy.special.polygamma(3, n + 3) / 6.0 + scipy.special.polygamma(4, n + 3) / 24.0
            assert tb.polygamma_form == pytest.approx(float(ref), abs=1e-12)

    def test_tail_at_zero(self):
        c = compute_constants()
        assert tail_bound(0).direct == pytest.approx(c.gap - 1 / 32, abs=1e-12)

    def test_monotone_decrease(self):
        assert tail_bound(100).direct < tail_bound(10).direct < tail_bound(1).direct
        assert tail_bound(5000).direct < 1e-9

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            tail_bound(-1)


class TestSupnormCheck:
    def test_constant(self):
        r = check_supnorm_bound(poly(1))
        assert r.verdict == "pass"
        assert r.lhs == pytest.approx(1.0, abs=1e-12)
        assert r.rhs == pytest.approx(0.21306 * math.sqrt(32), abs=1e-4)

    def test_random_sweep(self, rng):
        for _ in range(50):
            assert check_supnorm_bound(random_poly(rng)).verdict == "pass"

    def test_rejects_tailed_series(self):
        with pytest.raises(ValueError):
            check_supnorm_bound(TruncatedSeries(np.array([1.0]), tail=0.1))


class TestProductCheck:
    def test_hand_examples(self):
        r = check_product_inequality(poly(1), poly(1))
        assert r.verdict == "pass"
        assert r.lhs == pytest.approx(math.sqrt(32), abs=1e-12)
        r = check_product_inequality(poly(0, 1), poly(0, 1))
        assert r.lhs == pytest.approx(math.sqrt(1024 / 3), abs=1e-12)
        assert r.rhs == pytest.approx(compute_constants().product_const * 121.5, abs=1e-9)

    def test_random_sweep(self, rng):
        for _ in range(50):
            f, g = random_poly(rng, 24), random_poly(rng, 24)
            assert check_product_inequality(f, g).verdict == "pass"


class TestMultiplierCheck:
    def test_shift_symbol(self):
        primary, literal = check_multiplier_bounds(poly(0, 1), 256)
        assert primary.verdict == "pass"
        assert primary.inputs["sigma"] == pytest.approx(1.94856, abs=1e-4)
        assert literal.verdict == "finding"
        assert literal.lhs == pytest.approx(math.sqrt(121.5), abs=1e-9)

    def test_constant_symbol(self):
        primary, literal = check_multiplier_bounds(poly(1), 64)
        assert primary.verdict == "pass"
        assert primary.lhs == pytest.approx(1.0, abs=1e-9)   # max(sup, |f|/|1|) = 1
        assert literal.verdict == "finding"                  # sqrt(32) > sigma = 1


class TestHsCheck:
    def test_half_z(self):
        r = check_hs(poly(0, 0.5), 64)
        assert r.verdict == "pass"
        assert r.lhs == pytest.approx(4 / 3, abs=1e-12)
        assert r.rhs == pytest.approx(82.0, abs=1e-9)

    def test_quadratic(self):
        r = check_hs(poly(0, 0.5, 0.3), 96)
        assert r.verdict == "pass"

    def test_rejects_boundary(self):
        with pytest.raises(ValueError):
            check_hs(poly(0, 1), 32)


class TestInclusionExample:
    def test_large_order(self):
        r = check_inclusion_example(1000)
        assert r.verdict == "pass"
        assert r.inputs["h22_partial_exact"] == 1001

    def test_small_order(self):
        r = check_inclusion_example(10)
        assert r.inputs["h22_partial_exact"] == 11

    def test_rejects_tiny_order(self):
        with pytest.raises(ValueError):
            check_inclusion_example(5)


class TestSuites:
    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError):
            run_suite("bogus")

    def test_basis_suite_passes(self):
        reports = run_suite("basis", 7)
        assert all(r.verdict == "pass" for r in reports)

    def test_thm42_contains_finding(self):
        reports = run_suite("thm42", 7)
        verdicts = {r.check_id: r.verdict for r in reports}
        assert verdicts["thm42/converse_display"] == "finding"
        assert verdicts["thm42/affine"] == "pass"
        assert verdicts["thm42/nonaffine"] == "pass"

    def test_all_suite_contract(self):
        reports = run_suite("all", 7)
        assert len(reports) >= 20
        assert not any(r.verdict == "fail" for r in reports)
        assert any(r.verdict == "finding" for r in reports)
        ids = [r.check_id for r in reports]
        assert ids == sorted(ids)

    def test_determinism_across_runs(self):
        a = reports_json(run_suite("thm34", 11))
        b = reports_json(run_suite("thm34", 11))
        assert a == b

    def test_seed_changes_randomized_reports(self):
        a = [r for r in run_suite("thm31", 1) if r.check_id == "thm31/random_sweep"][0]
        b = [r for r in run_suite("thm31", 2) if r.check_id == "thm31/random_sweep"][0]
        assert a.lhs != b.lhs
