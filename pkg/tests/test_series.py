"""Series algebra: arithmetic oracles and structural properties."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from h22 import (
    SeriesOpConfig,
    TruncatedSeries,
    cauchy_product,
    compose,
    differentiate,
    divide,
    evaluate,
    linear_combine,
    power,
    sup_norm_estimate,
)

from conftest import poly, random_poly


def assert_coeffs(f: TruncatedSeries, expected, tol=0.0):
    expected = np.asarray(expected, dtype=complex)
    got = f.coeffs
    assert got.size == expected.size, f"order mismatch: {got.size - 1} vs {expected.size - 1}"
    assert np.max(np.abs(got - expected)) <= tol


class TestTruncatedSeries:
    def test_validation(self):
        with pytest.raises(ValueError):
            TruncatedSeries(np.array([], dtype=complex))
        with pytest.raises(ValueError):
            TruncatedSeries(np.array([np.nan]))
        with pytest.raises(ValueError):
            TruncatedSeries(np.array([np.inf + 0j]))
        with pytest.raises(ValueError):
            TruncatedSeries(np.array([1.0]), tail=-1.0)

    def test_immutable_coefficients(self):
        f = poly(1, 2)
        with pytest.raises(ValueError):
            f.coeffs[0] = 5.0

    def test_coefficient_lookup_beyond_order_is_zero(self):
        f = poly(1, 2)
        assert f.coefficient(1) == 2
        assert f.coefficient(7) == 0

    def test_truncated_moves_mass_to_tail(self):
        f = poly(1, 2, -3j)
        g = f.truncated(1)
        assert g.order == 1
        assert g.tail == pytest.approx(3.0)


class TestEvaluate:
    def test_examples(self):
        assert evaluate(poly(1, 1), 0.5) == pytest.approx(1.5)
        assert evaluate(poly(0, 0, 1), 1j) == pytest.approx(-1)

    def test_vectorized(self):
        zs = np.array([0.0, 0.5, 1j])
        vals = evaluate(poly(1, 1), zs)
        assert np.allclose(vals, [1.0, 1.5, 1 + 1j])


class TestLinearCombine:
    def test_examples(self):
        assert_coeffs(linear_combine(1, poly(0, 1), 1, poly(1)), [1, 1])
        assert_coeffs(linear_combine(2, poly(0, 0, 1), -1, poly(0, 0, 1)), [0, 0, 1])
        assert_coeffs(linear_combine(0, poly(1, 2), 0, poly(3)), [0, 0])

    def test_tail_combines(self):
        f = TruncatedSeries(np.array([1.0]), tail=0.25)
        g = TruncatedSeries(np.array([1.0]), tail=0.5)
        h = linear_combine(2.0, f, 1.0, g)
        assert h.tail == pytest.approx(1.0)


class TestCauchyProduct:
    def test_examples(self):
        assert_coeffs(cauchy_product(poly(1, 1), poly(1, -1), 2), [1, 0, -1])
        assert_coeffs(cauchy_product(poly(0, 1), poly(0, 1), 4), [0, 0, 1, 0, 0])

    def test_against_binomial_expansion(self):
        # (1+z)^2 by repeated product vs binomial coefficients
        sq = cauchy_product(poly(1, 1), poly(1, 1))
        assert_coeffs(sq, [math.comb(2, k) for k in range(3)])
        quad = cauchy_product(sq, sq)
        assert_coeffs(quad, [math.comb(4, k) for k in range(5)])

    def test_truncation_records_dropped_mass(self):
        r = cauchy_product(poly(1, 1), poly(1, 1), 1)
        assert r.order == 1
        assert r.tail == pytest.approx(1.0)  # the dropped z^2 coefficient

    def test_commutative_and_associative(self, rng):
        for _ in range(25):
            f, g, h = (random_poly(rng) for _ in range(3))
            fg = cauchy_product(f, g)
            gf = cauchy_product(g, f)
            assert np.max(np.abs(fg.coeffs - gf.coeffs)) <= 1e-13
            left = cauchy_product(fg, h)
            right = cauchy_product(f, cauchy_product(g, h))
            scale = max(1.0, np.max(np.abs(left.coeffs)))
            assert np.max(np.abs(left.coeffs - right.coeffs)) <= 1e-13 * scale


class TestDifferentiate:
    def test_examples(self):
        assert_coeffs(differentiate(poly(0, 0, 0, 1), 1), [0, 0, 3])
        assert_coeffs(differentiate(poly(0, 0, 0, 1), 2), [0, 6])
        assert_coeffs(differentiate(poly(5), 1), [0])

    def test_rejects_bad_order_and_tails(self):
        with pytest.raises(ValueError):
            differentiate(poly(1), 3)
        with pytest.raises(ValueError):
            differentiate(TruncatedSeries(np.array([1.0]), tail=0.1))

    def test_leibniz_rule(self, rng):
        for _ in range(20):
            f, g = random_poly(rng, 16), random_poly(rng, 16)
            lhs = differentiate(cauchy_product(f, g))
            rhs = linear_combine(
                1, cauchy_product(differentiate(f), g),
                1, cauchy_product(f, differentiate(g)),
            )
            n = max(lhs.order, rhs.order) + 1
            a = np.zeros(n, dtype=complex)
            b = np.zeros(n, dtype=complex)
            a[: lhs.order + 1] = lhs.coeffs
            b[: rhs.order + 1] = rhs.coeffs
            assert np.max(np.abs(a - b)) <= 1e-12 * max(1.0, np.max(np.abs(a)))


class TestPower:
    def test_examples(self):
        assert_coeffs(power(poly(0, 0.5), 3, 8), [0, 0, 0, 0.125] + [0] * 5)
        assert_coeffs(power(poly(0.3, 0.7), 0, 4), [1])
        assert_coeffs(power(poly(0, 0.5, 0.3), 2, 4), [0, 0, 0.25, 0.3, 0.09], tol=1e-15)

    def test_square_and_multiply_matches_iteration(self):
        phi = poly(0.2, 0.3, -0.1j)
        direct = phi
        for _ in range(12):
            direct = cauchy_product(direct, phi, 24)
        fast = power(phi, 13, 24)
        assert np.max(np.abs(fast.coeffs - direct.coeffs)) <= 1e-13

    def test_rejects_negative_exponent(self):
        with pytest.raises(ValueError):
            power(poly(0, 1), -1)


class TestCompose:
    def test_polynomial_examples(self):
        a = 0.7j
        r = compose(poly(0, 0, 1), poly(0, a), 4)
        assert r.coefficient(2) == pytest.approx(a * a)
        assert_coeffs(compose(poly(1, 1), poly(0.3, 0.4), 2), [1.3, 0.4, 0])

    def test_kernel_composition_matches_direct_sum(self):
        # (sum kappa(n) conj(w)^n z^n) composed with a*z, evaluated at z,
        # equals the direct sum over kappa(n) (conj(w) a z)^n
        from h22 import kernel_series

        w, a, z = 0.4 + 0.2j, 0.5j, 0.3 - 0.6j
        k = kernel_series(w, order=200)
        composed = compose(k, poly(0, a), 200)
        direct = sum(
            (n + 1) / (n + 2) ** 5 * (np.conj(w) * a * z) ** n for n in range(201)
        )
        assert evaluate(composed, z) == pytest.approx(direct, abs=1e-14)

    def test_associativity_for_zero_fixing_symbols(self, rng):
        for _ in range(10):
            f = random_poly(rng, 6)
            phi = TruncatedSeries(np.concatenate(([0], rng.uniform(-0.5, 0.5, 3))))
            psi = TruncatedSeries(np.concatenate(([0], rng.uniform(-0.5, 0.5, 3))))
            left = compose(compose(f, phi, 18), psi, 18)
            right = compose(f, compose(phi, psi, 18), 18)
            scale = max(1.0, np.max(np.abs(left.coeffs)))
            assert np.max(np.abs(left.coeffs - right.coeffs)) <= 1e-10 * scale

    def test_tail_bound_rejection(self):
        f = TruncatedSeries(np.ones(4, dtype=complex), tail=0.5)
        wide = poly(0.9, 0.3)  # coefficient sum 1.2 >= 1: bound cannot be formed
        with pytest.raises(ValueError):
            compose(f, wide, 8)
        contracting = poly(0.1, 0.2)
        r = compose(f, contracting, 8, tail_tol=1.0)
        assert 0.0 < r.tail <= 0.5 * 0.3**4 + 1e-12

    def test_exactness_with_constant_term_symbol(self):
        # polynomial f: exact even though phi(0) != 0
        f = poly(2, -1, 3)
        phi = poly(0.4, 0.5)
        r = compose(f, phi, 2)
        z = 0.37 - 0.21j
        assert evaluate(r, z) == pytest.approx(evaluate(f, evaluate(phi, z)), abs=1e-14)


class TestDivide:
    def test_geometric_series(self):
        assert_coeffs(divide(poly(0, 1), poly(1, -1), 3), [0, 1, 1, 1])

    def test_rejects_zero_constant_term(self):
        with pytest.raises(ValueError):
            divide(poly(1), poly(0, 1), 4)

    def test_roundtrip_inverse_of_product(self, rng):
        for _ in range(20):
            h = random_poly(rng, 12)
            p_coeffs = np.concatenate(([1.0], rng.uniform(-0.5, 0.5, 6)))
            p = TruncatedSeries(p_coeffs)
            q = cauchy_product(h, p)
            back = divide(q, p, h.order)
            assert np.max(np.abs(back.coeffs - h.coeffs)) <= 1e-11


class TestSupNormEstimate:
    def test_monomials_and_binomial(self):
        for n in (1, 3, 10):
            est = sup_norm_estimate(TruncatedSeries.monomial(n))
            assert est.lower == pytest.approx(1.0, abs=1e-12)
        est = sup_norm_estimate(poly(1, 1))
        assert est.lower == pytest.approx(2.0, abs=1e-12)
        assert est.upper == pytest.approx(2.0)

    def test_kernel_coefficient_polynomial_attains_zeta_gap(self):
        import mpmath

        from h22 import H22

        f = TruncatedSeries(H22.kappa_array(1000).astype(complex))
        gap = float(mpmath.zeta(4) - mpmath.zeta(5))
        assert sup_norm_estimate(f).lower == pytest.approx(gap, abs=1e-6)

    def test_bracket_and_monotonicity_in_samples(self, rng):
        for _ in range(10):
            f = random_poly(rng, 20)
            prev = 0.0
            for m in (64, 128, 256, 512):
                est = sup_norm_estimate(f, SeriesOpConfig(circle_samples=m))
                assert est.lower <= est.upper + 1e-12
                assert est.lower >= prev - 1e-12
                prev = est.lower

    def test_radius_scaling(self):
        f = poly(0, 1)
        est = sup_norm_estimate(f, SeriesOpConfig(radius=0.5))
        assert est.lower == pytest.approx(0.5, abs=1e-12)

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SeriesOpConfig(circle_samples=8)
        with pytest.raises(ValueError):
            SeriesOpConfig(radius=0.0)
        with pytest.raises(ValueError):
            SeriesOpConfig(truncation_order=-1)


@settings(derandomize=True, max_examples=60)
@given(
    st.lists(st.floats(-1, 1), min_size=1, max_size=12),
    st.lists(st.floats(-1, 1), min_size=1, max_size=12),
)
def test_product_degree_and_symmetry_property(a, b):
    f = TruncatedSeries(np.array(a, dtype=complex))
    g = TruncatedSeries(np.array(b, dtype=complex))
    fg = cauchy_product(f, g)
    assert fg.order == f.order + g.order
    gf = cauchy_product(g, f)
    assert np.max(np.abs(fg.coeffs - gf.coeffs)) <= 1e-13
