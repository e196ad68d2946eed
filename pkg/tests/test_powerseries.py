from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mnconvex.errors import NonPositiveDenominator, NoConvergenceDetected, OutOfDomain, UndefinedSymbol
from mnconvex.powerseries import (
    PowerSeries,
    RatioSequence,
    Monotonicity,
    as_rational,
    cauchy_square,
    derivative,
    evaluate,
    evaluate_many,
    exponential,
    from_coefficients,
    geometric,
    monotone_verdict,
    pochhammer,
    ratio_sequence,
    sequence,
)
from mnconvex.specialfn import BesselParams, bessel_series, hyp2f1_series


class TestRationalInput:
    def test_short_decimals_become_fractions(self):
        assert as_rational(0.25) == Fraction(1, 4)
        assert as_rational(0.1) == Fraction(1, 10)
        assert as_rational(3) == Fraction(3)

    def test_long_floats_stay_floats(self):
        assert as_rational(math.pi) is None
        assert as_rational(float("nan")) is None


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(Fraction(7, 10), 0) == 1

    def test_factorial(self):
        assert pochhammer(1, 5) == 120

    def test_half(self):
        assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)

    def test_zero_zero_is_undefined(self):
        with pytest.raises(UndefinedSymbol):
            pochhammer(0, 0)

    def test_negative_length(self):
        with pytest.raises(ValueError):
            pochhammer(1, -1)

    @given(st.fractions(min_value=-5, max_value=5).filter(lambda a: a != 0), st.integers(0, 30))
    def test_recurrence_exact(self, a, n):
        assert pochhammer(a, n + 1) == pochhammer(a, n) * (a + n)


class TestEvaluation:
    def test_value_at_zero(self):
        assert evaluate(hyp2f1_series(3, 3, 1), 0.0) == 1.0

    def test_rational_closed_form(self):
        x = 0.1
        assert evaluate(hyp2f1_series(3, 3, 1), x) == pytest.approx((1 + 4 * x + x * x) / 0.9**5, rel=1e-14)

    def test_cosh_of_sqrt(self):
        s = bessel_series(BesselParams(1, -1, Fraction(-1, 2)))
        assert evaluate(s, 4.0) == pytest.approx(math.cosh(2.0), rel=1e-15)

    def test_outside_radius(self):
        with pytest.raises(OutOfDomain):
            evaluate(geometric(1), 1.5)

    def test_boundary_guard(self):
        with pytest.raises(OutOfDomain):
            evaluate(geometric(1), 0.9995)
        assert evaluate(geometric(1), 0.998) == pytest.approx(500.0, rel=1e-12)

    def test_term_cap(self):
        s = PowerSeries(radius=1, first=1.0, ratio=lambda n: 1.0, kind="float", name="slow")
        with pytest.raises(NoConvergenceDetected):
            evaluate(s, 0.9989, guard=0.0, rtol=0.0)

    def test_vectorized_matches_scalar(self):
        s = hyp2f1_series(Fraction(1, 2), Fraction(1, 3), 2)
        xs = np.linspace(-0.9, 0.9, 37)
        np.testing.assert_allclose(evaluate_many(s, xs), [evaluate(s, x) for x in xs], rtol=1e-14)

    def test_polynomial_has_no_radius_limit(self):
        p = from_coefficients([1, 2, 3])
        assert evaluate(p, 10.0) == 321.0


class TestCoefficients:
    def test_reproducible(self):
        s = hyp2f1_series(Fraction(1, 2), Fraction(1, 2), 1)
        assert s.coeff(40) == s.coeff(40)
        assert s.coeffs(3) == [1, Fraction(1, 4), Fraction(9, 64)]

    def test_float_coefficients_track_exact(self):
        s = hyp2f1_series(Fraction(1, 2), Fraction(1, 2), 1)
        exact = np.array([float(c) for c in s.coeffs(300)])
        np.testing.assert_allclose(s.float_coeffs(300), exact, rtol=1e-13)

    def test_polynomial_tail_is_zero(self):
        p = from_coefficients([1, 2])
        assert p.coeffs(4) == [1, 2, 0, 0]


class TestDerivative:
    def test_constant(self):
        d = derivative(from_coefficients([1]))
        assert d.coeffs(3) == [0, 0, 0]

    def test_exp_fixed_point(self):
        d = derivative(exponential())
        assert d.coeffs(10) == exponential().coeffs(10)

    def test_hypergeometric_ratio(self):
        a, b, c = Fraction(1, 3), Fraction(5, 2), Fraction(7, 4)
        s = hyp2f1_series(a, b, c)
        d = derivative(s)
        for n in range(20):
            assert d.coeff(n) / s.coeff(n) == (a + n) * (b + n) / (c + n)

    @pytest.mark.parametrize("s", [exponential(), hyp2f1_series(Fraction(1, 2), Fraction(1, 2), 1),
                                   bessel_series(BesselParams(1, -1, Fraction(1, 2)))], ids=lambda s: s.name)
    def test_matches_finite_differences(self, s):
        R = float(s.radius) if s.finite_radius else 4.0
        h = 1e-5 * R
        for x in np.linspace(0.1, 0.8, 8) * R:
            fd = (evaluate(s, x + h) - evaluate(s, x - h)) / (2 * h)
            assert evaluate(derivative(s), x) == pytest.approx(fd, rel=1e-6)


class TestCauchySquare:
    def test_constant(self):
        assert cauchy_square(from_coefficients([1])).coeffs(3) == [1, 0, 0]

    def test_exponential(self):
        sq = cauchy_square(exponential())
        assert sq.coeffs(12) == [Fraction(2**n, math.factorial(n)) for n in range(12)]

    def test_ones(self):
        assert cauchy_square(geometric(1)).coeffs(6) == [1, 2, 3, 4, 5, 6]

    def test_value_is_square(self):
        s = hyp2f1_series(Fraction(1, 4), Fraction(3, 4), Fraction(3, 2))
        sq = cauchy_square(s)
        for x in (0.1, 0.3, 0.49):
            assert evaluate(sq, x) == pytest.approx(evaluate(s, x) ** 2, rel=1e-10)

    def test_float_route_matches_exact(self):
        s = hyp2f1_series(Fraction(1, 2), Fraction(1, 2), 1)
        sq = cauchy_square(s)
        exact = [float(v) for v in sq.coeffs(100)]
        np.testing.assert_allclose(cauchy_square(s).float_coeffs(100), exact, rtol=1e-13)


class TestRatioSequences:
    def test_elliptic_ratio(self):
        s = hyp2f1_series(Fraction(1, 2), Fraction(1, 2), 1)
        r = ratio_sequence(derivative(s), s, 50)
        assert r[0] == Fraction(1, 4) and r[1] == Fraction(9, 8)
        assert all(r[n] == (n + Fraction(1, 2)) ** 2 / (n + 1) for n in range(51))

    def test_self_ratio(self):
        s = exponential()
        assert set(ratio_sequence(s, s, 30).terms) == {1}

    def test_bessel_ratio(self):
        p = BesselParams(Fraction(3, 2), Fraction(-2), Fraction(1, 3))
        s = bessel_series(p)
        r = ratio_sequence(derivative(s), s, 40)
        assert all(r[n] == (-p.c / 4) / (p.k + n) for n in range(41))

    def test_non_positive_denominator(self):
        g = from_coefficients([1, 1, 0, 1], radius=1)
        with pytest.raises(NonPositiveDenominator) as info:
            ratio_sequence(geometric(1), g, 3)
        assert info.value.index == 2

    def test_transform(self):
        r = RatioSequence((Fraction(5), Fraction(6), Fraction(7)), start=0)
        assert r.transform(lambda n, t: t - n).terms == (5, 5, 5)


class TestMonotoneVerdict:
    def test_increasing_prefix(self):
        r = sequence(lambda n: Fraction((2 * n + 1) ** 2, 4 * (n + 1)), 0, 1000, exact=True)
        v = monotone_verdict(r)
        assert v.kind is Monotonicity.INCREASING and v.strict and v.horizon == 1000

    def test_constant(self):
        assert monotone_verdict(sequence(lambda n: 3, 0, 10, True)).kind is Monotonicity.CONSTANT

    def test_shifted_sequence_decreasing(self):
        s = hyp2f1_series(3, 3, 1)
        r = ratio_sequence(derivative(s), s, 200).transform(lambda n, t: t - n)
        assert monotone_verdict(r).kind is Monotonicity.DECREASING

    def test_first_breaking_index(self):
        r = sequence(lambda n: [1, 2, 3, 2, 5][n], 0, 4, exact=True)
        v = monotone_verdict(r)
        assert v.kind is Monotonicity.NOT_MONOTONE and v.index == 3

    def test_float_ties(self):
        r = RatioSequence((1.0, 1.0 + 1e-17, 2.0), 0, exact=False)
        v = monotone_verdict(r)
        assert v.kind is Monotonicity.INCREASING and not v.strict

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.fractions(min_value=-100, max_value=100), min_size=2, max_size=40))
    def test_exact_and_float_agree_on_sorted_input(self, terms):
        terms = sorted(set(terms))
        if len(terms) < 2:
            return
        exact = monotone_verdict(RatioSequence(tuple(terms), 0, True))
        floats = monotone_verdict(RatioSequence(tuple(float(t) for t in terms), 0, False))
        assert exact.kind is Monotonicity.INCREASING
        assert floats.kind in (Monotonicity.INCREASING, Monotonicity.CONSTANT)
