from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest

from mnconvex.errors import Inapplicable, InvalidParameters, OutOfDomain
from mnconvex.powerseries import derivative, evaluate, exponential
from mnconvex.specialfn import (
    BesselParams,
    GeneralizedHypergeometricParams,
    HypergeometricParams,
    bessel_series,
    conjugate_product,
    contiguous_derivative,
    elliptic_k,
    elliptic_k_series,
    elliptic_product,
    fnn_via_legendre,
    gauss_2f1_series,
    generalized_pfq_series,
    gn_logderiv,
    gn_prime,
    gn_prime_zero,
    hyp2f1,
    legendre,
)

HALF = Fraction(1, 2)


class TestParameters:
    def test_positive_required(self):
        with pytest.raises(InvalidParameters):
            HypergeometricParams(1, -1, 2)

    def test_labels(self):
        assert HypergeometricParams(0.5, 0.5, 1).label() == "2F1(1/2,1/2;1)"
        assert GeneralizedHypergeometricParams((), (1, 2)).label() == "0F2(;1,2)"

    def test_pfq_divergent(self):
        with pytest.raises(InvalidParameters):
            generalized_pfq_series(GeneralizedHypergeometricParams((1, 1, 1), (1,)))

    def test_bessel_validation(self):
        with pytest.raises(InvalidParameters):
            bessel_series(BesselParams(1, 1, 0))
        with pytest.raises(InvalidParameters):
            bessel_series(BesselParams(1, -1, -2))


class TestHypergeometric:
    def test_first_coefficients(self):
        s = gauss_2f1_series(HypergeometricParams(HALF, HALF, 1))
        assert s.coeffs(2) == [1, Fraction(1, 4)]

    def test_closed_forms(self):
        x = 0.1
        assert evaluate(gauss_2f1_series(HypergeometricParams(3, 3, 1)), x) == pytest.approx(
            1.41 / 0.9**5, rel=1e-14)
        p = HypergeometricParams(Fraction(1, 4), Fraction(3, 4), Fraction(3, 2))
        assert evaluate(gauss_2f1_series(p), 0.75) == pytest.approx(2 / math.sqrt(3), rel=1e-14)

    def test_negative_argument_transformation(self):
        # F(1,1;2;x) = -log(1-x)/x
        xs = np.array([-0.9, -0.5, -0.1])
        np.testing.assert_allclose(hyp2f1(1, 1, 2, xs), -np.log1p(-xs) / xs, rtol=1e-14)
        assert hyp2f1(1, 1, 2, 0.5) == pytest.approx(2 * math.log(2), rel=1e-15)

    def test_pfq_special_cases(self):
        e = generalized_pfq_series(GeneralizedHypergeometricParams((), ()))
        assert e.coeffs(8) == exponential().coeffs(8)
        same = generalized_pfq_series(GeneralizedHypergeometricParams((HALF,), (HALF,)))
        assert same.coeffs(8) == exponential().coeffs(8)
        bes = generalized_pfq_series(GeneralizedHypergeometricParams((), (1,)))
        assert bes.coeffs(8) == [Fraction(1, math.factorial(n) ** 2) for n in range(8)]
        assert math.isinf(bes.radius)
        assert generalized_pfq_series(GeneralizedHypergeometricParams((1, 1), (2,))).radius == 1

    def test_contiguous_relation(self):
        p = HypergeometricParams(HALF, HALF, 1)
        s = gauss_2f1_series(p)
        x = 0.3
        assert contiguous_derivative(p, x) == pytest.approx(x * (1 - x) * evaluate(derivative(s), x), rel=1e-10)
        assert contiguous_derivative(p, 1e-9) == pytest.approx(0.0, abs=1e-9)

    def test_contiguous_closed_form(self):
        # log-derivative of sqrt(2/(1+sqrt(1-x))) is 1/(4(1-x+sqrt(1-x)))
        p = HypergeometricParams(Fraction(1, 4), Fraction(3, 4), Fraction(3, 2))
        x = 0.75
        f = math.sqrt(2 / (1 + math.sqrt(1 - x)))
        df = f / (4 * (1 - x + math.sqrt(1 - x)))
        assert contiguous_derivative(p, x) == pytest.approx(x * (1 - x) * df, rel=1e-12)


class TestElliptic:
    def test_limits_and_constant(self):
        assert elliptic_k(1e-9) == pytest.approx(math.pi / 2, rel=1e-15)
        assert elliptic_k(math.sqrt(0.5)) == pytest.approx(1.8540746773013719, rel=1e-15)
        assert 0.25 * elliptic_k(math.sqrt(0.5)) ** 2 == pytest.approx(0.859398, abs=1e-6)

    def test_routes_agree(self):
        xs = np.linspace(0.01, 0.95, 95)
        np.testing.assert_allclose(elliptic_k(xs), elliptic_k_series(xs), rtol=1e-10)
        assert elliptic_k(0.3) == pytest.approx(elliptic_k_series(0.3), rel=1e-12)

    def test_domain(self):
        with pytest.raises(OutOfDomain):
            elliptic_k(1.0)

    def test_product_symmetry(self):
        x = 0.3
        assert elliptic_product(x) == pytest.approx(elliptic_product(math.sqrt(1 - x * x)), rel=1e-13)


class TestBessel:
    def test_cosh_and_sinhc(self):
        c = bessel_series(BesselParams(1, -1, -HALF))
        assert c.coeffs(10) == [Fraction(1, math.factorial(2 * n)) for n in range(10)]
        assert evaluate(c, 0.0) == 1.0
        s = bessel_series(BesselParams(1, -1, HALF))
        assert s.coeffs(10) == [Fraction(1, math.factorial(2 * n + 1)) for n in range(10)]
        for x in (0.5, 1.0, 2.5):
            assert evaluate(c, x * x) == pytest.approx(math.cosh(x), rel=1e-15)
            assert evaluate(s, x * x) == pytest.approx(math.sinh(x) / x, rel=1e-15)


class TestLegendre:
    def test_low_degrees(self):
        assert legendre(0).coeffs == (1,) and legendre(0)(Fraction(3, 10)) == 1
        assert legendre(1).coeffs == (0, 1)
        assert legendre(2).coeffs == (Fraction(-1, 2), 0, Fraction(3, 2))

    @pytest.mark.parametrize("n", range(1, 21))
    def test_slope_at_one(self, n):
        assert legendre(n).derivative()(1) == Fraction(n * (n + 1), 2)

    @pytest.mark.parametrize("n", range(1, 20))
    def test_recurrences(self, n):
        x = legendre(1)
        p0, p1, p2 = legendre(n - 1), legendre(n), legendre(n + 1)
        # Bonnet: (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
        lhs = p2.scale(n + 1)
        rhs = p1.shift_up().scale(2 * n + 1) - p0.scale(n)
        assert (lhs - rhs).is_zero()
        # derivative form: P'_{n+1} - P'_{n-1} = (2n+1) P_n
        assert (p2.derivative() - p0.derivative() - p1.scale(2 * n + 1)).is_zero()
        assert x.coeffs == (0, 1)

    def test_fnn(self):
        assert fnn_via_legendre(3, Fraction(1, 10)) == Fraction(141, 100) / Fraction(9, 10) ** 5
        assert float(fnn_via_legendre(3, 0.1)) == pytest.approx(2.38785, abs=1e-5)
        assert fnn_via_legendre(1, Fraction(1, 3)) == Fraction(3, 2)
        s = gauss_2f1_series(HypergeometricParams(4, 4, 1))
        assert float(fnn_via_legendre(4, 0.2)) == pytest.approx(evaluate(s, 0.2), rel=1e-12)

    def test_log_derivative_values(self):
        assert gn_logderiv(3, Fraction(0)) == 9
        assert gn_logderiv(3, Fraction(1, 10)) == Fraction(3610, 423)
        assert float(gn_logderiv(3, 0.1)) == pytest.approx(8.534, abs=5e-4)

    def test_slope_at_zero(self):
        assert gn_prime(3, Fraction(0)) == -9
        assert gn_prime_zero(4) == -56
        for n in range(1, 11):
            assert gn_prime(n, Fraction(0)) == gn_prime_zero(n)

    def test_domain(self):
        with pytest.raises(OutOfDomain):
            fnn_via_legendre(3, 0.6)


class TestConjugateProduct:
    def test_symmetry(self):
        p = HypergeometricParams(Fraction(1, 3), Fraction(1, 4), Fraction(3, 4))
        assert conjugate_product(p, 0.2) == pytest.approx(conjugate_product(p, 0.8), rel=1e-12)

    def test_elliptic_special_case(self):
        p = HypergeometricParams(HALF, HALF, 1)
        for x in (0.3, 0.6, 0.9):
            expected = (2 / math.pi) ** 2 * elliptic_product(x)
            assert conjugate_product(p, x * x) == pytest.approx(expected, rel=1e-12)

    def test_small_argument(self):
        p = HypergeometricParams(HALF, HALF, 1)
        assert conjugate_product(p, 1e-3) < 1e-2

    def test_preconditions(self):
        with pytest.raises(Inapplicable):
            conjugate_product(HypergeometricParams(2, HALF, 3), 0.5)
