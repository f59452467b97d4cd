"""Tests of cyclotomic factorization and discriminant

if (divisor is not monic):
    - raise InvalidArgumentException

- Phi_n built by exact integer division of x^n - 1
- factorization into Phi_1 ... Phi_12 reconstructs the polynomial
- None returned when a non-cyclotomic cofactor remains
- discriminant through the Sylvester resultant
"""

import numpy as np
import pytest
from ttstar import (
    StokesParams, PalindromicPoly, char_poly,
    cyclotomic, cyclotomic_factorization, expand_factorization,
    format_factorization, discriminant,
    InvalidArgumentException)
from ttstar.core.polynomials import divide, multiply


class TestsCyclotomic:
    """Tests of function `cyclotomic`"""

    def test_small_indices(self):
        """Building Phi_1, Phi_2, Phi_4, Phi_5, Phi_8, Phi_12"""
        assert (cyclotomic(1) == (1, -1)
            and cyclotomic(2) == (1, 1)
            and cyclotomic(4) == (1, 0, 1)
            and cyclotomic(5) == (1, 1, 1, 1, 1)
            and cyclotomic(8) == (1, 0, 0, 0, 1)
            and cyclotomic(12) == (1, 0, -1, 0, 1))

    def test_product_over_divisors(self):
        """Multiplying Phi_d over d | 12
            - expected x^12 - 1
        """
        product = [1]
        for d in (1, 2, 3, 4, 6, 12):
            product = multiply(product, list(cyclotomic(d)))
        assert product == [1] + [0] * 11 + [-1]

    def test_exception_non_monic_divisor(self):
        """Dividing by 2x + 1
            - expected raise InvalidArgumentException
        """
        with pytest.raises(InvalidArgumentException):
            divide([1, 0, 1], [2, 1])


class TestsCyclotomicFactorization:
    """Tests of function `cyclotomic_factorization`"""

    def test_phi_8(self):
        """Factoring p for (0, 0) of case 4a
            - expected Phi_8
        """
        poly = char_poly(StokesParams(0, 0)).integer_coeffs()
        factors = cyclotomic_factorization(poly)
        assert factors == {8: 1} and format_factorization(factors) == 'Phi8'

    def test_phi_2_fourth_power(self):
        """Factoring p for (4, -6) of case 4a
            - expected Phi_2^4
        """
        poly = char_poly(StokesParams(4, -6)).integer_coeffs()
        factors = cyclotomic_factorization(poly)
        assert factors == {2: 4} and format_factorization(factors) == 'Phi2^4'

    def test_phi_5(self):
        """Factoring p for (1, -1) of case 4a
            - expected Phi_5
        """
        poly = char_poly(StokesParams(1, -1)).integer_coeffs()
        assert cyclotomic_factorization(poly) == {5: 1}

    def test_negative_leading_coefficient(self):
        """Factoring p for (0, 0) of case 5a
            - -p = mu^5 - 1 = Phi_1 Phi_5
        """
        poly = char_poly(StokesParams(0, 0, '5a')).integer_coeffs()
        assert cyclotomic_factorization(poly) == {1: 1, 5: 1}

    def test_reconstruction(self):
        """Expanding factorization
            - product equals the monic polynomial
        """
        poly = [1, 2, 3, 4, 3, 2, 1]
        factors = cyclotomic_factorization(poly)
        assert factors is not None and expand_factorization(factors) == poly

    def test_non_cyclotomic(self):
        """Factoring mu^4 - 3 mu^2 + 1
            - real roots off the unit circle, None returned
        """
        assert cyclotomic_factorization([1, 0, -3, 0, 1]) is None


class TestsDiscriminant:
    """Tests of function `discriminant`"""

    def test_quadratic(self):
        """Computing discriminant of x^2 - 1
            - expected 4
        """
        assert abs(discriminant([1, 0, -1]) - 4) < 1e-12

    def test_double_root(self):
        """Computing discriminant of (x + 1)^4
            - expected 0
        """
        assert abs(discriminant([1, 4, 6, 4, 1])) < 1e-8

    def test_closed_form_case_4a(self):
        """Comparing discriminant of p with (s1^2 + 4 s2 + 8)^2 (2 + 2 s1 - s2)(2 - 2 s1 - s2)
            - relative residual below 1e-9
        """
        rng = np.random.default_rng(17)
        for s1, s2 in rng.uniform(-5, 5, size=(50, 2)):
            poly = char_poly(StokesParams(s1, s2))
            closed = (s1 ** 2 + 4 * s2 + 8) ** 2 * (2 + 2 * s1 - s2) * (2 - 2 * s1 - s2)
            assert abs(discriminant(poly.coeffs) - closed) <= 1e-9 * max(1.0, abs(closed))

    def test_palindromic_poly_evaluation(self):
        """Evaluating PalindromicPoly
            - mu^4 + 1 vanishes at exp(i pi / 4)
        """
        poly = PalindromicPoly(coeffs=(1.0, 0.0, 0.0, 0.0, 1.0))
        assert abs(poly(np.exp(0.25j * np.pi))) < 1e-14 and poly.is_integer()
