"""Define the unit tests for the :mod:`sunit_bounds.poly_series` module."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import numpy as np
import pytest
from colour.constants import TOLERANCE_ABSOLUTE_TESTS
from sympy.polys.domains import QQ

from sunit_bounds.common import NonNilpotentInner, NonZeroRemainder, UnknownCoefficient
from sunit_bounds.exact_arith import ONE_THIRD, gen_binomial
from sunit_bounds.poly_series import (
    DEGREE_ZERO_POLYNOMIAL,
    POLYNOMIAL_RING,
    RationalPolynomial,
    TruncatedSeries,
    guard_order,
    poly_compose,
    poly_divide_exact,
    poly_divmod,
    poly_eval,
    series_binomial,
    series_binomial_third,
    series_compose,
)

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "TestRationalPolynomial",
    "TestPolyEval",
    "TestPolyDivmod",
    "TestPolyDivideExact",
    "TestTruncatedSeries",
    "TestSeriesBinomial",
    "TestSeriesCompose",
]


def _random_polynomial(
    generator: np.random.Generator, degree: int
) -> RationalPolynomial:
    """
    Return a random polynomial of given degree whose coefficients have
    3-power denominators.
    """

    coefficients = [
        Fraction(int(generator.integers(-50, 51)), 3 ** int(generator.integers(0, 4)))
        for _ in range(degree)
    ]
    coefficients.append(Fraction(int(generator.integers(1, 51))))

    return RationalPolynomial(coefficients)


class TestRationalPolynomial:
    """
    Define :class:`sunit_bounds.poly_series.RationalPolynomial` class unit tests
    methods.
    """

    def test_required_attributes(self):
        """Test the presence of required attributes."""

        required_attributes = ("coefficients", "leading_coefficient")

        for attribute in required_attributes:
            assert attribute in dir(RationalPolynomial)

    def test_required_methods(self):
        """Test the presence of required methods."""

        required_methods = (
            "__init__",
            "degree",
            "is_zero",
            "monomial",
            "reverse",
            "substitute_power",
            "to_element",
            "from_element",
        )

        for method in required_methods:
            assert method in dir(RationalPolynomial)

    def test_trim(self):
        """Test the trailing zeros trimming."""

        p = RationalPolynomial([1, 2, 0, 0])

        assert p.coefficients == (1, 2)
        assert p == RationalPolynomial([1, 2])
        assert hash(p) == hash(RationalPolynomial([1, 2]))

    def test_degree(self):
        """Test :meth:`sunit_bounds.poly_series.RationalPolynomial.degree` method."""

        assert RationalPolynomial([0, 0, 3]).degree() == 2
        assert RationalPolynomial([0, 0]).degree() == DEGREE_ZERO_POLYNOMIAL
        assert RationalPolynomial().is_zero()
        assert RationalPolynomial().leading_coefficient == 0

    def test_arithmetic(self):
        """Test the arithmetic operators."""

        p = RationalPolynomial([ONE_THIRD, 1])
        q = RationalPolynomial([1, -1])

        assert p + q == RationalPolynomial([Fraction(4, 3)])
        assert p - p == RationalPolynomial()
        assert 1 - q == RationalPolynomial([0, 1])
        assert p * q == RationalPolynomial([ONE_THIRD, Fraction(2, 3), -1])
        assert 3 * p == RationalPolynomial([1, 3])
        assert q**0 == 1
        assert q**3 == RationalPolynomial([1, -3, 3, -1])
        pytest.raises(ValueError, lambda: q ** (-1))

    def test_reverse(self):
        """Test :meth:`sunit_bounds.poly_series.RationalPolynomial.reverse` method."""

        p = RationalPolynomial([1, 2])

        assert p.reverse(4) == RationalPolynomial([0, 0, 2, 1])
        pytest.raises(ValueError, p.reverse, 1)

    def test_substitute_power(self):
        """
        Test :meth:`sunit_bounds.poly_series.RationalPolynomial.substitute_power`
        method.
        """

        p = RationalPolynomial([Fraction(4, 3), Fraction(-1, 3)])

        assert p.substitute_power(3) == RationalPolynomial(
            [Fraction(4, 3), 0, 0, Fraction(-1, 3)]
        )
        assert RationalPolynomial().substitute_power(3).is_zero()

    def test_element_conversion(self):
        """
        Test :meth:`sunit_bounds.poly_series.RationalPolynomial.to_element` and
        :meth:`sunit_bounds.poly_series.RationalPolynomial.from_element`
        methods.
        """

        generator = POLYNOMIAL_RING.gens[0]
        p = RationalPolynomial([ONE_THIRD, 0, -2])

        assert p.to_element() == -2 * generator**2 + QQ(1, 3)
        assert p.to_element().ring == POLYNOMIAL_RING
        assert RationalPolynomial.from_element(p.to_element()) == p
        assert RationalPolynomial.from_element(POLYNOMIAL_RING.zero).is_zero()
        assert all(
            isinstance(c, Fraction)
            for c in RationalPolynomial.from_element(generator**3 / 3).coefficients
        )

    def test_str(self):
        """Test :meth:`sunit_bounds.poly_series.RationalPolynomial.__str__` method."""

        assert str(RationalPolynomial()) == "0"
        assert str(RationalPolynomial([1, 0, -2])) == "1 + (-2)*z^2"


class TestPolyEval:
    """
    Define :func:`sunit_bounds.poly_series.poly_eval` definition unit tests
    methods.
    """

    def test_poly_eval(self):
        """Test :func:`sunit_bounds.poly_series.poly_eval` definition."""

        p = RationalPolynomial([Fraction(4, 3), Fraction(-1, 3)])

        assert poly_eval(p, 1) == 1
        assert poly_eval(p, Fraction(1, 2)) == Fraction(7, 6)

        np.testing.assert_allclose(
            poly_eval(p, 1j), 4 / 3 - 1j / 3, atol=TOLERANCE_ABSOLUTE_TESTS
        )
        assert poly_eval(p, mpmath.mpf(4)) == 0


class TestPolyDivmod:
    """
    Define :func:`sunit_bounds.poly_series.poly_divmod` definition unit tests
    methods.
    """

    def test_poly_divmod(self):
        """Test :func:`sunit_bounds.poly_series.poly_divmod` definition."""

        num = RationalPolynomial([1, 2, 3, 4])
        den = RationalPolynomial([1, 3])

        quotient, remainder = poly_divmod(num, den)

        assert quotient * den + remainder == num
        assert remainder.degree() < den.degree()

        quotient, remainder = poly_divmod(den, num)

        assert quotient.is_zero()
        assert remainder == den

    def test_raise_exception_poly_divmod(self):
        """
        Test :func:`sunit_bounds.poly_series.poly_divmod` definition raised
        exception.
        """

        pytest.raises(
            ZeroDivisionError,
            poly_divmod,
            RationalPolynomial([1]),
            RationalPolynomial(),
        )


class TestPolyDivideExact:
    """
    Define :func:`sunit_bounds.poly_series.poly_divide_exact` definition unit
    tests methods.
    """

    def test_poly_divide_exact(self):
        """Test :func:`sunit_bounds.poly_series.poly_divide_exact` definition."""

        one_minus_T = RationalPolynomial([1, -1])
        V_1 = RationalPolynomial([1, Fraction(-4, 3), 0, 0, ONE_THIRD])

        assert poly_divide_exact(V_1, one_minus_T**2) == RationalPolynomial(
            [1, Fraction(2, 3), ONE_THIRD]
        )

    def test_poly_divide_exact_products(self):
        """
        Test :func:`sunit_bounds.poly_series.poly_divide_exact` definition on
        random polynomials of degree at most 20.
        """

        generator = np.random.default_rng(4)
        for _ in range(25):
            a = _random_polynomial(generator, int(generator.integers(0, 21)))
            b = _random_polynomial(generator, int(generator.integers(0, 21)))

            assert poly_divide_exact(a * b, b) == a
            assert poly_divide_exact(a * b, a) == b

    def test_raise_exception_poly_divide_exact(self):
        """
        Test :func:`sunit_bounds.poly_series.poly_divide_exact` definition
        raised exception.
        """

        pytest.raises(
            NonZeroRemainder,
            poly_divide_exact,
            RationalPolynomial([1, 0, 1]),
            RationalPolynomial([-1, 1]),
        )


class TestTruncatedSeries:
    """
    Define :class:`sunit_bounds.poly_series.TruncatedSeries` class unit tests
    methods.
    """

    def test_required_attributes(self):
        """Test the presence of required attributes."""

        required_attributes = ("coefficients", "lowest_exponent", "order")

        for attribute in required_attributes:
            assert attribute in dir(TruncatedSeries)

    def test_required_methods(self):
        """Test the presence of required methods."""

        required_methods = (
            "__init__",
            "from_polynomial",
            "coefficient",
            "valuation",
            "truncate",
            "to_polynomial",
        )

        for method in required_methods:
            assert method in dir(TruncatedSeries)

    def test_coefficient(self):
        """Test :meth:`sunit_bounds.poly_series.TruncatedSeries.coefficient` method."""

        s = TruncatedSeries([1, 2], lowest_exponent=-1, order=3)

        assert s.coefficient(-5) == 0
        assert s.coefficient(0) == 2
        assert s.coefficient(2) == 0
        pytest.raises(UnknownCoefficient, s.coefficient, 3)

    def test_valuation(self):
        """Test :meth:`sunit_bounds.poly_series.TruncatedSeries.valuation` method."""

        assert TruncatedSeries([0, 0, 5], -2, 4).valuation() == 0
        assert TruncatedSeries([0, 0], 0, 2).valuation() is None

    def test_truncate(self):
        """Test :meth:`sunit_bounds.poly_series.TruncatedSeries.truncate` method."""

        s = series_binomial_third(order=6)

        assert s.truncate(3) == series_binomial_third(order=3)
        assert s.truncate(10).order == 6

    def test_multiplication(self):
        """Test the truncated series multiplication and its order."""

        g = series_binomial_third(order=10)
        product = g * g * g

        assert product.order == 10
        assert product.to_polynomial() == RationalPolynomial([1, -1])

        w = TruncatedSeries([1], -1, 5)
        assert (w * g).order == 5
        assert (w * g).coefficient(-1) == 1

    def test_polynomial_agreement(self):
        """
        Test that the truncated series arithmetic agrees with the polynomial
        arithmetic below the series order.
        """

        generator = np.random.default_rng(8)
        for _ in range(10):
            a = _random_polynomial(generator, int(generator.integers(0, 8)))
            b = _random_polynomial(generator, int(generator.integers(0, 8)))

            s_a = TruncatedSeries.from_polynomial(a, 16)
            s_b = TruncatedSeries.from_polynomial(b, 16)

            assert (s_a * s_b).to_polynomial() == a * b
            assert (s_a + s_b).to_polynomial() == a + b
            assert (s_a - s_b).to_polynomial() == a - b
            assert (s_a * s_b).truncate(5) == TruncatedSeries.from_polynomial(
                a * b, 5
            )

    def test_addition(self):
        """Test the truncated series addition and its order."""

        a = TruncatedSeries([1, 1, 1], 0, 3)
        b = TruncatedSeries([1, 1], 0, 5)

        assert (a + b).order == 3
        assert (a - a).valuation() is None
        assert -a == a * -1

    def test_to_polynomial(self):
        """
        Test :meth:`sunit_bounds.poly_series.TruncatedSeries.to_polynomial`
        method.
        """

        pytest.raises(ValueError, TruncatedSeries([1], -1, 2).to_polynomial)
        assert TruncatedSeries([0, 2], -1, 2).to_polynomial() == RationalPolynomial(
            [2]
        )

    def test_from_polynomial(self):
        """
        Test :meth:`sunit_bounds.poly_series.TruncatedSeries.from_polynomial`
        method.
        """

        p = RationalPolynomial([1, 2, 3])
        s = TruncatedSeries.from_polynomial(p, 2, reciprocal=True)

        assert s.lowest_exponent == -2
        assert s.coefficient(-2) == 3
        assert s.coefficient(0) == 1
        assert TruncatedSeries.from_polynomial(RationalPolynomial(), 4).order == 4


class TestSeriesBinomial:
    """
    Define :func:`sunit_bounds.poly_series.series_binomial` definition unit
    tests methods.
    """

    def test_series_binomial(self):
        """Test :func:`sunit_bounds.poly_series.series_binomial` definition."""

        assert series_binomial(2, 5).to_polynomial() == RationalPolynomial([1, -2, 1])
        assert series_binomial(-1, 4).coefficients == (1, 1, 1, 1)

    def test_series_binomial_closed_form(self):
        """
        Test :func:`sunit_bounds.poly_series.series_binomial` definition
        against the generalised binomial coefficients.
        """

        for exponent in (ONE_THIRD, -ONE_THIRD, Fraction(4, 3), Fraction(1, 2), -2):
            series = series_binomial(exponent, 30)

            assert series.order == 30
            assert series.coefficients == tuple(
                (-1) ** k * gen_binomial(exponent, k) for k in range(30)
            )

    def test_series_binomial_third(self):
        """
        Test :func:`sunit_bounds.poly_series.series_binomial_third` definition.
        """

        assert series_binomial_third(order=4).coefficients == (
            1,
            -ONE_THIRD,
            Fraction(-1, 9),
            Fraction(-5, 81),
        )

    def test_raise_exception_series_binomial(self):
        """
        Test :func:`sunit_bounds.poly_series.series_binomial` definition raised
        exception.
        """

        pytest.raises(ValueError, series_binomial, ONE_THIRD, 0)
        pytest.raises(ValueError, series_binomial_third, "one_plus_z")


class TestSeriesCompose:
    """
    Define :func:`sunit_bounds.poly_series.series_compose` definition unit
    tests methods.
    """

    def test_series_compose(self):
        """Test :func:`sunit_bounds.poly_series.series_compose` definition."""

        geometric = series_binomial(-1, 8)
        composed = series_compose(geometric, RationalPolynomial([0, 1, 1]))

        assert composed.order == 8
        assert composed.coefficients[:5] == (1, 1, 2, 3, 5)

        assert series_compose(
            series_binomial_third(order=guard_order(1)),
            RationalPolynomial([0, 3, -3, 1]),
        ).to_polynomial() == RationalPolynomial([1, -1])

    def test_poly_compose(self):
        """Test :func:`sunit_bounds.poly_series.poly_compose` definition."""

        assert poly_compose(
            RationalPolynomial([Fraction(4, 3), Fraction(-1, 3)]),
            RationalPolynomial([1, -1]),
        ) == RationalPolynomial([1, ONE_THIRD])

    def test_raise_exception_series_compose(self):
        """
        Test :func:`sunit_bounds.poly_series.series_compose` definition raised
        exception.
        """

        pytest.raises(
            NonNilpotentInner,
            series_compose,
            series_binomial_third(order=4),
            RationalPolynomial([1, 1]),
        )
