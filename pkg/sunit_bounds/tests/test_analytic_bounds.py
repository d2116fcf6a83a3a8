"""Define the unit tests for the :mod:`sunit_bounds.analytic_bounds` module."""

from __future__ import annotations

import dataclasses
from fractions import Fraction

import numpy as np
import pytest

from sunit_bounds import analytic_bounds
from sunit_bounds.analytic_bounds import (
    ArchimedeanReport,
    ComplexSample,
    check_length_bounds,
    check_mahler_sandwich,
    height_weights,
    length,
    length_B_closed_form,
    mahler_jensen,
    mahler_measure,
    mahler_numeric,
    sample_archimedean_bounds,
    sample_complex_points,
)
from sunit_bounds.common import BoundViolation
from sunit_bounds.pade_construct import build
from sunit_bounds.poly_series import RationalPolynomial

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "TestLength",
    "TestCheckLengthBounds",
    "TestMahlerMeasure",
    "TestCheckMahlerSandwich",
    "TestHeightWeights",
    "TestSampleComplexPoints",
    "TestSampleArchimedeanBounds",
]


class TestLength:
    """
    Define :func:`sunit_bounds.analytic_bounds.length` definition unit
    tests methods.
    """

    def test_length(self):
        """Test :func:`sunit_bounds.analytic_bounds.length` definition."""

        assert length(build(1).B) == Fraction(5, 3)
        assert length(build(2).B) == Fraction(29, 9)
        assert length(RationalPolynomial([-1, 0, 2])) == 3

    def test_length_B_closed_form(self):
        """
        Test :func:`sunit_bounds.analytic_bounds.length_B_closed_form`
        definition.
        """

        for n in range(1, 10):
            assert length_B_closed_form(n) == length(build(n).B)


class TestCheckLengthBounds:
    """
    Define :func:`sunit_bounds.analytic_bounds.check_length_bounds` definition
    unit tests methods.
    """

    def test_check_length_bounds(self):
        """
        Test :func:`sunit_bounds.analytic_bounds.check_length_bounds`
        definition.
        """

        report = check_length_bounds(12)

        assert report.passed
        assert report.exempt == [1]
        assert len(report.lengths_A) == 12
        assert report.lengths_A[0] == 1
        assert report.lengths_B[:2] == [Fraction(5, 3), Fraction(29, 9)]

        report = check_length_bounds(60)

        assert report.passed
        assert report.n_max == 60
        assert len(report.lengths_W) == 60

    def test_raise_exception_check_length_bounds(self):
        """
        Test :func:`sunit_bounds.analytic_bounds.check_length_bounds`
        definition raised exception.
        """

        pytest.raises(ValueError, check_length_bounds, 0)


class TestMahlerMeasure:
    """
    Define :func:`sunit_bounds.analytic_bounds.mahler_measure` definition unit
    tests methods.
    """

    def test_mahler_numeric(self):
        """Test :func:`sunit_bounds.analytic_bounds.mahler_numeric` definition."""

        np.testing.assert_allclose(
            mahler_numeric(RationalPolynomial([6, -5, 1])), 6, rtol=1e-12
        )
        np.testing.assert_allclose(
            mahler_numeric(RationalPolynomial([1, Fraction(-1, 2)])), 1, rtol=1e-12
        )
        np.testing.assert_allclose(
            mahler_numeric(RationalPolynomial([0, -1, 1]) * 3), 3, rtol=1e-12
        )

    def test_methods_agree(self):
        """Test the roots and *Jensen* methods agreement."""

        for n in range(1, 4):
            W = build(n).W

            np.testing.assert_allclose(
                mahler_measure(W, method="Jensen"),
                mahler_measure(W, method="Roots"),
                rtol=1e-6,
            )

    def test_raise_exception_mahler_measure(self):
        """
        Test :func:`sunit_bounds.analytic_bounds.mahler_measure` definition
        raised exception.
        """

        pytest.raises(ValueError, mahler_numeric, RationalPolynomial([2]))
        pytest.raises(ValueError, mahler_jensen, RationalPolynomial([1, 1]), -1)
        pytest.raises(
            ValueError, mahler_measure, RationalPolynomial([1, 1]), method="Grid"
        )


class TestCheckMahlerSandwich:
    """
    Define :func:`sunit_bounds.analytic_bounds.check_mahler_sandwich` definition
    unit tests methods.
    """

    def test_check_mahler_sandwich(self):
        """
        Test :func:`sunit_bounds.analytic_bounds.check_mahler_sandwich`
        definition.
        """

        report = check_mahler_sandwich(4)

        assert report.passed
        assert len(report.mahler_V) == 4
        np.testing.assert_allclose(report.mahler_V, report.mahler_W, rtol=1e-6)

        report = check_mahler_sandwich(30)

        assert report.passed
        assert len(report.mahler_W) == 30


class TestHeightWeights:
    """
    Define :func:`sunit_bounds.analytic_bounds.height_weights` definition unit
    tests methods.
    """

    def test_height_weights(self):
        """Test :func:`sunit_bounds.analytic_bounds.height_weights` definition."""

        assert height_weights(1) == {"real": 1, "complex": 2}
        assert height_weights(5) == {
            "real": Fraction(1, 5),
            "complex": Fraction(2, 5),
        }


class TestSampleComplexPoints:
    """
    Define :func:`sunit_bounds.analytic_bounds.sample_complex_points` definition
    unit tests methods.
    """

    def test_sample_complex_points(self):
        """
        Test :func:`sunit_bounds.analytic_bounds.sample_complex_points`
        definition.
        """

        z = sample_complex_points(1000, seed=3)

        assert z.shape == (1000,)
        assert np.all((np.abs(z) >= 1e-3) & (np.abs(z) <= 1e3))
        np.testing.assert_array_equal(z, sample_complex_points(1000, seed=3))
        assert not np.array_equal(z, sample_complex_points(1000, seed=4))


class TestSampleArchimedeanBounds:
    """
    Define :func:`sunit_bounds.analytic_bounds.sample_archimedean_bounds`
    definition unit tests methods.
    """

    def test_sample_archimedean_bounds(self):
        """
        Test :func:`sunit_bounds.analytic_bounds.sample_archimedean_bounds`
        definition.
        """

        for n in range(1, 16):
            report = sample_archimedean_bounds(n, 10_000)

            assert isinstance(report, ArchimedeanReport)
            assert report.samples == 10_000
            assert all(ratio <= 1 + 2e-9 for ratio in report.max_ratios.values())

    def test_violation_sample_archimedean_bounds(self, monkeypatch):
        """
        Test :func:`sunit_bounds.analytic_bounds.sample_archimedean_bounds`
        definition witness when an inequality fails.
        """

        pair = build(3)
        monkeypatch.setattr(
            analytic_bounds,
            "build",
            lambda n: dataclasses.replace(pair, A=pair.A * 10**6),
        )

        with pytest.raises(BoundViolation) as error:
            sample_archimedean_bounds(3, 1000, seed=7)

        assert isinstance(error.value.witness, ComplexSample)
        assert error.value.witness.seed == 7
        assert "A_n, B_n" in str(error.value)

    def test_raise_exception_sample_archimedean_bounds(self):
        """
        Test :func:`sunit_bounds.analytic_bounds.sample_archimedean_bounds`
        definition raised exception.
        """

        pytest.raises(ValueError, sample_archimedean_bounds, 0)
