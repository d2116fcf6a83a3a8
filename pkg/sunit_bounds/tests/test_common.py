"""Define the unit tests for the :mod:`sunit_bounds.common` module."""

from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction

import colour
import mpmath
import pytest
from colour.utilities import ColourUsageWarning

import sunit_bounds
from sunit_bounds.common import (
    DEFAULT_PRECISION_DIGITS,
    ENVIRONMENT_VARIABLE_PRECISION_DIGITS,
    MINIMUM_PRECISION_DIGITS,
    BoundViolation,
    ComparisonFailure,
    PreconditionViolation,
    SUnitBoundsError,
    _precision_digits_from_environment,
    as_mpf,
    format_rational,
    format_real,
    to_serialisable,
    working_precision,
)
from sunit_bounds.evertse_pipeline import EvertseParams
from sunit_bounds.poly_series import RationalPolynomial

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "TestExceptions",
    "TestPrecisionDigitsFromEnvironment",
    "TestWorkingPrecision",
    "TestAsMpf",
    "TestFormatRational",
    "TestToSerialisable",
    "TestPackage",
]


class TestExceptions:
    """Define the exceptions hierarchy unit tests methods."""

    def test_hierarchy(self):
        """Test the exceptions hierarchy."""

        assert issubclass(ComparisonFailure, BoundViolation)
        assert issubclass(BoundViolation, SUnitBoundsError)
        assert issubclass(PreconditionViolation, ValueError)

    def test_witness(self):
        """Test :class:`sunit_bounds.common.BoundViolation` witness."""

        error = ComparisonFailure("Failed!", (2, 3))

        assert error.witness == (2, 3)
        assert str(error) == "Failed!"
        assert BoundViolation("Failed!").witness is None


class TestPrecisionDigitsFromEnvironment:
    """
    Define :func:`sunit_bounds.common._precision_digits_from_environment`
    definition unit tests methods.
    """

    def test_precision_digits_from_environment(self, monkeypatch):
        """
        Test :func:`sunit_bounds.common._precision_digits_from_environment`
        definition.
        """

        monkeypatch.delenv(ENVIRONMENT_VARIABLE_PRECISION_DIGITS, raising=False)
        assert _precision_digits_from_environment() == DEFAULT_PRECISION_DIGITS

        monkeypatch.setenv(ENVIRONMENT_VARIABLE_PRECISION_DIGITS, "64")
        assert _precision_digits_from_environment() == 64

        monkeypatch.setenv(ENVIRONMENT_VARIABLE_PRECISION_DIGITS, "12")
        with pytest.warns(ColourUsageWarning):
            assert _precision_digits_from_environment() == MINIMUM_PRECISION_DIGITS

    def test_malformed_precision_digits(self, monkeypatch):
        """
        Test :func:`sunit_bounds.common._precision_digits_from_environment`
        definition fallback on malformed values, and that the package still
        imports with them.
        """

        for value in ("abc", "", "40.5"):
            monkeypatch.setenv(ENVIRONMENT_VARIABLE_PRECISION_DIGITS, value)

            with pytest.warns(ColourUsageWarning):
                assert _precision_digits_from_environment() == DEFAULT_PRECISION_DIGITS

        monkeypatch.setenv(ENVIRONMENT_VARIABLE_PRECISION_DIGITS, "abc")
        process = subprocess.run(
            [
                sys.executable,
                "-c",
                "import sunit_bounds.common as common; print(common.PRECISION_DIGITS)",
            ],
            capture_output=True,
            text=True,
            check=False,
        )

        assert process.returncode == 0, process.stderr
        assert process.stdout.strip() == str(DEFAULT_PRECISION_DIGITS)


class TestWorkingPrecision:
    """
    Define :func:`sunit_bounds.common.working_precision` definition unit tests
    methods.
    """

    def test_working_precision(self):
        """Test :func:`sunit_bounds.common.working_precision` definition."""

        dps = mpmath.mp.dps
        with working_precision(80):
            assert mpmath.mp.dps == 80

        assert mpmath.mp.dps == dps


class TestAsMpf:
    """Define :func:`sunit_bounds.common.as_mpf` definition unit tests methods."""

    def test_as_mpf(self):
        """Test :func:`sunit_bounds.common.as_mpf` definition."""

        with working_precision(50):
            assert as_mpf(Fraction(1, 3)) * 3 == 1
            assert as_mpf(" 0.834 ") == mpmath.mpf("0.834")
            assert as_mpf(2) == 2


class TestFormatRational:
    """
    Define :func:`sunit_bounds.common.format_rational` definition unit tests
    methods.
    """

    def test_format_rational(self):
        """Test :func:`sunit_bounds.common.format_rational` definition."""

        assert format_rational(Fraction(14, 9)) == "14/9"
        assert format_rational(-3) == "-3"
        assert Fraction(format_rational(Fraction(-8, 81))) == Fraction(-8, 81)

    def test_format_real(self):
        """Test :func:`sunit_bounds.common.format_real` definition."""

        with working_precision(40):
            assert format_real(mpmath.mpf(1) / 3, 5) == "0.33333"


class TestToSerialisable:
    """
    Define :func:`sunit_bounds.common.to_serialisable` definition unit tests
    methods.
    """

    def test_to_serialisable(self):
        """Test :func:`sunit_bounds.common.to_serialisable` definition."""

        serialised = to_serialisable(EvertseParams("0.834", 1600, 20, "7.8", 45))

        assert serialised == {
            "B": "417/500",
            "r0": 1600,
            "k": 20,
            "ln2C": "39/5",
            "n_step4": 45,
            "m": 1,
            "s": 1,
        }

        assert to_serialisable(RationalPolynomial([Fraction(4, 3), -1])) == [
            "4/3",
            "-1",
        ]
        assert to_serialisable({1: None, "a": True}) == {"1": None, "a": True}
        assert to_serialisable(1 + 2j) == ["1.0", "2.0"]

        json.dumps(to_serialisable({"x": mpmath.mpf(2), "y": (Fraction(1, 2),)}))


class TestPackage:
    """Define the :mod:`sunit_bounds` package unit tests methods."""

    def test_colour_environment(self):
        """
        Test that importing :mod:`sunit_bounds` leaves the *Colour* ancillary
        packages registry untouched.
        """

        assert sunit_bounds.__version__ == "0.1.0"
        assert "sunit-bounds" not in colour.utilities.ANCILLARY_COLOUR_SCIENCE_PACKAGES
