"""Define the unit tests for the :mod:`sunit_bounds.evertse_pipeline` module."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import numpy as np
import pytest

from sunit_bounds.common import (
    DomainError,
    NonPositiveCoefficient,
    PreconditionViolation,
    working_precision,
)
from sunit_bounds.evertse_pipeline import (
    CHOICES,
    EvertseParams,
    assemble_bound,
    digit_match,
    evaluate_bound_log,
    evertse_bound_log,
    exponent_f1_limit,
    exponents,
    min_k,
    part_sizes,
    parts,
    r_of_b,
    reproduce_choice,
    step2_N,
    theorem_bound_log,
)

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "TestEvertseParams",
    "TestRofB",
    "TestExponents",
    "TestMinK",
    "TestParts",
    "TestStep2N",
    "TestAssembleBound",
    "TestReferenceBounds",
    "TestDigitMatch",
    "TestReproduceChoice",
]


class TestEvertseParams:
    """
    Define :class:`sunit_bounds.evertse_pipeline.EvertseParams` class unit tests
    methods.
    """

    def test_EvertseParams(self):
        """Test :class:`sunit_bounds.evertse_pipeline.EvertseParams` class."""

        params = EvertseParams("0.84", 100, 13, "7.5", 47, m=2, s=3)

        assert params.B == Fraction(21, 25)
        assert params.ln2C == Fraction(15, 2)
        assert (params.m, params.s) == (2, 3)

    def test_raise_exception_EvertseParams(self):
        """
        Test :class:`sunit_bounds.evertse_pipeline.EvertseParams` class raised
        exception.
        """

        pytest.raises(ValueError, EvertseParams, "0.84", 0, 13, "7.5", 47)
        pytest.raises(ValueError, EvertseParams, "0.84", 100, 13, "7.5", 47, s=0)
        pytest.raises(TypeError, EvertseParams, 0.84, 100, 13, "7.5", 47)


class TestRofB:
    """
    Define :func:`sunit_bounds.evertse_pipeline.r_of_b` definition unit
    tests methods.
    """

    def test_r_of_b(self):
        """Test :func:`sunit_bounds.evertse_pipeline.r_of_b` definition."""

        np.testing.assert_allclose(float(r_of_b("0.5")), 4, rtol=1e-15)
        np.testing.assert_allclose(float(3 * r_of_b("0.834")), 44.9866, atol=1e-4)
        np.testing.assert_allclose(float(3 * r_of_b("0.84")), 46.8312, atol=1e-4)

    def test_raise_exception_r_of_b(self):
        """
        Test :func:`sunit_bounds.evertse_pipeline.r_of_b` definition raised
        exception.
        """

        pytest.raises(DomainError, r_of_b, 1)
        pytest.raises(DomainError, r_of_b, "0.4")


class TestExponents:
    """
    Define :func:`sunit_bounds.evertse_pipeline.exponents` definition unit tests
    methods.
    """

    def test_exponents(self):
        """Test :func:`sunit_bounds.evertse_pipeline.exponents` definition."""

        f1, f2, g1, g2, g3 = exponents("0.834", 1600, 20)

        np.testing.assert_allclose(float(f1), 533.814188, atol=1e-6)
        np.testing.assert_allclose(float(f2), 533.391, atol=1e-3)
        np.testing.assert_allclose(float(g1), -5.20814, atol=1e-5)
        np.testing.assert_allclose(float(g2), 36.3095, atol=1e-4)
        np.testing.assert_allclose(float(g3), 4.91666, atol=1e-5)

    def test_exponent_f1_limit(self):
        """
        Test :func:`sunit_bounds.evertse_pipeline.exponent_f1_limit` definition
        against large :math:`r_0`.
        """

        f1 = exponents("0.9", 10**12, min_k("0.9", 10**12)).f1

        np.testing.assert_allclose(
            float(f1), float(exponent_f1_limit("0.9")), rtol=1e-9
        )

    def test_raise_exception_exponents(self):
        """
        Test :func:`sunit_bounds.evertse_pipeline.exponents` definition raised
        exception.
        """

        pytest.raises(PreconditionViolation, exponents, "0.834", 1600, 19)
        pytest.raises(PreconditionViolation, exponents, Fraction(5, 6), 1600, 20)
        pytest.raises(PreconditionViolation, exponents, "0.84", 1, 40)

    def test_decreasing_in_r(self):
        """
        Test :func:`sunit_bounds.evertse_pipeline.exponents` definition
        :math:`f_1` and :math:`f_2` decrease strictly in :math:`r_0`.
        """

        for B, r_start in (("0.834", 850), ("0.84", 85), ("0.9", 9)):
            values = [
                exponents(B, r, min_k(B, r))
                for r in range(r_start, r_start + 2000, 37)
            ]

            for previous, current in zip(values, values[1:]):
                assert current.f1 < previous.f1
                assert current.f2 < previous.f2


class TestMinK:
    """
    Define :func:`sunit_bounds.evertse_pipeline.min_k` definition unit
    tests methods.
    """

    def test_min_k(self):
        """Test :func:`sunit_bounds.evertse_pipeline.min_k` definition."""

        assert min_k("0.834", 1600) == 20
        assert min_k("0.84", 100) == 13
        assert min_k("0.99", 1) == 2

    def test_min_k_minimality(self):
        """Test the minimality of :func:`sunit_bounds.evertse_pipeline.min_k`."""

        for B in ("0.834", "0.85", "0.9", "0.95"):
            for r0 in (10, 100, 1600):
                k = min_k(B, r0)
                B_exact = Fraction(B)

                assert (3 * B_exact - 1) ** (k + 1) > 3 * r0 + 4
                assert k == 1 or not (3 * B_exact - 1) ** k > 3 * r0 + 4

    def test_raise_exception_min_k(self):
        """
        Test :func:`sunit_bounds.evertse_pipeline.min_k` definition raised
        exception.
        """

        pytest.raises(PreconditionViolation, min_k, "0.8", 100)
        pytest.raises(PreconditionViolation, min_k, 1, 100)


class TestParts:
    """
    Define :func:`sunit_bounds.evertse_pipeline.parts` definition unit
    tests methods.
    """

    def test_parts(self):
        """Test :func:`sunit_bounds.evertse_pipeline.parts` definition."""

        result = parts("0.834", 1600, 20)

        np.testing.assert_allclose(float(result.ln_fpart_const), 2805.184, atol=1e-3)
        np.testing.assert_allclose(float(result.ln_gpart_const), 126.323, atol=1e-3)
        assert result.fpart_dominates

    def test_part_sizes(self):
        """Test :func:`sunit_bounds.evertse_pipeline.part_sizes` definition."""

        breakdown = assemble_bound(CHOICES["I"].params)

        for logA in (0, 1, 10, 1000):
            ln_fpart, ln_gpart = part_sizes(breakdown, logA)

            assert ln_fpart >= ln_gpart

        pytest.raises(DomainError, part_sizes, breakdown, -1)


class TestStep2N:
    """
    Define :func:`sunit_bounds.evertse_pipeline.step2_N` definition unit
    tests methods.
    """

    def test_step2_N(self):
        """Test :func:`sunit_bounds.evertse_pipeline.step2_N` definition."""

        step2 = step2_N("0.834", 1600, 20, "7.8")

        assert step2.N == 26
        assert all(value > 0 for value in step2[:4])
        assert step2_N("0.84", 100, 13, "7.5").N == 31

    def test_raise_exception_step2_N(self):
        """
        Test :func:`sunit_bounds.evertse_pipeline.step2_N` definition raised
        exception.
        """

        pytest.raises(NonPositiveCoefficient, step2_N, "0.834", 1600, 20, "1")


class TestAssembleBound:
    """
    Define :func:`sunit_bounds.evertse_pipeline.assemble_bound` definition unit
    tests methods.
    """

    def test_assemble_bound(self):
        """Test :func:`sunit_bounds.evertse_pipeline.assemble_bound` definition."""

        breakdown = assemble_bound(EvertseParams("0.834", 1600, 20, "7.8", 45))

        np.testing.assert_allclose(
            [float(x) for x in breakdown.coefficient_tuple],
            [3.06759, 44.9866, 3.36406, 45],
            atol=1e-4,
        )
        assert breakdown.N == 26
        np.testing.assert_allclose(
            float(mpmath.exp(breakdown.ln_bound)), 894.912, atol=1e-3
        )

        breakdown = assemble_bound(EvertseParams("0.84", 100, 13, "7.5", 47))

        np.testing.assert_allclose(
            [float(x) for x in breakdown.coefficient_tuple],
            [2.81864, 46.8312, 3.22803, 47],
            atol=1e-4,
        )
        assert breakdown.N == 31

    def test_evaluate_bound_log(self):
        """
        Test :func:`sunit_bounds.evertse_pipeline.evaluate_bound_log` definition
        against the direct evaluation of the bound.
        """

        breakdown = assemble_bound(CHOICES["II"].params)

        with working_precision():
            for m, s in ((1, 1), (3, 2), (10, 10)):
                direct = (
                    breakdown.coeff_small * breakdown.base_small**s
                    + 5 * breakdown.base_m**m * breakdown.base_s**s
                )

                assert mpmath.almosteq(
                    evaluate_bound_log(breakdown, m, s), mpmath.log(direct), 1e-25
                )

        pytest.raises(ValueError, evaluate_bound_log, breakdown, 0, 1)

    def test_raise_exception_assemble_bound(self):
        """
        Test :func:`sunit_bounds.evertse_pipeline.assemble_bound` definition
        raised exception.
        """

        pytest.raises(
            PreconditionViolation,
            assemble_bound,
            EvertseParams("0.834", 1600, 19, "7.8", 45),
        )
        pytest.raises(
            DomainError,
            assemble_bound,
            EvertseParams("0.834", 1600, 20, "7.8", 45),
            -1,
        )


class TestReferenceBounds:
    """
    Define :func:`sunit_bounds.evertse_pipeline.evertse_bound_log` and
    :func:`sunit_bounds.evertse_pipeline.theorem_bound_log` definitions unit
    tests methods.
    """

    def test_evertse_bound_log(self):
        """Test :func:`sunit_bounds.evertse_pipeline.evertse_bound_log` definition."""

        np.testing.assert_allclose(
            float(mpmath.exp(evertse_bound_log(1, 1))), 897.67, atol=1e-3
        )

    def test_theorem_bound_log(self):
        """Test :func:`sunit_bounds.evertse_pipeline.theorem_bound_log` definition."""

        np.testing.assert_allclose(
            float(mpmath.exp(theorem_bound_log(1, 1))), 904.5, atol=1e-9
        )
        np.testing.assert_allclose(
            float(mpmath.exp(theorem_bound_log(2, 1, "3", "2", "10"))),
            230,
            atol=1e-9,
        )


class TestDigitMatch:
    """
    Define :func:`sunit_bounds.evertse_pipeline.digit_match` definition unit
    tests methods.
    """

    def test_digit_match(self):
        """Test :func:`sunit_bounds.evertse_pipeline.digit_match` definition."""

        assert digit_match(mpmath.mpf("533.8141"), "533.814")
        assert digit_match(mpmath.mpf("44.98669"), "44.9866")
        assert not digit_match(mpmath.mpf("44.9868"), "44.9866")
        assert digit_match(26, "26")
        assert not digit_match(28, "26")


class TestReproduceChoice:
    """
    Define :func:`sunit_bounds.evertse_pipeline.reproduce_choice` definition
    unit tests methods.
    """

    def test_reproduce_choice(self):
        """Test :func:`sunit_bounds.evertse_pipeline.reproduce_choice` definition."""

        for name in ("I", "II"):
            report = reproduce_choice(name)

            assert report.choice == name
            assert report.passed, [
                match.name for match in report.matches if not match.matched
            ]

        names = [match.name for match in reproduce_choice("I").matches]

        assert {"coeff_small", "base_small", "base_m", "N", "min_k"} <= set(names)

    def test_raise_exception_reproduce_choice(self):
        """
        Test :func:`sunit_bounds.evertse_pipeline.reproduce_choice` definition
        raised exception.
        """

        pytest.raises(ValueError, reproduce_choice, "III")
