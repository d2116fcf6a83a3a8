"""
Exact Arithmetic
================

Defines the exact rational scalar and the combinatorial primitives every
*Padé* formula consumes:

-   :attr:`sunit_bounds.ExactRational`
-   :func:`sunit_bounds.as_rational`
-   :func:`sunit_bounds.factorial`
-   :func:`sunit_bounds.falling_factorial`
-   :func:`sunit_bounds.pochhammer`
-   :func:`sunit_bounds.gen_binomial`
-   :func:`sunit_bounds.hypergeometric_coefficient`

Rationals are :class:`fractions.Fraction` instances: they are canonicalised at
every operation, i.e. stored in lowest terms with a positive denominator, and
are backed by arbitrary-precision integers.
"""

from __future__ import annotations

import math
from fractions import Fraction

from colour.hints import Any

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "ExactRational",
    "ONE_THIRD",
    "as_rational",
    "factorial",
    "falling_factorial",
    "pochhammer",
    "gen_binomial",
    "hypergeometric_coefficient",
]

ExactRational = Fraction
"""Arbitrary-precision signed rational, the scalar of all symbolic work."""

ONE_THIRD: ExactRational = Fraction(1, 3)
"""Exponent of the cubic binomial function."""


def as_rational(value: Any) -> ExactRational:
    """
    Convert given value to an exact rational.

    Strings such as ``"-1/3"`` or ``"0.834"`` are parsed exactly, floats are
    rejected as they would silently carry a binary rounding error.

    Parameters
    ----------
    value
        Value to convert.

    Returns
    -------
    :class:`fractions.Fraction`
        Exact rational.

    Raises
    ------
    TypeError
        If given a float.

    Examples
    --------
    >>> as_rational("-1/3")
    Fraction(-1, 3)
    >>> as_rational("0.834")
    Fraction(417, 500)
    """

    if isinstance(value, float):
        raise TypeError(
            f'"{value}" is a float, please use an exact "int", "str" or '
            f'"Fraction" value!'
        )

    return Fraction(value)


def factorial(k: int) -> int:
    """
    Return the exact factorial :math:`k!`.

    Examples
    --------
    >>> factorial(20)
    2432902008176640000
    """

    return math.factorial(k)


def falling_factorial(top: ExactRational | int, k: int) -> ExactRational:
    """
    Return the falling factorial :math:`t(t-1)\\cdots(t-k+1)`.

    Parameters
    ----------
    top
        Rational :math:`t`.
    k
        Number of factors, :math:`k \\geq 0`.

    Returns
    -------
    :class:`fractions.Fraction`
        Exact product, 1 for :math:`k = 0`.

    Examples
    --------
    >>> falling_factorial(Fraction(-1, 3), 2)
    Fraction(4, 9)
    """

    if k < 0:
        raise ValueError(f'"k" must be a natural integer, got {k}!')

    top = Fraction(top)

    product = Fraction(1)
    for j in range(k):
        product *= top - j

    return product


def pochhammer(a: ExactRational | int, k: int) -> ExactRational:
    """
    Return the *Pochhammer* symbol, i.e. the rising factorial
    :math:`(a)_k = a(a+1)\\cdots(a+k-1)`.

    Parameters
    ----------
    a
        Rational :math:`a`.
    k
        Number of factors, :math:`k \\geq 0`.

    Returns
    -------
    :class:`fractions.Fraction`
        Exact product, 1 for :math:`k = 0`.

    Examples
    --------
    >>> pochhammer(Fraction(4, 3), 2)
    Fraction(28, 9)
    >>> pochhammer(Fraction(-1, 3), 0)
    Fraction(1, 1)
    """

    if k < 0:
        raise ValueError(f'"k" must be a natural integer, got {k}!')

    a = Fraction(a)

    product = Fraction(1)
    for j in range(k):
        product *= a + j

    return product


def gen_binomial(top: ExactRational | int, k: int) -> ExactRational:
    """
    Return the generalised binomial coefficient
    :math:`\\binom{t}{k} = t(t-1)\\cdots(t-k+1)/k!` for a rational top.

    Parameters
    ----------
    top
        Rational :math:`t`, negative integers are allowed.
    k
        Lower index, :math:`k \\geq 0`.

    Returns
    -------
    :class:`fractions.Fraction`
        Exact coefficient.

    Examples
    --------
    >>> gen_binomial(Fraction(-1, 3), 2)
    Fraction(2, 9)
    >>> gen_binomial(Fraction(4, 3), 0)
    Fraction(1, 1)
    >>> gen_binomial(-1, 3)
    Fraction(-1, 1)
    """

    return falling_factorial(top, k) / factorial(k)


def hypergeometric_coefficient(
    a: ExactRational | int,
    b: ExactRational | int,
    c: ExactRational | int,
    k: int,
) -> ExactRational:
    """
    Return the :math:`k`-th coefficient :math:`(a)_k(b)_k/((c)_k k!)` of
    *Gauss* hypergeometric function :math:`{}_2F_1(a, b; c; z)`.

    Parameters
    ----------
    a, b
        Upper rational parameters.
    c
        Lower rational parameter, not a non-positive integer.
    k
        Coefficient index.

    Returns
    -------
    :class:`fractions.Fraction`
        Exact coefficient.

    Raises
    ------
    ZeroDivisionError
        If :math:`(c)_k` vanishes.

    Examples
    --------
    >>> hypergeometric_coefficient(2, Fraction(2, 3), 3, 1)
    Fraction(4, 9)
    """

    return pochhammer(a, k) * pochhammer(b, k) / (pochhammer(c, k) * factorial(k))
