"""
Common Utilities
================

Defines the common utilities objects that don't fall in any specific category:

-   :attr:`sunit_bounds.PRECISION_DIGITS`
-   :func:`sunit_bounds.working_precision`
-   :func:`sunit_bounds.as_mpf`
-   :func:`sunit_bounds.format_rational`
-   :func:`sunit_bounds.format_real`
-   :func:`sunit_bounds.to_serialisable`
-   :class:`sunit_bounds.SUnitBoundsError` and its sub-classes.
"""

from __future__ import annotations

import dataclasses
import os
from contextlib import contextmanager
from fractions import Fraction

import mpmath
from colour.hints import Any, Generator
from colour.utilities import optional, usage_warning

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "ENVIRONMENT_VARIABLE_PRECISION_DIGITS",
    "DEFAULT_PRECISION_DIGITS",
    "MINIMUM_PRECISION_DIGITS",
    "PRECISION_DIGITS",
    "TOLERANCE_ROUNDING_CUSHION",
    "TOLERANCE_MAHLER",
    "SIGNIFICANT_DIGITS_SERIALISATION",
    "DEFAULT_SEED",
    "SUnitBoundsError",
    "NonZeroRemainder",
    "NonNilpotentInner",
    "UnknownCoefficient",
    "IdentityViolation",
    "BoundViolation",
    "ComparisonFailure",
    "RootFindingFailure",
    "RangeViolation",
    "DomainError",
    "PreconditionViolation",
    "NonPositiveCoefficient",
    "DominanceUnverified",
    "EmptyFeasibleSet",
    "working_precision",
    "as_mpf",
    "format_rational",
    "format_real",
    "to_serialisable",
]

ENVIRONMENT_VARIABLE_PRECISION_DIGITS: str = "SUNIT_PRECISION_DIGITS"
"""Environment variable overriding the pipeline precision."""

DEFAULT_PRECISION_DIGITS: int = 40
"""Pipeline precision in significant decimal digits when none is configured."""

MINIMUM_PRECISION_DIGITS: int = 30
"""Lowest accepted pipeline precision in significant decimal digits."""


def _precision_digits_from_environment() -> int:
    """
    Return the pipeline precision from the environment, clamped to
    :attr:`sunit_bounds.common.MINIMUM_PRECISION_DIGITS`.

    Returns
    -------
    :class:`int`
        Significant decimal digits.
    """

    value = os.environ.get(
        ENVIRONMENT_VARIABLE_PRECISION_DIGITS, str(DEFAULT_PRECISION_DIGITS)
    )

    try:
        digits = int(value)
    except ValueError:
        usage_warning(
            f'"{ENVIRONMENT_VARIABLE_PRECISION_DIGITS}" value "{value}" is not an '
            f"integer, using {DEFAULT_PRECISION_DIGITS} digits instead!"
        )

        return DEFAULT_PRECISION_DIGITS

    if digits < MINIMUM_PRECISION_DIGITS:
        usage_warning(
            f'"{ENVIRONMENT_VARIABLE_PRECISION_DIGITS}" requested {digits} '
            f"digits, using {MINIMUM_PRECISION_DIGITS} instead!"
        )
        digits = MINIMUM_PRECISION_DIGITS

    return digits


PRECISION_DIGITS: int = _precision_digits_from_environment()
"""Significant decimal digits used by the bound pipeline."""

TOLERANCE_ROUNDING_CUSHION: float = 1e-9
"""Relative cushion applied on the bound side of floating-point checks."""

TOLERANCE_MAHLER: float = 1e-8
"""Relative tolerance targeted by the numeric *Mahler* measure."""

SIGNIFICANT_DIGITS_SERIALISATION: int = 20
"""Significant digits used when serialising reals."""

DEFAULT_SEED: int = 42
"""Default seed of the pseudo-random samplers."""


class SUnitBoundsError(Exception):
    """Define the base class of *S-Unit - Bounds* errors."""


class NonZeroRemainder(SUnitBoundsError, ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class NonNilpotentInner(SUnitBoundsError, ArithmeticError):
    """Raised when composing a series with a polynomial with constant term."""


class UnknownCoefficient(SUnitBoundsError, ArithmeticError):
    """Raised when a series coefficient beyond its valid order is requested."""


class IdentityViolation(SUnitBoundsError, RuntimeError):
    """Raised when a structural polynomial identity does not hold."""


class BoundViolation(SUnitBoundsError, RuntimeError):
    """
    Raised when an inequality fails, the :attr:`witness` attribute stores the
    failing point.
    """

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)

        self.witness = witness


class ComparisonFailure(BoundViolation):
    """Raised when a bound comparison fails at a given :math:`(m, s)` cell."""


class RootFindingFailure(SUnitBoundsError, RuntimeError):
    """Raised when the numeric root finder does not converge."""


class RangeViolation(SUnitBoundsError, ValueError):
    """Raised when an index lies outside the range of an identity."""


class DomainError(SUnitBoundsError, ValueError):
    """Raised when a real argument lies outside a formula domain."""


class PreconditionViolation(SUnitBoundsError, ValueError):
    """Raised when the parameter constraints of the height lemma fail."""


class NonPositiveCoefficient(SUnitBoundsError, ValueError):
    """Raised when one of the :math:`a, b, c, d` coefficients is not positive."""


class DominanceUnverified(SUnitBoundsError, ValueError):
    """Raised when the *f-part* is not provably the maximum for all A >= 1."""


class EmptyFeasibleSet(SUnitBoundsError, ValueError):
    """Raised when no grid candidate satisfies the parameter constraints."""


@contextmanager
def working_precision(digits: int | None = None) -> Generator:
    """
    Define a context manager setting the :mod:`mpmath` working precision.

    Parameters
    ----------
    digits
        Significant decimal digits, default to
        :attr:`sunit_bounds.PRECISION_DIGITS`.

    Examples
    --------
    >>> with working_precision(50):
    ...     mpmath.mp.dps
    50
    """

    with mpmath.workdps(optional(digits, PRECISION_DIGITS)):
        yield


def as_mpf(value: Any) -> mpmath.mpf:
    """
    Convert given value to an :class:`mpmath.mpf` at the current precision.

    Strings are parsed as decimals so that ``"0.834"`` is not routed through a
    binary float, :class:`fractions.Fraction` instances are divided exactly.

    Parameters
    ----------
    value
        Value to convert.

    Returns
    -------
    :class:`mpmath.mpf`
        Converted value.

    Examples
    --------
    >>> with working_precision(30):
    ...     print(as_mpf(Fraction(1, 4)))
    0.25
    """

    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator

    if isinstance(value, mpmath.mpf):
        return +value

    return mpmath.mpf(value if not isinstance(value, str) else value.strip())


def format_rational(value: Fraction | int) -> str:
    """
    Serialise given rational as a lossless ``"p/q"`` string.

    Examples
    --------
    >>> format_rational(Fraction(-2, 6))
    '-1/3'
    >>> format_rational(Fraction(4, 2))
    '2'
    """

    return str(Fraction(value))


def format_real(value: Any, digits: int | None = None) -> str:
    """
    Serialise given real with
    :attr:`sunit_bounds.SIGNIFICANT_DIGITS_SERIALISATION` significant digits.

    Examples
    --------
    >>> format_real(mpmath.mpf(1) / 4)
    '0.25'
    """

    return mpmath.nstr(
        value,
        optional(digits, SIGNIFICANT_DIGITS_SERIALISATION),
        strip_zeros=True,
    )


def to_serialisable(value: Any) -> Any:
    """
    Convert given value to a *JSON* compatible structure.

    Dataclasses become mappings of their fields, rationals lossless ``"p/q"``
    strings and :class:`mpmath.mpf` reals strings with
    :attr:`sunit_bounds.SIGNIFICANT_DIGITS_SERIALISATION` significant digits.

    Examples
    --------
    >>> to_serialisable({"B": Fraction(417, 500), "n": (1, 2)})
    {'B': '417/500', 'n': [1, 2]}
    """

    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {
            field.name: to_serialisable(getattr(value, field.name))
            for field in dataclasses.fields(value)
        }

    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value

    if isinstance(value, Fraction):
        return format_rational(value)

    if isinstance(value, (mpmath.mpf, float)):
        return format_real(value)

    if isinstance(value, dict):
        return {str(key): to_serialisable(item) for key, item in value.items()}

    if isinstance(value, (list, tuple)):
        return [to_serialisable(item) for item in value]

    if isinstance(value, complex):
        return [format_real(value.real), format_real(value.imag)]

    if hasattr(value, "coefficients"):
        return [format_rational(c) for c in value.coefficients]

    return str(value)
