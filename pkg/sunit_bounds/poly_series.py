"""
Polynomials and Truncated Series
================================

Defines the dense univariate polynomial and truncated power / *Laurent* series
objects over exact rationals:

-   :attr:`sunit_bounds.POLYNOMIAL_RING`
-   :class:`sunit_bounds.RationalPolynomial`
-   :class:`sunit_bounds.TruncatedSeries`
-   :func:`sunit_bounds.poly_add`
-   :func:`sunit_bounds.poly_sub`
-   :func:`sunit_bounds.poly_mul`
-   :func:`sunit_bounds.poly_scale`
-   :func:`sunit_bounds.poly_eval`
-   :func:`sunit_bounds.poly_compose`
-   :func:`sunit_bounds.poly_divmod`
-   :func:`sunit_bounds.poly_divide_exact`
-   :func:`sunit_bounds.guard_order`
-   :func:`sunit_bounds.series_binomial`
-   :func:`sunit_bounds.series_binomial_third`
-   :func:`sunit_bounds.series_compose`

The arithmetic is carried by the :math:`\\mathbb{Q}[T]` ring elements of
:mod:`sympy.polys.rings` and the truncated operations of
:mod:`sympy.polys.ring_series`, the objects below own the coefficient
bookkeeping as :class:`fractions.Fraction` instances.

A *Laurent* series in :math:`1/z` is stored as a series in :math:`w = 1/z`
whose lowest exponent may be negative.
"""

from __future__ import annotations

import math
from fractions import Fraction

from colour.hints import Any, Iterable, List, Literal, Tuple
from colour.utilities import optional, validate_method
from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_mul, rs_pow, rs_series_from_list
from sympy.polys.rings import PolyElement, PolyRing, ring

from sunit_bounds.common import NonNilpotentInner, NonZeroRemainder, UnknownCoefficient
from sunit_bounds.exact_arith import (
    ONE_THIRD,
    ExactRational,
    as_rational,
)

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "DEGREE_ZERO_POLYNOMIAL",
    "POLYNOMIAL_RING",
    "RationalPolynomial",
    "TruncatedSeries",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_scale",
    "poly_eval",
    "poly_compose",
    "poly_divmod",
    "poly_divide_exact",
    "guard_order",
    "series_binomial",
    "series_binomial_third",
    "series_compose",
]

DEGREE_ZERO_POLYNOMIAL: float = -math.inf
"""Degree reported for the zero polynomial."""

POLYNOMIAL_RING: PolyRing = ring("T", QQ)[0]
"""Univariate polynomial ring :math:`\\mathbb{Q}[T]` backing the arithmetic."""


def _trim(coefficients: list) -> list:
    """Remove the trailing zero coefficients of given list in place."""

    while coefficients and coefficients[-1] == 0:
        coefficients.pop()

    return coefficients


def _to_element(coefficients: Iterable[ExactRational]) -> PolyElement:
    """Convert ascending coefficients to a :math:`\\mathbb{Q}[T]` element."""

    return POLYNOMIAL_RING.from_dict(
        {
            (i,): QQ(coefficient.numerator, coefficient.denominator)
            for i, coefficient in enumerate(coefficients)
            if coefficient != 0
        }
    )


def _from_element(element: PolyElement, length: int | None = None) -> List[Fraction]:
    """
    Convert a :math:`\\mathbb{Q}[T]` element to ascending coefficients, padded
    or truncated to given length.
    """

    terms = {
        exponent: Fraction(int(QQ.numer(value)), int(QQ.denom(value)))
        for (exponent,), value in element.items()
    }

    length = optional(length, max(terms, default=-1) + 1)

    return [terms.get(i, Fraction(0)) for i in range(length)]


class RationalPolynomial:
    """
    Define a dense univariate polynomial with exact rational coefficients.

    Parameters
    ----------
    coefficients
        Coefficients indexed by ascending degree, trailing zeros are trimmed.

    Attributes
    ----------
    -   :attr:`~sunit_bounds.RationalPolynomial.coefficients`
    -   :attr:`~sunit_bounds.RationalPolynomial.leading_coefficient`

    Methods
    -------
    -   :meth:`~sunit_bounds.RationalPolynomial.__init__`
    -   :meth:`~sunit_bounds.RationalPolynomial.degree`
    -   :meth:`~sunit_bounds.RationalPolynomial.is_zero`
    -   :meth:`~sunit_bounds.RationalPolynomial.monomial`
    -   :meth:`~sunit_bounds.RationalPolynomial.reverse`
    -   :meth:`~sunit_bounds.RationalPolynomial.substitute_power`
    -   :meth:`~sunit_bounds.RationalPolynomial.to_element`
    -   :meth:`~sunit_bounds.RationalPolynomial.from_element`

    Examples
    --------
    >>> p = RationalPolynomial([Fraction(1, 3), 1])
    >>> p
    RationalPolynomial(['1/3', '1'])
    >>> p.degree()
    1
    >>> p(0)
    Fraction(1, 3)
    >>> RationalPolynomial([1, -1]) ** 2
    RationalPolynomial(['1', '-2', '1'])
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[Any] = ()):
        self._coefficients: Tuple[ExactRational, ...] = tuple(
            _trim([as_rational(coefficient) for coefficient in coefficients])
        )

    @property
    def coefficients(self) -> Tuple[ExactRational, ...]:
        """
        Getter property for the coefficients, indexed by ascending degree.

        Returns
        -------
        :class:`tuple`
            Polynomial coefficients.
        """

        return self._coefficients

    @property
    def leading_coefficient(self) -> ExactRational:
        """
        Getter property for the leading coefficient, 0 for the zero polynomial.

        Returns
        -------
        :class:`fractions.Fraction`
            Leading coefficient.
        """

        return self._coefficients[-1] if self._coefficients else Fraction(0)

    def degree(self) -> int | float:
        """
        Return the degree, i.e. the index of the last non-zero coefficient or
        :attr:`sunit_bounds.poly_series.DEGREE_ZERO_POLYNOMIAL`.

        Returns
        -------
        :class:`int` or :class:`float`
            Polynomial degree.
        """

        if not self._coefficients:
            return DEGREE_ZERO_POLYNOMIAL

        return len(self._coefficients) - 1

    def is_zero(self) -> bool:
        """Return whether the polynomial is the zero polynomial."""

        return not self._coefficients

    @classmethod
    def monomial(cls, coefficient: Any, degree: int) -> RationalPolynomial:
        """
        Return the monomial :math:`c z^d`.

        Examples
        --------
        >>> RationalPolynomial.monomial(2, 3)
        RationalPolynomial(['0', '0', '0', '2'])
        """

        return cls([0] * degree + [coefficient])

    def reverse(self, length: int) -> RationalPolynomial:
        """
        Return :math:`z^{L-1}P(1/z)` where :math:`L` is given length, i.e. the
        coefficient list padded to :math:`L` and reversed.

        Parameters
        ----------
        length
            Length :math:`L`, at least the coefficient count.

        Examples
        --------
        >>> RationalPolynomial([Fraction(1, 3), 1]).reverse(2)
        RationalPolynomial(['1', '1/3'])
        """

        if length < len(self._coefficients):
            raise ValueError(
                f"Cannot reverse a polynomial with {len(self._coefficients)} "
                f"coefficients in a length of {length}!"
            )

        padded = list(self._coefficients) + [Fraction(0)] * (
            length - len(self._coefficients)
        )

        return RationalPolynomial(reversed(padded))

    def substitute_power(self, exponent: int) -> RationalPolynomial:
        """
        Return :math:`P(z^e)`.

        Examples
        --------
        >>> RationalPolynomial([1, 2]).substitute_power(3)
        RationalPolynomial(['1', '0', '0', '2'])
        """

        coefficients = [Fraction(0)] * (
            (len(self._coefficients) - 1) * exponent + 1 if self._coefficients else 0
        )
        for i, coefficient in enumerate(self._coefficients):
            coefficients[i * exponent] = coefficient

        return RationalPolynomial(coefficients)

    def to_element(self) -> PolyElement:
        """
        Return the polynomial as an element of
        :attr:`sunit_bounds.POLYNOMIAL_RING`.

        Examples
        --------
        >>> RationalPolynomial([Fraction(1, 3), 1]).to_element()
        T + 1/3
        """

        return _to_element(self._coefficients)

    @classmethod
    def from_element(cls, element: PolyElement) -> RationalPolynomial:
        """
        Return a polynomial from an element of
        :attr:`sunit_bounds.POLYNOMIAL_RING`.
        """

        return cls(_from_element(element))

    def __call__(self, x: Any) -> Any:
        """Evaluate the polynomial at given point with *Horner* scheme."""

        return poly_eval(self, x)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPolynomial):
            return self._coefficients == other._coefficients

        if isinstance(other, (int, Fraction)):
            return self._coefficients == RationalPolynomial([other])._coefficients

        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self._coefficients]})"

    def __str__(self) -> str:
        if not self._coefficients:
            return "0"

        terms = []
        for i, coefficient in enumerate(self._coefficients):
            if coefficient == 0:
                continue

            if i == 0:
                terms.append(f"{coefficient}")
            elif i == 1:
                terms.append(f"({coefficient})*z")
            else:
                terms.append(f"({coefficient})*z^{i}")

        return " + ".join(terms)

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-c for c in self._coefficients)

    def __add__(self, other: Any) -> RationalPolynomial:
        return poly_add(self, _as_polynomial(other))

    __radd__ = __add__

    def __sub__(self, other: Any) -> RationalPolynomial:
        return poly_sub(self, _as_polynomial(other))

    def __rsub__(self, other: Any) -> RationalPolynomial:
        return poly_sub(_as_polynomial(other), self)

    def __mul__(self, other: Any) -> RationalPolynomial:
        if isinstance(other, RationalPolynomial):
            return poly_mul(self, other)

        return poly_scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RationalPolynomial:
        if exponent < 0:
            raise ValueError("Polynomials only support natural powers!")

        return RationalPolynomial(_from_element(self.to_element() ** exponent))


def _as_polynomial(value: Any) -> RationalPolynomial:
    """Promote a scalar to a constant polynomial."""

    if isinstance(value, RationalPolynomial):
        return value

    return RationalPolynomial([value])


def poly_add(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    """
    Add given polynomials.

    Examples
    --------
    >>> poly_add(RationalPolynomial([1, 1]), RationalPolynomial([0, -1]))
    RationalPolynomial(['1'])
    """

    return RationalPolynomial.from_element(a.to_element() + b.to_element())


def poly_sub(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    """Subtract polynomial :math:`b` from polynomial :math:`a`."""

    return RationalPolynomial.from_element(a.to_element() - b.to_element())


def poly_mul(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    """
    Multiply given polynomials.

    Examples
    --------
    >>> poly_mul(RationalPolynomial([Fraction(1, 3), 1]), RationalPolynomial([1]))
    RationalPolynomial(['1/3', '1'])
    """

    return RationalPolynomial.from_element(a.to_element() * b.to_element())


def poly_scale(p: RationalPolynomial, scalar: Any) -> RationalPolynomial:
    """Multiply given polynomial by an exact scalar."""

    scalar = as_rational(scalar)

    return RationalPolynomial.from_element(
        p.to_element() * QQ(scalar.numerator, scalar.denominator)
    )


def poly_eval(p: RationalPolynomial, x: Any) -> Any:
    """
    Evaluate given polynomial at :math:`x` with *Horner* scheme.

    Exact rationals give exact results, other numeric types (``complex``,
    :class:`mpmath.mpc`) are evaluated in their own arithmetic.

    Examples
    --------
    >>> poly_eval(RationalPolynomial([Fraction(1, 3), 1]), 0)
    Fraction(1, 3)
    """

    if isinstance(x, int):
        x = Fraction(x)

    result = Fraction(0) if isinstance(x, Fraction) else 0
    for coefficient in reversed(p.coefficients):
        result = result * x + (
            coefficient if isinstance(x, Fraction) else _as_numeric(coefficient, x)
        )

    return result


def _as_numeric(coefficient: ExactRational, x: Any) -> Any:
    """Convert an exact coefficient to the arithmetic of :math:`x`."""

    if isinstance(x, (float, complex)):
        return coefficient.numerator / coefficient.denominator

    return type(x)(coefficient.numerator) / coefficient.denominator


def poly_compose(
    outer: RationalPolynomial, inner: RationalPolynomial
) -> RationalPolynomial:
    """
    Return the composition :math:`P(Q(z))`.

    Examples
    --------
    >>> poly_compose(RationalPolynomial([0, 0, 1]), RationalPolynomial([1, -1]))
    RationalPolynomial(['1', '-2', '1'])
    """

    element = outer.to_element()

    return RationalPolynomial.from_element(
        element.compose(POLYNOMIAL_RING.gens[0], inner.to_element())
    )


def poly_divmod(
    num: RationalPolynomial, den: RationalPolynomial
) -> Tuple[RationalPolynomial, RationalPolynomial]:
    """
    Return the quotient and remainder of the euclidean division of given
    polynomials.

    Raises
    ------
    ZeroDivisionError
        If the denominator is the zero polynomial.

    Examples
    --------
    >>> poly_divmod(RationalPolynomial([1, 0, 1]), RationalPolynomial([-1, 1]))
    (RationalPolynomial(['1', '1']), RationalPolynomial(['2']))
    """

    if den.is_zero():
        raise ZeroDivisionError("Polynomial division by the zero polynomial!")

    quotient, remainder = num.to_element().div(den.to_element())

    return (
        RationalPolynomial.from_element(quotient),
        RationalPolynomial.from_element(remainder),
    )


def poly_divide_exact(
    num: RationalPolynomial, den: RationalPolynomial
) -> RationalPolynomial:
    """
    Return the exact quotient of given polynomials.

    Parameters
    ----------
    num
        Numerator polynomial.
    den
        Non-zero denominator polynomial.

    Returns
    -------
    :class:`sunit_bounds.RationalPolynomial`
        Quotient :math:`q` with :math:`num = q \\cdot den`.

    Raises
    ------
    NonZeroRemainder
        If the division is inexact.

    Examples
    --------
    >>> poly_divide_exact(RationalPolynomial([1, -2, 1]), RationalPolynomial([1, -1]))
    RationalPolynomial(['1', '-1'])
    """

    quotient, remainder = poly_divmod(num, den)

    if not remainder.is_zero():
        raise NonZeroRemainder(
            f'"{num}" is not divisible by "{den}", remainder is "{remainder}"!'
        )

    return quotient


def guard_order(n: int) -> int:
    """
    Return the default series order used by the identity verifications for
    approximation degree :math:`n`, i.e. :math:`4n + 16`.

    Examples
    --------
    >>> guard_order(1)
    20
    """

    return 4 * n + 16


class TruncatedSeries:
    """
    Define a power or *Laurent* series with exact rational coefficients known
    up to an explicit order.

    Parameters
    ----------
    coefficients
        Coefficients of the exponents ``lowest_exponent``,
        ``lowest_exponent + 1``, ... , padded with zeros up to ``order``.
    lowest_exponent
        Exponent of the first stored coefficient, may be negative.
    order
        Exponent from which the coefficients are unknown, default to the end of
        the given coefficients.

    Attributes
    ----------
    -   :attr:`~sunit_bounds.TruncatedSeries.coefficients`
    -   :attr:`~sunit_bounds.TruncatedSeries.lowest_exponent`
    -   :attr:`~sunit_bounds.TruncatedSeries.order`

    Methods
    -------
    -   :meth:`~sunit_bounds.TruncatedSeries.__init__`
    -   :meth:`~sunit_bounds.TruncatedSeries.from_polynomial`
    -   :meth:`~sunit_bounds.TruncatedSeries.coefficient`
    -   :meth:`~sunit_bounds.TruncatedSeries.valuation`
    -   :meth:`~sunit_bounds.TruncatedSeries.truncate`
    -   :meth:`~sunit_bounds.TruncatedSeries.to_polynomial`

    Examples
    --------
    >>> s = TruncatedSeries([1, 2], lowest_exponent=-1, order=3)
    >>> s.coefficients
    (Fraction(1, 1), Fraction(2, 1), Fraction(0, 1), Fraction(0, 1))
    >>> s.coefficient(-1)
    Fraction(1, 1)
    """

    __slots__ = ("_coefficients", "_lowest_exponent", "_order")

    def __init__(
        self,
        coefficients: Iterable[Any],
        lowest_exponent: int = 0,
        order: int | None = None,
    ):
        coefficients = [as_rational(coefficient) for coefficient in coefficients]
        order = optional(order, lowest_exponent + len(coefficients))

        if order < lowest_exponent:
            raise ValueError(
                f'"order" {order} is lower than "lowest_exponent" {lowest_exponent}!'
            )

        size = order - lowest_exponent
        coefficients = coefficients[:size] + [Fraction(0)] * (size - len(coefficients))

        self._coefficients: Tuple[ExactRational, ...] = tuple(coefficients)
        self._lowest_exponent: int = lowest_exponent
        self._order: int = order

    @property
    def coefficients(self) -> Tuple[ExactRational, ...]:
        """
        Getter property for the coefficients of the exponents in
        ``[lowest_exponent, order)``.

        Returns
        -------
        :class:`tuple`
            Series coefficients.
        """

        return self._coefficients

    @property
    def lowest_exponent(self) -> int:
        """
        Getter property for the exponent of the first stored coefficient.

        Returns
        -------
        :class:`int`
            Lowest stored exponent.
        """

        return self._lowest_exponent

    @property
    def order(self) -> int:
        """
        Getter property for the exponent from which coefficients are unknown.

        Returns
        -------
        :class:`int`
            Series order.
        """

        return self._order

    @classmethod
    def from_polynomial(
        cls,
        p: RationalPolynomial,
        order: int,
        reciprocal: bool = False,
    ) -> TruncatedSeries:
        """
        Return given polynomial as a truncated series.

        Parameters
        ----------
        p
            Polynomial in :math:`z`.
        order
            Order of the returned series.
        reciprocal
            Whether to expand in :math:`w = 1/z`, i.e. :math:`p(z)` becomes a
            *Laurent* polynomial in :math:`w` with lowest exponent
            :math:`-\\deg p`.

        Examples
        --------
        >>> TruncatedSeries.from_polynomial(
        ...     RationalPolynomial([Fraction(1, 3), 1]), 2, reciprocal=True
        ... ).coefficients
        (Fraction(1, 1), Fraction(1, 3), Fraction(0, 1))
        """

        if p.is_zero():
            return cls([], 0, order)

        if reciprocal:
            return cls(reversed(p.coefficients), -len(p.coefficients) + 1, order)

        return cls(p.coefficients, 0, order)

    def coefficient(self, exponent: int) -> ExactRational:
        """
        Return the coefficient of given exponent.

        Raises
        ------
        UnknownCoefficient
            If the exponent is at or beyond the series order.
        """

        if exponent >= self._order:
            raise UnknownCoefficient(
                f"Coefficient of exponent {exponent} is unknown, the series is "
                f"only valid up to exponent {self._order - 1}!"
            )

        if exponent < self._lowest_exponent:
            return Fraction(0)

        return self._coefficients[exponent - self._lowest_exponent]

    def valuation(self) -> int | None:
        """
        Return the lowest exponent with a non-zero known coefficient, *None*
        if all the known coefficients vanish.
        """

        for i, coefficient in enumerate(self._coefficients):
            if coefficient != 0:
                return self._lowest_exponent + i

        return None

    def truncate(self, order: int) -> TruncatedSeries:
        """
        Return the series truncated to given order, the order is never raised.
        """

        order = min(order, self._order)

        return TruncatedSeries(
            self._coefficients[: max(order - self._lowest_exponent, 0)],
            min(self._lowest_exponent, order),
            order,
        )

    def to_polynomial(self) -> RationalPolynomial:
        """
        Return the known part of a power series as a polynomial.

        Raises
        ------
        ValueError
            If the series has a negative lowest exponent with a non-zero
            coefficient.
        """

        valuation = self.valuation()
        if valuation is not None and valuation < 0:
            raise ValueError("Cannot convert a Laurent series to a polynomial!")

        return RationalPolynomial(self.coefficient(e) for e in range(self._order))

    def _binary(self, other: TruncatedSeries, sign: int) -> TruncatedSeries:
        lowest = min(self._lowest_exponent, other._lowest_exponent)
        order = min(self._order, other._order)

        return TruncatedSeries(
            [
                self._coefficient_or_zero(e) + sign * other._coefficient_or_zero(e)
                for e in range(lowest, order)
            ],
            min(lowest, order),
            order,
        )

    def _coefficient_or_zero(self, exponent: int) -> ExactRational:
        if exponent < self._lowest_exponent or exponent >= self._order:
            return Fraction(0)

        return self._coefficients[exponent - self._lowest_exponent]

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self._binary(other, 1)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self._binary(other, -1)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(
            (-c for c in self._coefficients), self._lowest_exponent, self._order
        )

    def __mul__(self, other: Any) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            scalar = as_rational(other)

            return TruncatedSeries(
                (scalar * c for c in self._coefficients),
                self._lowest_exponent,
                self._order,
            )

        lowest = self._lowest_exponent + other._lowest_exponent
        order = min(
            self._order + other._lowest_exponent,
            other._order + self._lowest_exponent,
        )

        # Coefficient lists are shifted to power series in T before the product.
        length = order - lowest
        product = rs_mul(
            _to_element(self._coefficients),
            _to_element(other._coefficients),
            POLYNOMIAL_RING.gens[0],
            max(length, 0),
        )

        return TruncatedSeries(_from_element(product, length), lowest, order)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented

        if self._order != other._order:
            return False

        lowest = min(self._lowest_exponent, other._lowest_exponent)

        return all(
            self._coefficient_or_zero(e) == other._coefficient_or_zero(e)
            for e in range(lowest, self._order)
        )

    def __hash__(self) -> int:
        valuation = self.valuation()

        return hash(
            (
                self._order,
                valuation,
                self._coefficients[valuation - self._lowest_exponent :]
                if valuation is not None
                else (),
            )
        )

    def __repr__(self) -> str:
        return (
            f"TruncatedSeries({[str(c) for c in self._coefficients]}, "
            f"lowest_exponent={self._lowest_exponent}, order={self._order})"
        )


def series_binomial(exponent: Any, order: int) -> TruncatedSeries:
    """
    Return the truncated binomial series of :math:`(1 - z)^e`, i.e. the
    coefficients :math:`(-1)^k \\binom{e}{k}`.

    Parameters
    ----------
    exponent
        Rational exponent :math:`e`.
    order
        Series order, :math:`order \\geq 1`.

    Examples
    --------
    >>> series_binomial(Fraction(1, 2), 3).coefficients
    (Fraction(1, 1), Fraction(-1, 2), Fraction(-1, 8))
    """

    if order < 1:
        raise ValueError(f'"order" must be at least 1, got {order}!')

    exponent = as_rational(exponent)
    generator = POLYNOMIAL_RING.gens[0]

    series = rs_pow(
        1 - generator,
        Rational(exponent.numerator, exponent.denominator),
        generator,
        order,
    )

    return TruncatedSeries(_from_element(series, order), 0, order)


def series_binomial_third(
    sign_variable: Literal["one_minus_z"] | str = "one_minus_z",
    order: int = 16,
) -> TruncatedSeries:
    """
    Return the truncated series of the cubic binomial function
    :math:`g(z) = (1 - z)^{1/3}`.

    Parameters
    ----------
    sign_variable
        Variable of the binomial, only :math:`1 - z` is supported.
    order
        Series order, :math:`order \\geq 1`.

    Examples
    --------
    >>> series_binomial_third(order=4).coefficients
    (Fraction(1, 1), Fraction(-1, 3), Fraction(-1, 9), Fraction(-5, 81))
    """

    validate_method(
        sign_variable,
        ("one_minus_z",),
        '"{0}" sign variable is invalid, it must be one of {1}!',
    )

    return series_binomial(ONE_THIRD, order)


def series_compose(
    outer: TruncatedSeries, inner: RationalPolynomial
) -> TruncatedSeries:
    """
    Return the composition of a truncated power series with a polynomial
    without constant term, i.e. the substitution :math:`z = Q(T)`.

    Parameters
    ----------
    outer
        Power series in :math:`z` with a non-negative lowest exponent.
    inner
        Polynomial :math:`Q(T)` with :math:`Q(0) = 0`.

    Returns
    -------
    :class:`sunit_bounds.TruncatedSeries`
        Composed series, valid up to the order of the outer series.

    Raises
    ------
    NonNilpotentInner
        If :math:`Q(0) \\neq 0`.

    Examples
    --------
    >>> g = series_binomial_third(order=8)
    >>> series_compose(g, RationalPolynomial([0, 3, -3, 1])).to_polynomial()
    RationalPolynomial(['1', '-1'])
    """

    if inner.coefficients and inner.coefficients[0] != 0:
        raise NonNilpotentInner(
            f'Inner polynomial "{inner}" has a non-zero constant term, the '
            f"composition does not converge T-adically!"
        )

    valuation = outer.valuation()
    if valuation is not None and valuation < 0:
        raise ValueError("Only power series can be composed with a polynomial!")

    order = outer.order
    if order <= 0:
        return TruncatedSeries([], min(order, 0), order)

    composed = rs_series_from_list(
        inner.to_element(),
        [
            POLYNOMIAL_RING.ground_new(
                QQ(coefficient.numerator, coefficient.denominator)
            )
            for coefficient in (outer.coefficient(e) for e in range(order))
        ],
        POLYNOMIAL_RING.gens[0],
        order,
    )

    return TruncatedSeries(_from_element(composed, order), 0, order)
