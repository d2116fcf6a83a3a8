"""
Padé Approximants
=================

Defines the *Padé* approximants of the cubic binomial function and the exact
verification of their identities:

-   :class:`sunit_bounds.PadePair`
-   :func:`sunit_bounds.build`
-   :attr:`sunit_bounds.METHODS_REMAINDER_SERIES`
-   :func:`sunit_bounds.remainder_series`
-   :func:`sunit_bounds.verify_remainder_forms`
-   :func:`sunit_bounds.verify_order_condition`
-   :func:`sunit_bounds.verify_combinatorial_identity`
-   :func:`sunit_bounds.wronskian_constant`
-   :func:`sunit_bounds.verify_wronskian`
-   :func:`sunit_bounds.verify_determinant_nonvanishing`
-   :func:`sunit_bounds.verify_cubic_substitution`
-   :func:`sunit_bounds.verify_divisibility`
-   :func:`sunit_bounds.scaling_exponent`
-   :func:`sunit_bounds.integral_scaling`

The approximated function is :math:`f(z) = z^{-1}(1 - 1/z)^{1/3}` and the
remainder is :math:`R_n = P_{n,0}f - P_{n,1}`. The polynomials :math:`A_n` and
:math:`B_n` are stored in the variable :math:`u = 1 - z`, i.e. they satisfy
:math:`A_n(1 - z) = z^{n-1}P_{n,1}(1/z)` and :math:`B_n(1 - z) = z^nP_{n,0}(1/z)`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from colour.hints import Any, Literal, Tuple
from colour.utilities import CanonicalMapping, validate_method

from sunit_bounds.common import (
    DEFAULT_SEED,
    IdentityViolation,
    NonZeroRemainder,
    RangeViolation,
)
from sunit_bounds.exact_arith import (
    ONE_THIRD,
    ExactRational,
    as_rational,
    factorial,
    gen_binomial,
    hypergeometric_coefficient,
    pochhammer,
)
from sunit_bounds.poly_series import (
    DEGREE_ZERO_POLYNOMIAL,
    RationalPolynomial,
    TruncatedSeries,
    poly_compose,
    poly_divide_exact,
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
    "PadePair",
    "polynomial_P0",
    "polynomial_P1",
    "polynomial_A",
    "polynomial_B",
    "build",
    "remainder_series_sum",
    "remainder_series_hypergeometric",
    "METHODS_REMAINDER_SERIES",
    "remainder_series",
    "verify_remainder_forms",
    "verify_order_condition",
    "verify_combinatorial_identity",
    "wronskian_constant",
    "verify_wronskian",
    "verify_determinant_nonvanishing",
    "verify_cubic_substitution",
    "verify_divisibility",
    "scaling_exponent",
    "integral_scaling",
]

_ONE_MINUS_Z: RationalPolynomial = RationalPolynomial([1, -1])
_CUBIC_INNER: RationalPolynomial = RationalPolynomial([0, 3, -3, 1])


@dataclass(frozen=True)
class PadePair:
    """
    Define the *Padé* approximants of degree :math:`n` and their derived
    polynomials.

    Parameters
    ----------
    n
        Approximation degree.
    P0
        Polynomial :math:`P_{n,0}` of degree :math:`n`.
    P1
        Polynomial :math:`P_{n,1}` of degree :math:`n - 1`, zero for
        :math:`n = 0`.
    A
        Polynomial :math:`A_n` in the variable :math:`u = 1 - z`.
    B
        Polynomial :math:`B_n` in the variable :math:`u = 1 - z`.
    V
        Polynomial :math:`V_n(T) = A_n(T^3) - TB_n(T^3)`.
    W
        Polynomial :math:`W_n = V_n / (1 - T)^{2n}`.
    """

    n: int
    P0: RationalPolynomial
    P1: RationalPolynomial
    A: RationalPolynomial
    B: RationalPolynomial
    V: RationalPolynomial
    W: RationalPolynomial


def polynomial_P0(n: int) -> RationalPolynomial:
    """
    Return the polynomial :math:`P_{n,0}(z) = \\sum_{k=0}^n (-1)^{n-k}
    \\binom{n+k-1}{k}\\binom{n-4/3}{n-k} z^k`.

    Examples
    --------
    >>> polynomial_P0(1)
    RationalPolynomial(['1/3', '1'])
    """

    return RationalPolynomial(
        (-1) ** (n - k)
        * gen_binomial(n + k - 1, k)
        * gen_binomial(n - 1 - ONE_THIRD, n - k)
        for k in range(n + 1)
    )


def polynomial_P1(n: int) -> RationalPolynomial:
    """
    Return the polynomial :math:`P_{n,1}(z) = \\sum_{k=0}^{n-1}
    (-1)^{n-1-k}\\binom{n+k}{k}\\binom{n+1/3}{n-1-k} z^k`, zero for
    :math:`n = 0`.

    Examples
    --------
    >>> polynomial_P1(1)
    RationalPolynomial(['1'])
    >>> polynomial_P1(0).is_zero()
    True
    """

    return RationalPolynomial(
        (-1) ** (n - 1 - k)
        * gen_binomial(n + k, k)
        * gen_binomial(n + ONE_THIRD, n - 1 - k)
        for k in range(n)
    )


def polynomial_A(n: int) -> RationalPolynomial:
    """
    Return the closed form :math:`A_n(u) = \\sum_{\\ell=0}^{n-1}
    \\binom{n+1/3}{\\ell}\\binom{n-4/3}{n-1-\\ell} u^\\ell`.

    Examples
    --------
    >>> polynomial_A(2)
    RationalPolynomial(['2/3', '7/3'])
    """

    return RationalPolynomial(
        gen_binomial(n + ONE_THIRD, ell) * gen_binomial(n - 1 - ONE_THIRD, n - 1 - ell)
        for ell in range(n)
    )


def polynomial_B(n: int) -> RationalPolynomial:
    """
    Return the closed form :math:`B_n(u) = \\sum_{\\ell=0}^{n}
    \\binom{n-4/3}{\\ell}\\binom{n+1/3}{n-\\ell} u^\\ell`.

    Examples
    --------
    >>> polynomial_B(1)
    RationalPolynomial(['4/3', '-1/3'])
    """

    return RationalPolynomial(
        gen_binomial(n - 1 - ONE_THIRD, ell) * gen_binomial(n + ONE_THIRD, n - ell)
        for ell in range(n + 1)
    )


def _reflect(p: RationalPolynomial, length: int) -> RationalPolynomial:
    """
    Return :math:`Q` such that :math:`Q(1 - z) = z^{L-1}p(1/z)`, i.e.
    :math:`Q(u) = \\sum_k p_k (1 - u)^{L-1-k}`.
    """

    if not length:
        return RationalPolynomial()

    return poly_compose(p.reverse(length), _ONE_MINUS_Z)


@lru_cache(maxsize=128)
def build(n: int) -> PadePair:
    """
    Build the *Padé* approximants of degree :math:`n` and their derived
    polynomials.

    :math:`A_n` and :math:`B_n` are computed by transforming
    :math:`P_{n,1}, P_{n,0}` and cross-validated against their closed forms.

    Parameters
    ----------
    n
        Approximation degree, :math:`n \\geq 0`.

    Returns
    -------
    :class:`sunit_bounds.PadePair`
        Approximants.

    Raises
    ------
    IdentityViolation
        If any structural identity fails.

    Examples
    --------
    >>> pair = build(1)
    >>> pair.B
    RationalPolynomial(['4/3', '-1/3'])
    >>> pair.W
    RationalPolynomial(['1', '2/3', '1/3'])
    """

    if n < 0:
        raise ValueError(f'"n" must be a natural integer, got {n}!')

    P0, P1 = polynomial_P0(n), polynomial_P1(n)

    degree_P1 = n - 1 if n > 0 else DEGREE_ZERO_POLYNOMIAL
    if P0.degree() != n or P1.degree() != degree_P1:
        raise IdentityViolation(
            f"Approximants of degree {n} have degrees {P0.degree()} and "
            f"{P1.degree()}, expected {n} and {n - 1}!"
        )

    A, B = _reflect(P1, n), _reflect(P0, n + 1)

    if A != polynomial_A(n):
        raise IdentityViolation(
            f'"A_{n}" transformed from "P_{{{n},1}}" is "{A}" but its closed '
            f'form is "{polynomial_A(n)}"!'
        )

    if B != polynomial_B(n):
        raise IdentityViolation(
            f'"B_{n}" transformed from "P_{{{n},0}}" is "{B}" but its closed '
            f'form is "{polynomial_B(n)}"!'
        )

    V = A.substitute_power(3) - RationalPolynomial([0, 1]) * B.substitute_power(3)

    try:
        W = poly_divide_exact(V, _ONE_MINUS_Z ** (2 * n))
    except NonZeroRemainder as error:
        raise IdentityViolation(
            f'"V_{n}" is not divisible by "(1 - T)^{2 * n}"!'
        ) from error

    return PadePair(n, P0, P1, A, B, V, W)


def remainder_series_sum(n: int, extra_terms: int) -> TruncatedSeries:
    """
    Return the remainder :math:`R_n` in :math:`w = 1/z` from the sum
    :math:`\\sum_{k \\geq n}\\binom{k}{n}(-1/3)_k(4/3)_n/(n+k)!\\,w^{k+1}`.

    Examples
    --------
    >>> remainder_series_sum(1, 2).coefficients
    (Fraction(-2, 9), Fraction(-8, 81))
    """

    factor = pochhammer(1 + ONE_THIRD, n)

    return TruncatedSeries(
        [
            gen_binomial(k, n) * pochhammer(-ONE_THIRD, k) * factor / factorial(n + k)
            for k in range(n, n + extra_terms)
        ],
        n + 1,
        n + 1 + extra_terms,
    )


def remainder_series_hypergeometric(n: int, extra_terms: int) -> TruncatedSeries:
    """
    Return the remainder :math:`R_n` in :math:`w = 1/z` from its hypergeometric
    form :math:`(4/3)_n(-1/3)_n/(2n)!\\,w^{n+1}\\,
    {}_2F_1(n+1, n-1/3; 2n+1; w)`.

    Examples
    --------
    >>> remainder_series_hypergeometric(1, 2).coefficients
    (Fraction(-2, 9), Fraction(-8, 81))
    """

    factor = (
        pochhammer(1 + ONE_THIRD, n) * pochhammer(-ONE_THIRD, n) / factorial(2 * n)
    )

    return TruncatedSeries(
        [
            factor * hypergeometric_coefficient(n + 1, n - ONE_THIRD, 2 * n + 1, j)
            for j in range(extra_terms)
        ],
        n + 1,
        n + 1 + extra_terms,
    )


METHODS_REMAINDER_SERIES: CanonicalMapping = CanonicalMapping(
    {
        "Sum": remainder_series_sum,
        "Hypergeometric": remainder_series_hypergeometric,
    }
)
METHODS_REMAINDER_SERIES.__doc__ = """
Supported closed forms of the remainder :math:`R_n`.
"""


def remainder_series(
    n: int,
    extra_terms: int = 20,
    method: Literal["Sum", "Hypergeometric"] | str = "Sum",
) -> TruncatedSeries:
    """
    Return the exact *Laurent* coefficients of the remainder :math:`R_n` for
    the exponents :math:`1/z^{n+1}, \\ldots, 1/z^{n+extra}`, stored as a series
    in :math:`w = 1/z`.

    Parameters
    ----------
    n
        Approximation degree.
    extra_terms
        Number of coefficients, :math:`extra \\geq 1`.
    method
        Closed form to use.

    Returns
    -------
    :class:`sunit_bounds.TruncatedSeries`
        Remainder series.

    Examples
    --------
    >>> remainder_series(0, 1).coefficient(1)
    Fraction(1, 1)
    >>> remainder_series(1, 3, method="Hypergeometric").coefficient(3)
    Fraction(-8, 81)
    """

    if extra_terms < 1:
        raise ValueError(f'"extra_terms" must be at least 1, got {extra_terms}!')

    method = validate_method(method, tuple(METHODS_REMAINDER_SERIES.keys()))

    return METHODS_REMAINDER_SERIES[method](n, extra_terms)


def verify_remainder_forms(n: int, extra_terms: int = 20) -> bool:
    """
    Return whether the sum and hypergeometric closed forms of :math:`R_n`
    agree exactly.

    Examples
    --------
    >>> verify_remainder_forms(3)
    True
    """

    return remainder_series(n, extra_terms, "Sum") == remainder_series(
        n, extra_terms, "Hypergeometric"
    )


def _series_f(order: int) -> TruncatedSeries:
    """Return :math:`f = w(1 - w)^{1/3}` as a series in :math:`w = 1/z`."""

    g = series_binomial_third(order=order - 1)

    return TruncatedSeries(g.coefficients, 1, order)


def verify_order_condition(n: int, extra_terms: int = 20) -> bool:
    """
    Return whether :math:`P_{n,0}f - P_{n,1}` vanishes up to :math:`1/z^n`
    and matches the closed form of :math:`R_n` over given extra terms.

    Parameters
    ----------
    n
        Approximation degree.
    extra_terms
        Number of remainder coefficients compared.

    Returns
    -------
    :class:`bool`
        Whether the order condition holds.

    Examples
    --------
    >>> verify_order_condition(0)
    True
    >>> verify_order_condition(1)
    True
    """

    pair = build(n)

    order_f = 2 * n + extra_terms + 1
    order = n + 1 + extra_terms

    P0 = TruncatedSeries.from_polynomial(pair.P0, order, reciprocal=True)
    P1 = TruncatedSeries.from_polynomial(pair.P1, order, reciprocal=True)

    R = (P0 * _series_f(order_f) - P1).truncate(order)
    R_closed_form = remainder_series(n, extra_terms)

    vanishes = all(R.coefficient(e) == 0 for e in range(-n, n + 1))

    return vanishes and all(
        R.coefficient(e) == R_closed_form.coefficient(e)
        for e in range(n + 1, order)
    )


def verify_combinatorial_identity(
    which: Literal["i", "ii", "iii"] | str,
    n: int,
    ell: int = 0,
    omega: Any = ONE_THIRD,
) -> bool:
    """
    Return whether one of the three binomial identities behind the closed
    forms of :math:`A_n` and :math:`B_n` holds exactly.

    Parameters
    ----------
    which
        Identity, ``"i"`` and ``"ii"`` are *Chu-Vandermonde* convolutions of
        :math:`(1 - z)^{-n}` and :math:`(1 - z)^{n-\\omega-\\ell-1}`, ``"iii"``
        is the *Vandermonde* identity summing to :math:`\\binom{2n-1}{n}`.
    n
        Approximation degree.
    ell
        Index :math:`\\ell`, ignored by ``"iii"``.
    omega
        Rational :math:`\\omega`.

    Returns
    -------
    :class:`bool`
        Whether both sides agree.

    Raises
    ------
    RangeViolation
        If :math:`\\ell` lies outside the range of the identity.

    Examples
    --------
    >>> verify_combinatorial_identity("i", 3, 1, Fraction(1, 3))
    True
    >>> verify_combinatorial_identity("iii", 1, omega=Fraction(5, 7))
    True
    """

    which = validate_method(which, ("i", "ii", "iii"))
    omega = as_rational(omega)

    if which in ("i", "ii"):
        upper = n if which == "i" else n - 1
        if not 0 <= ell <= upper:
            raise RangeViolation(
                f'Identity "{which}" requires 0 <= ell <= {upper}, got ell = {ell}!'
            )

    if which == "i":
        lhs = sum(
            (
                (-1) ** (n - ell - k)
                * gen_binomial(n + k - 1, k)
                * gen_binomial(n - omega - ell - 1, n - k - ell)
                for k in range(n - ell + 1)
            ),
            Fraction(0),
        )
        rhs = gen_binomial(n + omega, n - ell)
    elif which == "ii":
        lhs = sum(
            (
                (-1) ** (n - 1 - k - ell)
                * gen_binomial(n + k, k)
                * gen_binomial(n + omega - ell, n - 1 - k - ell)
                for k in range(n - ell)
            ),
            Fraction(0),
        )
        rhs = gen_binomial(n - 1 - omega, n - ell - 1)
    else:
        lhs = sum(
            (
                gen_binomial(n - 1 - omega, k) * gen_binomial(n + omega, n - k)
                for k in range(n + 1)
            ),
            Fraction(0),
        )
        rhs = gen_binomial(2 * n - 1, n)

    return lhs == rhs


def wronskian_constant(n: int) -> ExactRational:
    """
    Return the closed-form constant
    :math:`(n+1)_{n+1}(-1/3)_n(4/3)_n/((n+1)!(2n)!)` of the determinant
    :math:`A_nB_{n+1} - A_{n+1}B_n`.

    Examples
    --------
    >>> wronskian_constant(1)
    Fraction(-2, 3)
    """

    return (
        pochhammer(n + 1, n + 1)
        * pochhammer(-ONE_THIRD, n)
        * pochhammer(1 + ONE_THIRD, n)
        / (factorial(n + 1) * factorial(2 * n))
    )


def verify_wronskian(n: int) -> Tuple[bool, ExactRational]:
    """
    Expand :math:`A_n(1-z)B_{n+1}(1-z) - A_{n+1}(1-z)B_n(1-z)` and return
    whether it is a monomial :math:`c z^{2n}` with :math:`|c|` equal to
    :func:`sunit_bounds.wronskian_constant` in absolute value, together with
    the signed constant :math:`c`.

    Examples
    --------
    >>> verify_wronskian(1)
    (True, Fraction(2, 3))
    >>> verify_wronskian(0)
    (True, Fraction(-1, 1))
    """

    pair, pair_next = build(n), build(n + 1)

    determinant = poly_compose(
        pair.A * pair_next.B - pair_next.A * pair.B, _ONE_MINUS_Z
    )

    constant = determinant.leading_coefficient
    is_monomial = determinant.degree() == 2 * n and all(
        coefficient == 0 for coefficient in determinant.coefficients[:-1]
    )

    return (
        is_monomial and constant != 0 and abs(constant) == abs(wronskian_constant(n)),
        constant,
    )


def verify_determinant_nonvanishing(
    n: int, points: int = 10, seed: int = DEFAULT_SEED
) -> bool:
    """
    Return whether :math:`A_n(\\beta)B_{n+1}(\\beta) - A_{n+1}(\\beta)B_n(\\beta)`
    is non-zero at seeded pseudo-random rationals :math:`\\beta \\neq 1`.

    Examples
    --------
    >>> verify_determinant_nonvanishing(3)
    True
    """

    pair, pair_next = build(n), build(n + 1)
    generator = np.random.default_rng(seed)

    betas: list = []
    while len(betas) < points:
        beta = Fraction(
            int(generator.integers(-50, 51)), int(generator.integers(1, 51))
        )
        if beta != 1:
            betas.append(beta)

    return all(
        pair.A(beta) * pair_next.B(beta) - pair_next.A(beta) * pair.B(beta) != 0
        for beta in betas
    )


def verify_cubic_substitution(n: int, order: int | None = None) -> bool:
    """
    Return whether
    :math:`S_n(z) = A_n(1-z) - (1-z)^{1/3}B_n(1-z)` composed with
    :math:`z = 3T - 3T^2 + T^3` equals :math:`V_n(1 - T)` up to given order.

    Parameters
    ----------
    n
        Approximation degree.
    order
        Series order, :math:`order \\geq \\deg V_n + 1`, default to
        :math:`\\deg V_n + 1`.

    Examples
    --------
    >>> verify_cubic_substitution(1, 8)
    True
    """

    pair = build(n)

    minimum = 3 * n + 2
    order = minimum if order is None else order
    if order < minimum:
        raise ValueError(
            f'"order" must be at least deg V_{n} + 1 = {minimum}, got {order}!'
        )

    A = TruncatedSeries.from_polynomial(poly_compose(pair.A, _ONE_MINUS_Z), order)
    B = TruncatedSeries.from_polynomial(poly_compose(pair.B, _ONE_MINUS_Z), order)

    S = A - series_binomial_third(order=order) * B

    return series_compose(S, _CUBIC_INNER) == TruncatedSeries.from_polynomial(
        poly_compose(pair.V, _ONE_MINUS_Z), order
    )


def verify_divisibility(n: int) -> bool:
    """
    Return whether :math:`T^{2n}` divides :math:`V_n(1 - T)`.

    Examples
    --------
    >>> all(verify_divisibility(n) for n in range(6))
    True
    """

    coefficients = poly_compose(build(n).V, _ONE_MINUS_Z).coefficients

    return all(coefficient == 0 for coefficient in coefficients[: 2 * n])


def scaling_exponent(n: int) -> int:
    """
    Return the exponent :math:`e(n) = n + v_3(n!)` of the common
    :math:`3`-power denominator of :math:`A_n` and :math:`B_n`.

    The constant term :math:`\\binom{n+1/3}{n}` of :math:`B_n` has exactly that
    valuation, the numerators :math:`3n + 1 - 3j` being prime to :math:`3`.

    Examples
    --------
    >>> [scaling_exponent(n) for n in range(1, 7)]
    [1, 2, 4, 5, 6, 8]
    """

    exponent, power = n, 3
    while power <= n:
        exponent += n // power
        power *= 3

    return exponent


def integral_scaling(n: int) -> bool:
    """
    Return whether :math:`3^{e(n)}A_n` and :math:`3^{e(n)}B_n` have integer
    coefficients while :math:`3^{e(n)-1}B_n` does not, with :math:`e(n)`
    given by :func:`sunit_bounds.scaling_exponent`.

    :math:`3^n` only clears the denominators for :math:`n \\leq 2`, e.g.
    :math:`B_3(0) = 140/81`.

    Examples
    --------
    >>> integral_scaling(3)
    True
    >>> (27 * build(3).B.coefficients[0]).denominator
    3
    """

    pair = build(n)
    scale = Fraction(3) ** scaling_exponent(n)

    integral = all(
        (scale * coefficient).denominator == 1
        for coefficient in pair.A.coefficients + pair.B.coefficients
    )

    return integral and any(
        (scale / 3 * coefficient).denominator != 1
        for coefficient in pair.B.coefficients
    )
