"""
Analytic Bounds
===============

Defines the length and *Mahler* measure computations and the verification of
the archimedean bounds satisfied by the *Padé* polynomials:

-   :class:`sunit_bounds.ComplexSample`
-   :class:`sunit_bounds.LengthReport`
-   :class:`sunit_bounds.MahlerReport`
-   :class:`sunit_bounds.ArchimedeanReport`
-   :func:`sunit_bounds.length`
-   :func:`sunit_bounds.length_B_closed_form`
-   :func:`sunit_bounds.check_length_bounds`
-   :func:`sunit_bounds.mahler_numeric`
-   :func:`sunit_bounds.mahler_jensen`
-   :attr:`sunit_bounds.METHODS_MAHLER_MEASURE`
-   :func:`sunit_bounds.mahler_measure`
-   :func:`sunit_bounds.check_mahler_sandwich`
-   :func:`sunit_bounds.height_weights`
-   :func:`sunit_bounds.sample_complex_points`
-   :func:`sunit_bounds.sample_archimedean_bounds`
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np
from colour.hints import Dict, List, Literal, NDArrayComplex, NDArrayFloat
from colour.utilities import (
    CanonicalMapping,
    runtime_warning,
    usage_warning,
    validate_method,
)
from mpmath.libmp import NoConvergence
from scipy.integrate import quad

from sunit_bounds.common import (
    DEFAULT_SEED,
    TOLERANCE_MAHLER,
    TOLERANCE_ROUNDING_CUSHION,
    BoundViolation,
    RootFindingFailure,
    as_mpf,
    working_precision,
)
from sunit_bounds.exact_arith import ONE_THIRD, ExactRational, gen_binomial
from sunit_bounds.pade_construct import build
from sunit_bounds.poly_series import RationalPolynomial, poly_divide_exact

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "UNIT_ROUNDOFF",
    "TOLERANCE_MAHLER_RATIO",
    "ComplexSample",
    "LengthReport",
    "MahlerReport",
    "ArchimedeanReport",
    "length",
    "length_B_closed_form",
    "check_length_bounds",
    "mahler_numeric",
    "mahler_jensen",
    "METHODS_MAHLER_MEASURE",
    "mahler_measure",
    "check_mahler_sandwich",
    "height_weights",
    "sample_complex_points",
    "sample_archimedean_bounds",
]

UNIT_ROUNDOFF: float = 2.0**-53
"""Unit roundoff of double precision arithmetic."""

TOLERANCE_MAHLER_RATIO: float = 1e-6
"""Relative tolerance of the *Mahler* measure sandwich comparisons."""

_MAXSTEPS_POLYROOTS: tuple = (50, 200, 800)


@dataclass(frozen=True)
class ComplexSample:
    """
    Define a complex evaluation point with its sampling provenance.

    Parameters
    ----------
    re
        Real part.
    im
        Imaginary part.
    seed
        Seed of the sampler that produced the point.
    """

    re: float
    im: float
    seed: int

    @property
    def value(self) -> complex:
        """Return the point as a :class:`complex`."""

        return complex(self.re, self.im)


@dataclass
class LengthReport:
    """
    Define the outcome of :func:`sunit_bounds.check_length_bounds`.

    Parameters
    ----------
    n_max
        Largest checked degree.
    lengths_A
        Exact lengths :math:`L(A_n)` for :math:`1 \\leq n \\leq n_{max}`.
    lengths_B
        Exact lengths :math:`L(B_n)` for :math:`1 \\leq n \\leq n_{max}`.
    lengths_W
        Exact lengths :math:`L(W_n)` for :math:`1 \\leq n \\leq n_{max}`.
    exempt
        Degrees exempted from the combined bound.
    passed
        Whether all the checks passed.
    """

    n_max: int
    lengths_A: List[ExactRational] = field(default_factory=list)
    lengths_B: List[ExactRational] = field(default_factory=list)
    lengths_W: List[ExactRational] = field(default_factory=list)
    exempt: List[int] = field(default_factory=list)
    passed: bool = True


@dataclass
class MahlerReport:
    """
    Define the outcome of :func:`sunit_bounds.check_mahler_sandwich`.

    Parameters
    ----------
    n_max
        Largest checked degree.
    mahler_V
        Numeric *Mahler* measures :math:`M(V_n)`.
    mahler_W
        Numeric *Mahler* measures :math:`M(W_n)`.
    flagged
        Degrees where :math:`L(V_n) \\neq L(A_n) + L(B_n)`.
    passed
        Whether all the checks passed.
    """

    n_max: int
    mahler_V: List[float] = field(default_factory=list)
    mahler_W: List[float] = field(default_factory=list)
    flagged: List[int] = field(default_factory=list)
    passed: bool = True


@dataclass
class ArchimedeanReport:
    """
    Define the outcome of :func:`sunit_bounds.sample_archimedean_bounds`.

    Parameters
    ----------
    n
        Approximation degree.
    samples
        Number of sampled points.
    seed
        Sampler seed.
    max_ratios
        Largest observed ratio value / bound per inequality, every ratio is at
        most 1 up to the rounding cushion since a violation raises.
    """

    n: int
    samples: int
    seed: int
    max_ratios: Dict[str, float] = field(default_factory=dict)


def length(p: RationalPolynomial) -> ExactRational:
    """
    Return the length of given polynomial, i.e. the sum of the moduli of its
    coefficients.

    Examples
    --------
    >>> length(RationalPolynomial([Fraction(4, 3), Fraction(-1, 3)]))
    Fraction(5, 3)
    >>> length(RationalPolynomial())
    Fraction(0, 1)
    """

    return sum((abs(coefficient) for coefficient in p.coefficients), Fraction(0))


def length_B_closed_form(n: int) -> ExactRational:
    """
    Return the closed form :math:`L(B_n) = \\binom{2n-1}{n} -
    2\\binom{n-4/3}{n}`, the leading coefficient of :math:`B_n` being its only
    negative coefficient.

    Parameters
    ----------
    n
        Approximation degree, :math:`n \\geq 1`.

    Examples
    --------
    >>> length_B_closed_form(1)
    Fraction(5, 3)
    >>> length_B_closed_form(2)
    Fraction(29, 9)
    """

    if n < 1:
        raise ValueError(f'"n" must be at least 1, got {n}!')

    return gen_binomial(2 * n - 1, n) - 2 * gen_binomial(n - 1 - ONE_THIRD, n)


def check_length_bounds(n_max: int) -> LengthReport:
    """
    Check the length bounds of the *Padé* polynomials in exact arithmetic.

    For :math:`1 \\leq n \\leq n_{max}`, :math:`L(A_n) = \\binom{2n-1}{n-1}
    \\leq 4^{n-1}` and :math:`L(B_n)` matches its closed form. For
    :math:`2 \\leq n \\leq n_{max}`, :math:`L(A_n) + L(B_n) \\leq 4^n/2` and
    :math:`L(W_n) \\leq 4 \\cdot 8^n`. The degree :math:`n = 1` is exempt from
    the combined bounds, :math:`|W_1(z)| \\leq 8\\max(1, |z|)^2` following from
    the explicit :math:`W_1` instead.

    Parameters
    ----------
    n_max
        Largest degree, :math:`n_{max} \\geq 1`.

    Returns
    -------
    :class:`sunit_bounds.LengthReport`
        Length report.

    Raises
    ------
    BoundViolation
        If an inequality fails, the witness is the failing degree.

    Examples
    --------
    >>> check_length_bounds(2).passed
    True
    """

    if n_max < 1:
        raise ValueError(f'"n_max" must be at least 1, got {n_max}!')

    report = LengthReport(n_max)

    for n in range(1, n_max + 1):
        pair = build(n)
        length_A, length_B, length_W = length(pair.A), length(pair.B), length(pair.W)

        report.lengths_A.append(length_A)
        report.lengths_B.append(length_B)
        report.lengths_W.append(length_W)

        if length_A != gen_binomial(2 * n - 1, n - 1):
            raise BoundViolation(
                f"L(A_{n}) = {length_A} differs from C({2 * n - 1}, {n - 1})!", n
            )

        if length_A > 4 ** (n - 1):
            raise BoundViolation(f"L(A_{n}) = {length_A} exceeds 4^{n - 1}!", n)

        if length_B != length_B_closed_form(n):
            raise BoundViolation(
                f"L(B_{n}) = {length_B} differs from its closed form "
                f"{length_B_closed_form(n)}!",
                n,
            )

        if n == 1:
            report.exempt.append(n)
            usage_warning(
                "The combined length bounds only hold for n >= 2, n = 1 is "
                "covered by the explicit W_1 instead."
            )

            if length_W > 8:
                raise BoundViolation(f"L(W_1) = {length_W} exceeds 8!", n)

            continue

        if length_A + length_B > Fraction(4**n, 2):
            raise BoundViolation(
                f"L(A_{n}) + L(B_{n}) = {length_A + length_B} exceeds 4^{n}/2!", n
            )

        if length_W > 4 * 8**n:
            raise BoundViolation(f"L(W_{n}) = {length_W} exceeds 4 * 8^{n}!", n)

    return report


def _strip_unit_factors(p: RationalPolynomial) -> RationalPolynomial:
    """
    Remove the factors :math:`T` and :math:`T - 1` of given polynomial, their
    roots contribute 1 to the *Mahler* measure.
    """

    coefficients = list(p.coefficients)
    while len(coefficients) > 1 and coefficients[0] == 0:
        coefficients.pop(0)

    p = RationalPolynomial(coefficients)
    while p.degree() >= 1 and p(1) == 0:
        p = poly_divide_exact(p, RationalPolynomial([-1, 1]))

    return p


def _validate_mahler_arguments(p: RationalPolynomial, tol: float) -> None:
    if p.degree() < 1:
        raise ValueError(f'"{p}" must have a degree of at least 1!')

    if tol <= 0:
        raise ValueError(f'"tol" must be positive, got {tol}!')


def mahler_numeric(p: RationalPolynomial, tol: float = TOLERANCE_MAHLER) -> float:
    """
    Return the *Mahler* measure :math:`|a_d|\\prod\\max(1, |\\alpha_i|)` of
    given polynomial from its numeric roots.

    The roots are found with :func:`mpmath.polyroots` at the working
    precision, the iteration budget being increased until the root error
    estimate is below given tolerance.

    Parameters
    ----------
    p
        Polynomial of degree at least 1.
    tol
        Relative tolerance.

    Returns
    -------
    :class:`float`
        *Mahler* measure.

    Raises
    ------
    RootFindingFailure
        If the root finder does not converge.

    Examples
    --------
    >>> mahler_numeric(RationalPolynomial([-2, 1]))
    2.0
    >>> round(mahler_numeric(RationalPolynomial([1, 0, 1])), 12)
    1.0
    """

    _validate_mahler_arguments(p, tol)

    leading = abs(p.leading_coefficient)
    p = _strip_unit_factors(p)

    if p.degree() < 1:
        return float(leading)

    with working_precision():
        coefficients = [as_mpf(c) for c in reversed(p.coefficients)]

        for maxsteps in _MAXSTEPS_POLYROOTS:
            try:
                roots, error = mpmath.polyroots(
                    coefficients, maxsteps=maxsteps, extraprec=60, error=True
                )
            except NoConvergence:
                continue

            if error <= tol:
                break
        else:
            raise RootFindingFailure(
                f'Roots of "{p}" did not converge within {_MAXSTEPS_POLYROOTS[-1]} '
                f"steps to a tolerance of {tol}!"
            )

        measure = as_mpf(leading)
        for root in roots:
            measure *= max(mpmath.mpf(1), abs(root))

        return float(measure)


def mahler_jensen(p: RationalPolynomial, tol: float = TOLERANCE_MAHLER) -> float:
    """
    Return the *Mahler* measure
    :math:`\\exp\\int_0^1\\log|p(e^{2i\\pi t})|\\,dt` of given polynomial by
    numeric integration.

    Parameters
    ----------
    p
        Polynomial of degree at least 1.
    tol
        Relative tolerance of the integration.

    Returns
    -------
    :class:`float`
        *Mahler* measure.

    Examples
    --------
    >>> round(mahler_jensen(RationalPolynomial([-2, 1])), 6)
    2.0
    """

    _validate_mahler_arguments(p, tol)

    p = _strip_unit_factors(p)
    coefficients = np.array(
        [c.numerator / c.denominator for c in reversed(p.coefficients)],
        dtype=np.float64,
    )

    def integrand(t: float) -> float:
        return float(np.log(np.abs(np.polyval(coefficients, np.exp(2j * np.pi * t)))))

    integral, _error = quad(integrand, 0, 1, epsrel=tol, limit=400)

    return float(np.exp(integral))


METHODS_MAHLER_MEASURE: CanonicalMapping = CanonicalMapping(
    {"Roots": mahler_numeric, "Jensen": mahler_jensen}
)
METHODS_MAHLER_MEASURE.__doc__ = """
Supported *Mahler* measure computation methods.
"""


def mahler_measure(
    p: RationalPolynomial,
    tol: float = TOLERANCE_MAHLER,
    method: Literal["Roots", "Jensen"] | str = "Roots",
) -> float:
    """
    Return the *Mahler* measure of given polynomial using given method.

    Parameters
    ----------
    p
        Polynomial of degree at least 1.
    tol
        Relative tolerance.
    method
        Computation method.

    Examples
    --------
    >>> round(mahler_measure(RationalPolynomial([-2, 1]), method="Jensen"), 6)
    2.0
    """

    method = validate_method(method, tuple(METHODS_MAHLER_MEASURE.keys()))

    return METHODS_MAHLER_MEASURE[method](p, tol)


def check_mahler_sandwich(n_max: int, tol: float = TOLERANCE_MAHLER) -> MahlerReport:
    """
    Check the sandwich :math:`M(P) \\leq L(P) \\leq 2^{\\deg P}M(P)` on
    :math:`V_n` and :math:`W_n`, that :math:`M(V_n) = M(W_n)` and the length
    chain :math:`L(V_n) = L(A_n) + L(B_n)` for :math:`1 \\leq n \\leq n_{max}`.

    A broken length chain is flagged with a warning rather than failed.

    Parameters
    ----------
    n_max
        Largest degree.
    tol
        Relative tolerance of the *Mahler* measures.

    Returns
    -------
    :class:`sunit_bounds.MahlerReport`
        *Mahler* measure report.

    Raises
    ------
    BoundViolation
        If an inequality fails, the witness is the failing degree.
    """

    report = MahlerReport(n_max)
    cushion = 1 + TOLERANCE_MAHLER_RATIO

    for n in range(1, n_max + 1):
        pair = build(n)

        mahler_V = mahler_numeric(pair.V, tol)
        mahler_W = mahler_numeric(pair.W, tol)
        report.mahler_V.append(mahler_V)
        report.mahler_W.append(mahler_W)

        length_V, length_W = length(pair.V), length(pair.W)

        if mahler_V > float(length_V) * cushion:
            raise BoundViolation(f"M(V_{n}) = {mahler_V} exceeds L(V_{n})!", n)

        if float(length_W) > 2 ** int(pair.W.degree()) * mahler_W * cushion:
            raise BoundViolation(
                f"L(W_{n}) = {float(length_W)} exceeds 2^deg(W_{n}) M(W_{n})!", n
            )

        if abs(mahler_V / mahler_W - 1) > TOLERANCE_MAHLER_RATIO:
            raise BoundViolation(
                f"M(V_{n}) / M(W_{n}) = {mahler_V / mahler_W} is not 1!", n
            )

        if length_V != length(pair.A) + length(pair.B):
            report.flagged.append(n)
            runtime_warning(
                f"L(V_{n}) = {length_V} differs from L(A_{n}) + L(B_{n}), "
                f"coefficients of A_{n}(T^3) and T B_{n}(T^3) cancel!"
            )

    return report


def height_weights(m: int) -> Dict[str, ExactRational]:
    """
    Return the archimedean weights :math:`s(v)` for a number field of degree
    :math:`m`.

    Examples
    --------
    >>> height_weights(2)
    {'real': Fraction(1, 2), 'complex': Fraction(1, 1)}
    """

    if m < 1:
        raise ValueError(f'"m" must be at least 1, got {m}!')

    return {"real": Fraction(1, m), "complex": Fraction(2, m)}


def sample_complex_points(samples: int, seed: int = DEFAULT_SEED) -> NDArrayComplex:
    """
    Return seeded pseudo-random complex points whose modulus is log-uniform in
    :math:`[10^{-3}, 10^3]` and argument uniform in :math:`[0, 2\\pi)`.

    Examples
    --------
    >>> z = sample_complex_points(4)
    >>> bool(np.all((np.abs(z) >= 1e-3) & (np.abs(z) <= 1e3)))
    True
    """

    if samples < 1:
        raise ValueError(f'"samples" must be at least 1, got {samples}!')

    generator = np.random.default_rng(seed)

    modulus = 10 ** generator.uniform(-3, 3, samples)
    argument = generator.uniform(0, 2 * np.pi, samples)

    return modulus * np.exp(1j * argument)


def _as_float_coefficients(p: RationalPolynomial) -> NDArrayFloat:
    return np.array(
        [c.numerator / c.denominator for c in p.coefficients] or [0.0],
        dtype=np.float64,
    )


def _log_abs_values(p: RationalPolynomial, z: NDArrayComplex) -> NDArrayFloat:
    with np.errstate(divide="ignore"):
        values = np.polynomial.polynomial.polyval(z, _as_float_coefficients(p))

        return np.log(np.abs(values))


def sample_archimedean_bounds(
    n: int, samples: int = 10_000, seed: int = DEFAULT_SEED
) -> ArchimedeanReport:
    """
    Check the archimedean bounds of the *Padé* polynomials at seeded
    pseudo-random complex points.

    The checked inequalities are
    :math:`\\max(|A_n(z)|, |B_n(z)|) \\leq 4^n\\max(1, |z|)^n`,
    :math:`|W_n(z)| \\leq 8^n\\max(1, |z|)^{n+1}` and, for the weights
    :math:`s \\in \\{1/m, 2/m\\}` with :math:`m \\in \\{1, 2, 5\\}`,
    :math:`\\max(|A_n(\\alpha^3)|, |B_n(\\alpha^3)|)^s \\leq
    4^{ns}\\max(1, |\\alpha|)^{3ns}` and :math:`|V_n(\\alpha)|^s \\leq
    |1 - \\alpha|^{2ns}8^{ns}\\max(1, |\\alpha|)^{(n+1)s}`.

    Comparisons are made in the log domain with a relative cushion of
    :attr:`sunit_bounds.TOLERANCE_ROUNDING_CUSHION`; :math:`V_n(\\alpha)`
    additionally gets the *Horner* forward error allowance
    :math:`2\\deg(V_n)uL(V_n)\\max(1, |\\alpha|)^{\\deg V_n}`.

    Parameters
    ----------
    n
        Approximation degree, :math:`n \\geq 1`.
    samples
        Number of sampled points.
    seed
        Sampler seed.

    Returns
    -------
    :class:`sunit_bounds.ArchimedeanReport`
        Sampling report.

    Raises
    ------
    BoundViolation
        If an inequality fails, the witness is the failing
        :class:`sunit_bounds.ComplexSample`.

    Examples
    --------
    >>> report = sample_archimedean_bounds(1, 100)
    >>> max(report.max_ratios.values()) <= 1 + 1e-8
    True
    """

    if n < 1:
        raise ValueError(f'"n" must be at least 1, got {n}!')

    pair = build(n)
    z = sample_complex_points(samples, seed)

    log_cushion = np.log1p(TOLERANCE_ROUNDING_CUSHION)
    log_height = np.log(np.maximum(1, np.abs(z)))
    log_4, log_8 = np.log(4), np.log(8)

    report = ArchimedeanReport(n, samples, seed)

    def check(name: str, log_values: NDArrayFloat, log_bounds: NDArrayFloat) -> None:
        excess = log_values - log_bounds
        report.max_ratios[name] = float(np.exp(np.max(excess)))

        violating = np.flatnonzero(excess > log_cushion)
        if violating.size:
            index = int(violating[0])
            witness = ComplexSample(float(z[index].real), float(z[index].imag), seed)

            raise BoundViolation(
                f'"{name}" bound fails for n = {n} at z = {witness.value}: '
                f"log value {log_values[index]} > log bound {log_bounds[index]}!",
                witness,
            )

    log_A, log_B = _log_abs_values(pair.A, z), _log_abs_values(pair.B, z)
    check("A_n, B_n", np.maximum(log_A, log_B), n * log_4 + n * log_height)
    check("W_n", _log_abs_values(pair.W, z), n * log_8 + (n + 1) * log_height)

    z_cubed = z**3
    log_AB_cubed = np.maximum(
        _log_abs_values(pair.A, z_cubed), _log_abs_values(pair.B, z_cubed)
    )

    degree_V = int(pair.V.degree())
    log_V = _log_abs_values(pair.V, z)
    with np.errstate(divide="ignore"):
        log_V_bound = (
            2 * n * np.log(np.abs(1 - z)) + n * log_8 + (n + 1) * log_height
        )
    log_allowance = (
        np.log(2 * degree_V * UNIT_ROUNDOFF * float(length(pair.V)))
        + degree_V * log_height
    )
    # Relative cushion on the bound, absolute Horner allowance on the value.
    log_V_bound = np.logaddexp(log_V_bound + log_cushion, log_allowance) - log_cushion

    for m in (1, 2, 5):
        for place, s in height_weights(m).items():
            s = float(s)
            check(
                f"A_n(a^3), B_n(a^3), {place}, m = {m}",
                s * log_AB_cubed,
                s * (n * log_4 + 3 * n * log_height),
            )
            check(f"V_n(a), {place}, m = {m}", s * log_V, s * log_V_bound)

    return report
