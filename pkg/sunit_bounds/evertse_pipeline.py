"""
Bound Pipeline
==============

Defines the closed-form quantities of the quantitative argument bounding the
number of solutions of the *S-unit* equation and their assembly into the
final two-term bound:

-   :class:`sunit_bounds.EvertseParams`
-   :class:`sunit_bounds.BoundBreakdown`
-   :func:`sunit_bounds.r_of_b`
-   :func:`sunit_bounds.exponents`
-   :func:`sunit_bounds.exponent_f1_limit`
-   :func:`sunit_bounds.min_k`
-   :func:`sunit_bounds.parts`
-   :func:`sunit_bounds.part_sizes`
-   :func:`sunit_bounds.step2_N`
-   :func:`sunit_bounds.assemble_bound`
-   :func:`sunit_bounds.evaluate_bound_log`
-   :func:`sunit_bounds.evertse_bound_log`
-   :func:`sunit_bounds.theorem_bound_log`
-   :attr:`sunit_bounds.CHOICES`
-   :func:`sunit_bounds.digit_match`
-   :func:`sunit_bounds.reproduce_choice`

Every real is evaluated with :mod:`mpmath` at
:attr:`sunit_bounds.PRECISION_DIGITS` significant digits. The quantity
:math:`A \\geq 1` never has to be computed, it only enters the diagnostics
through :math:`\\log A \\geq 0`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import mpmath
from colour.hints import Any, Dict, List, Tuple
from colour.utilities import CanonicalMapping, validate_method

from sunit_bounds.common import (
    DominanceUnverified,
    DomainError,
    NonPositiveCoefficient,
    PreconditionViolation,
    as_mpf,
    working_precision,
)
from sunit_bounds.exact_arith import ExactRational, as_rational

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "EvertseParams",
    "Exponents",
    "Parts",
    "Step2",
    "BoundBreakdown",
    "r_of_b",
    "exponents",
    "exponent_f1_limit",
    "min_k",
    "parts",
    "part_sizes",
    "step2_N",
    "assemble_bound",
    "evaluate_bound_log",
    "CONSTANTS_EVERTSE",
    "CONSTANTS_THEOREM",
    "evertse_bound_log",
    "theorem_bound_log",
    "Choice",
    "CHOICES",
    "digit_match",
    "ConstantMatch",
    "ReproductionReport",
    "reproduce_choice",
]


@dataclass(frozen=True)
class EvertseParams:
    """
    Define the tunable parameters of the bound pipeline.

    Parameters
    ----------
    B
        Real :math:`B` with :math:`5/6 < B < 1`.
    r0
        Positive integer :math:`r_0`.
    k
        Positive integer :math:`k`.
    ln2C
        Natural logarithm of :math:`2C`.
    n_step4
        Positive integer :math:`n` of the final counting step.
    m
        Degree of the number field.
    s
        Number of places.

    Examples
    --------
    >>> EvertseParams("0.834", 1600, 20, "7.8", 45).B
    Fraction(417, 500)
    """

    B: ExactRational
    r0: int
    k: int
    ln2C: ExactRational
    n_step4: int
    m: int = 1
    s: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "B", as_rational(self.B))
        object.__setattr__(self, "ln2C", as_rational(self.ln2C))

        for name in ("r0", "k", "n_step4", "m", "s"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ValueError(f'"{name}" must be a positive integer, got {value}!')

            object.__setattr__(self, name, int(value))


class Exponents(NamedTuple):
    """Exponents of the height threshold of the gap principle."""

    f1: mpmath.mpf
    f2: mpmath.mpf
    g1: mpmath.mpf
    g2: mpmath.mpf
    g3: mpmath.mpf


class Parts(NamedTuple):
    """*f-part* and *g-part* of the height threshold."""

    ln_fpart_const: mpmath.mpf
    fpart_A_exponent: mpmath.mpf
    ln_gpart_const: mpmath.mpf
    gpart_A_exponent: mpmath.mpf
    fpart_dominates: bool


class Step2(NamedTuple):
    """Coefficients of the linear system bounding the large solutions."""

    a: mpmath.mpf
    b: mpmath.mpf
    c: mpmath.mpf
    d: mpmath.mpf
    N: int


@dataclass
class BoundBreakdown:
    """
    Define the full derivation trace of a bound.

    Parameters
    ----------
    params
        Pipeline parameters.
    f1, f2, g1, g2, g3
        Exponents of the height threshold.
    ln_fpart_const, ln_gpart_const
        Logarithms of the factors of the *f-part* and *g-part* free of
        :math:`A`.
    fpart_A_exponent, gpart_A_exponent
        Exponents of :math:`A` in the *f-part* and *g-part*, i.e.
        :math:`f_1` and :math:`g_1`.
    fpart_dominates
        Whether the *f-part* is the maximum for all :math:`A \\geq 1`.
    a, b, c, d
        Coefficients of the linear system bounding the large solutions.
    N
        Upper bound on the number of large solutions steps.
    R_B
        :math:`R(B)`.
    coeff_small, base_small, base_m, base_s
        Coefficient tuple of the bound
        :math:`c_s b_s^s + 5b_m^m b_{s'}^s`.
    ln_bound
        Logarithm of the bound at the parameters :math:`(m, s)`.
    logA
        Diagnostic evaluation point :math:`\\log A`.
    """

    params: EvertseParams
    f1: mpmath.mpf
    f2: mpmath.mpf
    g1: mpmath.mpf
    g2: mpmath.mpf
    g3: mpmath.mpf
    ln_fpart_const: mpmath.mpf
    ln_gpart_const: mpmath.mpf
    fpart_A_exponent: mpmath.mpf
    gpart_A_exponent: mpmath.mpf
    fpart_dominates: bool
    a: mpmath.mpf
    b: mpmath.mpf
    c: mpmath.mpf
    d: mpmath.mpf
    N: int
    R_B: mpmath.mpf
    coeff_small: mpmath.mpf
    base_small: mpmath.mpf
    base_m: mpmath.mpf
    base_s: int
    ln_bound: mpmath.mpf
    logA: mpmath.mpf = field(default_factory=lambda: mpmath.mpf(0))

    @property
    def coefficient_tuple(self) -> Tuple[mpmath.mpf, mpmath.mpf, mpmath.mpf, int]:
        """Return the tuple :math:`(c_s, b_s, b_m, b_{s'})`."""

        return (self.coeff_small, self.base_small, self.base_m, self.base_s)


def r_of_b(B: Any) -> mpmath.mpf:
    """
    Return :math:`R(B) = (1 - B)^{-1}B^{B/(B-1)}`.

    Parameters
    ----------
    B
        Real :math:`B` with :math:`1/2 \\leq B < 1`.

    Raises
    ------
    DomainError
        If :math:`B` is outside :math:`[1/2, 1)`.

    Examples
    --------
    >>> print(r_of_b(Fraction(1, 2)))
    4.0
    """

    B = as_rational(B)
    if not Fraction(1, 2) <= B < 1:
        raise DomainError(f'"B" = {B} is outside [1/2, 1)!')

    with working_precision():
        B = as_mpf(B)

        return +(B ** (B / (B - 1)) / (1 - B))


def _validate_B(B: ExactRational) -> None:
    if not Fraction(5, 6) < B < 1:
        raise PreconditionViolation(f'"B" = {B} violates 5/6 < B < 1!')


def _validate_exponent_preconditions(B: ExactRational, r0: int, k: int) -> None:
    _validate_B(B)

    threshold = (6 + 3 * B) / (3 * B * (6 * B - 5))
    if not r0 > threshold:
        raise PreconditionViolation(
            f'"r0" = {r0} violates r0 > (6 + 3B) / (3B(6B - 5)) = {float(threshold)}!'
        )

    # Exact since both sides are rational.
    if not (3 * B - 1) ** (k + 1) > 3 * r0 + 4:
        raise PreconditionViolation(
            f'"k" = {k} violates (3B - 1)^(k + 1) > 3 r0 + 4 = {3 * r0 + 4}!'
        )


def exponents(B: Any, r0: int, k: int) -> Exponents:
    """
    Return the exponents :math:`f_1, f_2, g_1, g_2, g_3` of the height
    threshold.

    Parameters
    ----------
    B
        Real :math:`B` with :math:`5/6 < B < 1`.
    r0
        Integer :math:`r_0 > (6 + 3B)/(3B(6B - 5))`.
    k
        Integer :math:`k` with :math:`(3B - 1)^{k+1} > 3r_0 + 4`.

    Returns
    -------
    :class:`sunit_bounds.Exponents`
        Exponents.

    Raises
    ------
    PreconditionViolation
        If a parameter constraint fails.

    Examples
    --------
    >>> print(mpmath.nstr(exponents("0.834", 1600, 20).f1, 9))
    533.814188
    """

    B = as_rational(B)
    _validate_exponent_preconditions(B, r0, k)

    with working_precision():
        B, r0 = as_mpf(B), mpmath.mpf(r0)

        denominator = 3 * r0 * B * (6 * B - 5) - 6 - 3 * B
        f1 = (2 * r0 * B * (3 * B - 1) + B) / denominator
        f2 = (3 * r0 * B + 3) / denominator

        G = ((3 * B - 1) ** k - 1) / (3 * B - 2)
        D = (3 * B - 1) ** (k + 1) - 3 * r0 - 4
        g1 = (B - (1 - B) * (3 * B - 1) * G) / D
        g2 = (r0 + 1 + (3 * B - 1) * G) / D
        g3 = r0 / D

        return Exponents(f1, f2, g1, g2, g3)


def exponent_f1_limit(B: Any) -> mpmath.mpf:
    """
    Return the limit :math:`2(3B - 1)/(3(6B - 5))` of :math:`f_1(B, r)` when
    :math:`r` tends to infinity.

    Examples
    --------
    >>> exponent_f1_limit("0.9") > mpmath.mpf(4) / 3
    True
    """

    B = as_rational(B)
    _validate_B(B)

    with working_precision():
        B = as_mpf(B)

        return 2 * (3 * B - 1) / (3 * (6 * B - 5))


def min_k(B: Any, r0: int) -> int:
    """
    Return the smallest positive integer :math:`k` such that
    :math:`(3B - 1)^{k+1} > 3r_0 + 4`.

    Examples
    --------
    >>> min_k("0.834", 1600)
    20
    >>> min_k("0.84", 100)
    13
    >>> min_k("0.99", 1)
    2
    """

    B = as_rational(B)
    _validate_B(B)

    with working_precision():
        k_raw = mpmath.log(3 * r0 + 4) / mpmath.log(as_mpf(3 * B - 1)) - 1

    k = max(int(mpmath.floor(k_raw)), 1)
    while k > 1 and (3 * B - 1) ** k > 3 * r0 + 4:
        k -= 1
    while not (3 * B - 1) ** (k + 1) > 3 * r0 + 4:
        k += 1

    return k


def parts(B: Any, r0: int, k: int) -> Parts:
    """
    Return the *f-part* :math:`(8A)^{f_1}24^{f_2}` and *g-part*
    :math:`(8A)^{g_1}48^{g_2}2^{-g_3}` as the logarithms of their factors
    free of :math:`A` and their exponents of :math:`A`.

    The *f-part* dominates for all :math:`A \\geq 1` when both its constant and
    its exponent are at least those of the *g-part*.

    Examples
    --------
    >>> result = parts("0.834", 1600, 20)
    >>> print(mpmath.nstr(result.ln_fpart_const, 7))
    2805.184
    >>> result.fpart_dominates
    True
    """

    f1, f2, g1, g2, g3 = exponents(B, r0, k)

    with working_precision():
        ln_2, ln_8 = mpmath.log(2), mpmath.log(8)

        ln_fpart_const = f1 * ln_8 + f2 * mpmath.log(24)
        ln_gpart_const = g1 * ln_8 + g2 * mpmath.log(48) - g3 * ln_2

    return Parts(
        ln_fpart_const,
        f1,
        ln_gpart_const,
        g1,
        bool(ln_fpart_const >= ln_gpart_const and f1 >= g1),
    )


def part_sizes(
    breakdown: BoundBreakdown, logA: Any = 0
) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """
    Return the logarithms of the *f-part* and *g-part* at given
    :math:`\\log A \\geq 0`.
    """

    with working_precision():
        logA = as_mpf(logA)
        if logA < 0:
            raise DomainError(f'"logA" = {logA} is negative, A must be at least 1!')

        return (
            breakdown.ln_fpart_const + breakdown.fpart_A_exponent * logA,
            breakdown.ln_gpart_const + breakdown.gpart_A_exponent * logA,
        )


def step2_N(B: Any, r0: int, k: int, ln2C: Any) -> Step2:
    """
    Return the coefficients :math:`a, b, c, d` of the linear system bounding
    the large solutions and the resulting
    :math:`N = \\lfloor 1 + \\log_{3B-1}\\max(a/c, b/d)\\rfloor`.

    Parameters
    ----------
    B
        Real :math:`B` with :math:`5/6 < B < 1`.
    r0
        Integer :math:`r_0`.
    k
        Integer :math:`k`.
    ln2C
        Natural logarithm of :math:`2C`.

    Returns
    -------
    :class:`sunit_bounds.Step2`
        Coefficients and :math:`N`.

    Raises
    ------
    NonPositiveCoefficient
        If one of :math:`a, b, c, d` is not positive.

    Examples
    --------
    >>> step2_N("0.834", 1600, 20, "7.8").N
    26
    >>> step2_N("0.84", 100, 13, "7.5").N
    31
    """

    B = as_rational(B)
    ln_fpart_const, f1, *_ = parts(B, r0, k)

    with working_precision():
        B_mpf, ln2C = as_mpf(B), as_mpf(as_rational(ln2C))
        L6 = mpmath.log(6) + B_mpf * mpmath.log(8)

        a = -L6 / (3 * B_mpf - 2) + ln_fpart_const
        b = (1 - B_mpf) / (3 * B_mpf - 2) + f1
        c = ln2C - mpmath.log(2) - L6 / (3 * B_mpf - 2)
        d = (1 - B_mpf) / (3 * B_mpf - 2)

        for name, value in zip("abcd", (a, b, c, d)):
            if value <= 0:
                raise NonPositiveCoefficient(
                    f'Coefficient "{name}" = {mpmath.nstr(value, 10)} is not '
                    f"positive, increase ln(2C) or revise (B, r0, k)!"
                )

        N = int(
            mpmath.floor(
                1 + mpmath.log(max(a / c, b / d)) / mpmath.log(3 * B_mpf - 1)
            )
        )

    return Step2(a, b, c, d, N)


def evaluate_bound_log(breakdown: BoundBreakdown, m: int, s: int) -> mpmath.mpf:
    """
    Return :math:`\\ln(c_s b_s^s + 5b_m^m b_{s'}^s)` computed with the
    *log-sum-exp* trick.

    Examples
    --------
    >>> breakdown = assemble_bound(EvertseParams("0.834", 1600, 20, "7.8", 45))
    >>> print(mpmath.nstr(mpmath.exp(evaluate_bound_log(breakdown, 1, 1)), 6))
    894.912
    """

    if m < 1 or s < 1:
        raise ValueError(f'"m" and "s" must be at least 1, got m = {m} and s = {s}!')

    with working_precision():
        return _log_sum_exp(
            mpmath.log(breakdown.coeff_small) + s * mpmath.log(breakdown.base_small),
            mpmath.log(5)
            + m * mpmath.log(breakdown.base_m)
            + s * mpmath.log(breakdown.base_s),
        )


def _log_sum_exp(x: mpmath.mpf, y: mpmath.mpf) -> mpmath.mpf:
    high, low = max(x, y), min(x, y)

    return high + mpmath.log1p(mpmath.exp(low - high))


def assemble_bound(params: EvertseParams, logA: Any = 0) -> BoundBreakdown:
    """
    Assemble the two-term bound :math:`\\frac{N + k}{R(B)}(3R(B))^s +
    5(2(2C)^{3/n})^m n^s` and its derivation trace.

    Parameters
    ----------
    params
        Pipeline parameters.
    logA
        Diagnostic :math:`\\log A \\geq 0` stored in the breakdown.

    Returns
    -------
    :class:`sunit_bounds.BoundBreakdown`
        Derivation trace.

    Raises
    ------
    DominanceUnverified
        If the *f-part* is not provably the maximum for all :math:`A \\geq 1`.

    Examples
    --------
    >>> breakdown = assemble_bound(EvertseParams("0.84", 100, 13, "7.5", 47))
    >>> [mpmath.nstr(x, 6) for x in breakdown.coefficient_tuple[:3]]
    ['2.81864', '46.8312', '3.22803']
    >>> breakdown.base_s
    47
    """

    f1, f2, g1, g2, g3 = exponents(params.B, params.r0, params.k)
    part = parts(params.B, params.r0, params.k)

    if not part.fpart_dominates:
        raise DominanceUnverified(
            f"f-part does not dominate the g-part for all A >= 1 with "
            f"B = {params.B}, r0 = {params.r0} and k = {params.k}!"
        )

    step2 = step2_N(params.B, params.r0, params.k, params.ln2C)
    R_B = r_of_b(params.B)

    with working_precision():
        breakdown = BoundBreakdown(
            params=params,
            f1=f1,
            f2=f2,
            g1=g1,
            g2=g2,
            g3=g3,
            ln_fpart_const=part.ln_fpart_const,
            ln_gpart_const=part.ln_gpart_const,
            fpart_A_exponent=part.fpart_A_exponent,
            gpart_A_exponent=part.gpart_A_exponent,
            fpart_dominates=part.fpart_dominates,
            a=step2.a,
            b=step2.b,
            c=step2.c,
            d=step2.d,
            N=step2.N,
            R_B=R_B,
            coeff_small=(step2.N + params.k) / R_B,
            base_small=3 * R_B,
            base_m=2 * mpmath.exp(3 * as_mpf(params.ln2C) / params.n_step4),
            base_s=params.n_step4,
            ln_bound=mpmath.mpf(0),
            logA=as_mpf(logA),
        )

    if breakdown.logA < 0:
        raise DomainError(
            f'"logA" = {breakdown.logA} is negative, A must be at least 1!'
        )

    breakdown.ln_bound = evaluate_bound_log(breakdown, params.m, params.s)

    return breakdown


CONSTANTS_EVERTSE: Dict[str, str] = {
    "coeff_small": "2",
    "base_m": "3.26396",
    "base_s": "49",
}
"""Constants of the previously best known bound :math:`(2 + 5b_m^m)b_s^s`."""

CONSTANTS_THEOREM: Dict[str, str] = {
    "coeff_small": "3.1",
    "base_small": "45",
    "base_m": "3.4",
    "base_s": "45",
}
"""Constants of the stated bound :math:`(c + 5b_m^m)b_s^s`."""


def evertse_bound_log(m: int, s: int) -> mpmath.mpf:
    """
    Return :math:`\\ln((2 + 5 \\cdot 3.26396^m)49^s)`.

    Examples
    --------
    >>> print(mpmath.nstr(mpmath.exp(evertse_bound_log(1, 1)), 5))
    897.67
    """

    with working_precision():
        return mpmath.log(
            as_mpf(CONSTANTS_EVERTSE["coeff_small"])
            + 5 * as_mpf(CONSTANTS_EVERTSE["base_m"]) ** m
        ) + s * mpmath.log(as_mpf(CONSTANTS_EVERTSE["base_s"]))


def theorem_bound_log(
    m: int,
    s: int,
    coeff_small: Any = CONSTANTS_THEOREM["coeff_small"],
    base_m: Any = CONSTANTS_THEOREM["base_m"],
    base_s: Any = CONSTANTS_THEOREM["base_s"],
) -> mpmath.mpf:
    """
    Return :math:`\\ln((c + 5b_m^m)b_s^s)`, default to the stated constants
    :math:`c = 3.1, b_m = 3.4, b_s = 45`.

    Examples
    --------
    >>> print(mpmath.nstr(mpmath.exp(theorem_bound_log(1, 1)), 5))
    904.5
    """

    with working_precision():
        return mpmath.log(
            as_mpf(coeff_small) + 5 * as_mpf(base_m) ** m
        ) + s * mpmath.log(as_mpf(base_s))


@dataclass(frozen=True)
class Choice:
    """
    Define a reference parameter choice and its printed constants.

    Parameters
    ----------
    params
        Pipeline parameters.
    printed
        Printed decimal constants keyed by :class:`BoundBreakdown` field.
    printed_integers
        Printed integer constants, ``min_k`` included.
    """

    params: EvertseParams
    printed: Dict[str, str]
    printed_integers: Dict[str, int]


CHOICES: CanonicalMapping = CanonicalMapping(
    {
        "I": Choice(
            EvertseParams("0.834", 1600, 20, "7.8", 45),
            {
                "f1": "533.814",
                "f2": "533.391",
                "g1": "-5.20814",
                "g2": "36.3095",
                "g3": "4.91666",
                "ln_fpart_const": "2805.183",
                "ln_gpart_const": "126.323",
                "coeff_small": "3.06759",
                "base_small": "44.9866",
                "base_m": "3.36406",
            },
            {"min_k": 20, "N": 26, "base_s": 45},
        ),
        "II": Choice(
            EvertseParams("0.84", 100, 13, "7.5", 47),
            {
                "f1": "164.230",
                "f2": "163.461",
                "g1": "-2.25320",
                "g2": "16.3237",
                "g3": "2.1093",
                "coeff_small": "2.81864",
                "base_small": "46.8312",
                "base_m": "3.22803",
            },
            {"min_k": 13, "N": 31, "base_s": 47},
        ),
    }
)
CHOICES.__doc__ = """
Reference parameter choices, *Choice I* gives the smaller coefficient of
:math:`b_m^m`, *Choice II* the smaller :math:`c_s`.
"""


def digit_match(computed: Any, printed: str) -> bool:
    """
    Return whether given computed value matches a printed decimal constant,
    i.e. :math:`|computed - printed| \\leq 10^{-p}` with :math:`p` the number
    of printed decimal places.

    Examples
    --------
    >>> digit_match(mpmath.mpf("2.1093995"), "2.1093")
    True
    >>> digit_match(mpmath.mpf("2.1095"), "2.1093")
    False
    """

    printed = printed.strip()
    places = len(printed.split(".")[1]) if "." in printed else 0

    with working_precision():
        return bool(
            abs(as_mpf(computed) - as_mpf(printed)) <= mpmath.mpf(10) ** -places
        )


@dataclass
class ConstantMatch:
    """Define the comparison of a computed constant with its printed value."""

    name: str
    printed: str
    computed: Any
    matched: bool


@dataclass
class ReproductionReport:
    """Define the outcome of :func:`sunit_bounds.reproduce_choice`."""

    choice: str
    breakdown: BoundBreakdown
    matches: List[ConstantMatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Return whether every printed constant is matched."""

        return all(match.matched for match in self.matches)


def reproduce_choice(name: str = "I") -> ReproductionReport:
    """
    Recompute a reference parameter choice and compare every printed constant
    with its computed value.

    Parameters
    ----------
    name
        Choice name, ``"I"`` or ``"II"``.

    Returns
    -------
    :class:`sunit_bounds.ReproductionReport`
        Reproduction report.

    Examples
    --------
    >>> reproduce_choice("II").passed
    True
    """

    name = validate_method(name, tuple(CHOICES.keys()))
    choice = CHOICES[name]
    params = choice.params

    breakdown = assemble_bound(params)
    report = ReproductionReport(name.upper(), breakdown)

    for constant, printed in choice.printed.items():
        computed = getattr(breakdown, constant)
        report.matches.append(
            ConstantMatch(constant, printed, computed, digit_match(computed, printed))
        )

    computed_integers = {
        "min_k": min_k(params.B, params.r0),
        "N": breakdown.N,
        "base_s": breakdown.base_s,
    }
    for constant, printed_integer in choice.printed_integers.items():
        computed = computed_integers[constant]
        report.matches.append(
            ConstantMatch(
                constant, str(printed_integer), computed, computed == printed_integer
            )
        )

    return report
