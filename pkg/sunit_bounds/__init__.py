"""
S-Unit - Bounds
===============

Exact *Padé* approximants of the cubic binomial function and the derivation of
an explicit counting bound for the solutions of the *S-unit* equation.

Sub-packages
------------
-   plotting: Plotting of the bound pipeline diagnostics.
-   tests: Unit tests.
"""

from __future__ import annotations

from .common import (
    DEFAULT_SEED,
    ENVIRONMENT_VARIABLE_PRECISION_DIGITS,
    DEFAULT_PRECISION_DIGITS,
    MINIMUM_PRECISION_DIGITS,
    PRECISION_DIGITS,
    SIGNIFICANT_DIGITS_SERIALISATION,
    TOLERANCE_MAHLER,
    TOLERANCE_ROUNDING_CUSHION,
    BoundViolation,
    ComparisonFailure,
    DomainError,
    DominanceUnverified,
    EmptyFeasibleSet,
    IdentityViolation,
    NonNilpotentInner,
    NonPositiveCoefficient,
    NonZeroRemainder,
    PreconditionViolation,
    RangeViolation,
    RootFindingFailure,
    SUnitBoundsError,
    UnknownCoefficient,
    as_mpf,
    format_rational,
    format_real,
    to_serialisable,
    working_precision,
)
from .exact_arith import (
    ONE_THIRD,
    ExactRational,
    as_rational,
    factorial,
    falling_factorial,
    gen_binomial,
    hypergeometric_coefficient,
    pochhammer,
)
from .poly_series import (
    DEGREE_ZERO_POLYNOMIAL,
    POLYNOMIAL_RING,
    RationalPolynomial,
    TruncatedSeries,
    guard_order,
    poly_add,
    poly_compose,
    poly_divide_exact,
    poly_divmod,
    poly_eval,
    poly_mul,
    poly_scale,
    poly_sub,
    series_binomial,
    series_binomial_third,
    series_compose,
)
from .pade_construct import (
    METHODS_REMAINDER_SERIES,
    PadePair,
    build,
    integral_scaling,
    scaling_exponent,
    polynomial_A,
    polynomial_B,
    polynomial_P0,
    polynomial_P1,
    remainder_series,
    remainder_series_hypergeometric,
    remainder_series_sum,
    verify_combinatorial_identity,
    verify_cubic_substitution,
    verify_determinant_nonvanishing,
    verify_divisibility,
    verify_order_condition,
    verify_remainder_forms,
    verify_wronskian,
    wronskian_constant,
)
from .analytic_bounds import (
    METHODS_MAHLER_MEASURE,
    TOLERANCE_MAHLER_RATIO,
    UNIT_ROUNDOFF,
    ArchimedeanReport,
    ComplexSample,
    LengthReport,
    MahlerReport,
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
from .evertse_pipeline import (
    CHOICES,
    CONSTANTS_EVERTSE,
    CONSTANTS_THEOREM,
    BoundBreakdown,
    Choice,
    ConstantMatch,
    EvertseParams,
    Exponents,
    Parts,
    ReproductionReport,
    Step2,
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
from .optimizer import (
    ComparisonReport,
    SearchSpec,
    compare_evertse,
    grid_search,
    load_search_spec,
    pareto_front,
    theorem_form_check,
)

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "DEFAULT_SEED",
    "ENVIRONMENT_VARIABLE_PRECISION_DIGITS",
    "DEFAULT_PRECISION_DIGITS",
    "MINIMUM_PRECISION_DIGITS",
    "PRECISION_DIGITS",
    "SIGNIFICANT_DIGITS_SERIALISATION",
    "TOLERANCE_MAHLER",
    "TOLERANCE_ROUNDING_CUSHION",
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
__all__ += [
    "ExactRational",
    "ONE_THIRD",
    "as_rational",
    "factorial",
    "falling_factorial",
    "pochhammer",
    "gen_binomial",
    "hypergeometric_coefficient",
]
__all__ += [
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
__all__ += [
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
__all__ += [
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
__all__ += [
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
__all__ += [
    "SearchSpec",
    "load_search_spec",
    "grid_search",
    "pareto_front",
    "ComparisonReport",
    "compare_evertse",
    "theorem_form_check",
]

__application_name__ = "S-Unit - Bounds"

__major_version__ = "0"
__minor_version__ = "1"
__change_version__ = "0"
__version__ = ".".join((__major_version__, __minor_version__, __change_version__))
