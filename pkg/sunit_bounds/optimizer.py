"""
Parameter Optimisation
======================

Defines the grid search over the admissible pipeline parameters and the
certification of the bound comparisons:

-   :class:`sunit_bounds.SearchSpec`
-   :func:`sunit_bounds.load_search_spec`
-   :func:`sunit_bounds.grid_search`
-   :func:`sunit_bounds.pareto_front`
-   :class:`sunit_bounds.ComparisonReport`
-   :func:`sunit_bounds.compare_evertse`
-   :func:`sunit_bounds.theorem_form_check`
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import mpmath
import toml
from colour.hints import Any, Dict, List, Literal, Tuple

from sunit_bounds.common import (
    ComparisonFailure,
    DominanceUnverified,
    EmptyFeasibleSet,
    NonPositiveCoefficient,
    PreconditionViolation,
    as_mpf,
    working_precision,
)
from sunit_bounds.evertse_pipeline import (
    CHOICES,
    CONSTANTS_THEOREM,
    BoundBreakdown,
    EvertseParams,
    assemble_bound,
    evaluate_bound_log,
    evertse_bound_log,
    min_k,
    theorem_bound_log,
)
from sunit_bounds.exact_arith import ExactRational, as_rational

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "SearchSpec",
    "load_search_spec",
    "grid_search",
    "pareto_front",
    "ComparisonReport",
    "compare_evertse",
    "theorem_form_check",
]


def _rational_range(lo: Any, hi: Any, step: Any) -> List[ExactRational]:
    """Return the exact arithmetic progression :math:`lo, lo + step, ... \\leq hi`."""

    lo, hi, step = as_rational(lo), as_rational(hi), as_rational(step)

    values = []
    value = lo
    while value <= hi:
        values.append(value)
        value += step

    return values


@dataclass(frozen=True)
class SearchSpec:
    """
    Define a parameter grid and its objective.

    Parameters
    ----------
    B_range
        :math:`B` grid as ``(lo, hi, step)``.
    r0_range
        :math:`r_0` grid as ``(lo, hi, step)``.
    ln2C_range
        :math:`\\ln 2C` grid as ``(lo, hi, step)``.
    n_range
        Inclusive :math:`n` range as ``(lo, hi)``, scanned exhaustively.
    k_policy
        ``"minimal"`` to use :func:`sunit_bounds.min_k` or an explicit
        :math:`k`.
    m
        Degree of the number field of the objective.
    s
        Number of places of the objective.
    top
        Number of best results kept, 0 keeps all the feasible candidates.
    workers
        Number of worker processes, *None* or 1 evaluates in process.

    Examples
    --------
    >>> spec = SearchSpec(("0.834", "0.834", "0.001"), (1600, 1600, 1),
    ...                   ("7.8", "7.8", "0.1"), (45, 45))
    >>> spec.B_values
    [Fraction(417, 500)]
    """

    B_range: Tuple[Any, Any, Any]
    r0_range: Tuple[int, int, int]
    ln2C_range: Tuple[Any, Any, Any]
    n_range: Tuple[int, int]
    k_policy: Literal["minimal"] | int = "minimal"
    m: int = 1
    s: int = 1
    top: int = 10
    workers: int | None = None

    def __post_init__(self) -> None:
        for name in ("B_range", "r0_range", "ln2C_range"):
            lo, hi, step = getattr(self, name)
            if as_rational(step) <= 0:
                raise ValueError(f'"{name}" step must be positive, got {step}!')

            if as_rational(lo) > as_rational(hi):
                raise ValueError(f'"{name}" is empty: {lo} > {hi}!')

        lo, hi = self.n_range
        if lo < 1 or lo > hi:
            raise ValueError(
                f'"n_range" must satisfy 1 <= lo <= hi, got {self.n_range}!'
            )

        if self.k_policy != "minimal" and (
            not isinstance(self.k_policy, int) or self.k_policy < 1
        ):
            raise ValueError(
                f'"k_policy" must be "minimal" or a positive integer, got '
                f"{self.k_policy}!"
            )

        if self.m < 1 or self.s < 1:
            raise ValueError(
                f'"m" and "s" must be at least 1, got {self.m} and {self.s}!'
            )

    @property
    def B_values(self) -> List[ExactRational]:
        """Return the :math:`B` grid values."""

        return _rational_range(*self.B_range)

    @property
    def r0_values(self) -> List[int]:
        """Return the :math:`r_0` grid values."""

        lo, hi, step = self.r0_range

        return list(range(int(lo), int(hi) + 1, int(step)))

    @property
    def ln2C_values(self) -> List[ExactRational]:
        """Return the :math:`\\ln 2C` grid values."""

        return _rational_range(*self.ln2C_range)


def load_search_spec(path: str) -> SearchSpec:
    """
    Load a :class:`sunit_bounds.SearchSpec` from a flat *TOML* document whose
    keys are the :class:`sunit_bounds.SearchSpec` field names.

    Grid bounds and steps given as strings are parsed exactly, e.g.
    ``B_range = ["0.830", "0.838", "0.002"]``.
    """

    document = toml.load(path)

    known = set(SearchSpec.__dataclass_fields__)
    unknown = set(document) - known
    if unknown:
        raise ValueError(f'"{path}" has unknown keys: {sorted(unknown)}!')

    for key in ("B_range", "r0_range", "ln2C_range", "n_range"):
        if key in document:
            document[key] = tuple(
                str(value) if isinstance(value, float) else value
                for value in document[key]
            )

    return SearchSpec(**document)


def _with_n_step4(breakdown: BoundBreakdown, n: int) -> BoundBreakdown:
    """Return given breakdown re-assembled for another :math:`n`."""

    params = replace(breakdown.params, n_step4=n)

    with working_precision():
        updated = replace(
            breakdown,
            params=params,
            base_m=2 * mpmath.exp(3 * as_mpf(params.ln2C) / n),
            base_s=n,
        )

    updated.ln_bound = evaluate_bound_log(updated, params.m, params.s)

    return updated


def _evaluate_candidate(
    arguments: Tuple[ExactRational, int, ExactRational, SearchSpec],
) -> List[BoundBreakdown]:
    """
    Return the feasible breakdowns of given :math:`(B, r_0, \\ln 2C)` over the
    :math:`n` range, an empty list if the candidate is infeasible.
    """

    B, r0, ln2C, spec = arguments

    try:
        k = min_k(B, r0) if spec.k_policy == "minimal" else int(spec.k_policy)
        n_lo, n_hi = spec.n_range
        breakdown = assemble_bound(EvertseParams(B, r0, k, ln2C, n_lo, spec.m, spec.s))
    except (PreconditionViolation, NonPositiveCoefficient, DominanceUnverified):
        return []

    return [breakdown] + [
        _with_n_step4(breakdown, n) for n in range(n_lo + 1, n_hi + 1)
    ]


def _sort_key(breakdown: BoundBreakdown) -> Tuple:
    params = breakdown.params

    return (breakdown.ln_bound, params.B, params.r0, params.ln2C, params.n_step4)


def grid_search(spec: SearchSpec) -> List[BoundBreakdown]:
    """
    Search given parameter grid and return the best breakdowns sorted by
    increasing bound at :math:`(m, s)`.

    Ties are broken by :math:`(B, r_0, \\ln 2C, n)`, the result does not depend
    on the number of workers.

    Parameters
    ----------
    spec
        Search specification.

    Returns
    -------
    :class:`list`
        Ranked breakdowns.

    Raises
    ------
    EmptyFeasibleSet
        If no candidate satisfies the parameter constraints.

    Examples
    --------
    >>> spec = SearchSpec(("0.84", "0.84", "0.01"), (100, 100, 1),
    ...                   ("7.5", "7.5", "0.1"), (47, 47))
    >>> grid_search(spec)[0].N
    31
    """

    candidates = [
        (B, r0, ln2C, spec)
        for B in spec.B_values
        for r0 in spec.r0_values
        for ln2C in spec.ln2C_values
    ]

    workers = spec.workers or 1
    if workers > 1:
        max_workers = min(workers, os.cpu_count() or 1)
        with ProcessPoolExecutor(max_workers=max_workers) as executor:
            evaluated = list(executor.map(_evaluate_candidate, candidates, chunksize=8))
    else:
        evaluated = [_evaluate_candidate(candidate) for candidate in candidates]

    breakdowns = [breakdown for results in evaluated for breakdown in results]

    if not breakdowns:
        raise EmptyFeasibleSet(
            f"None of the {len(candidates)} grid candidates satisfies the "
            f"parameter constraints!"
        )

    breakdowns.sort(key=_sort_key)

    return breakdowns[: spec.top] if spec.top else breakdowns


def pareto_front(breakdowns: List[BoundBreakdown]) -> List[BoundBreakdown]:
    """
    Return the breakdowns whose coefficient tuple
    :math:`(c_s, b_s, b_m, b_{s'})` is not dominated by another one, i.e. the
    bounds that are the smallest for some :math:`(m, s)` independently of the
    symbolic form.

    Examples
    --------
    >>> choices = [assemble_bound(CHOICES[name].params) for name in ("I", "II")]
    >>> len(pareto_front(choices))
    2
    """

    def dominates(a: BoundBreakdown, b: BoundBreakdown) -> bool:
        pairs = list(zip(a.coefficient_tuple, b.coefficient_tuple))

        return all(x <= y for x, y in pairs) and any(x < y for x, y in pairs)

    front = [
        candidate
        for candidate in breakdowns
        if not any(dominates(other, candidate) for other in breakdowns)
    ]

    return sorted(front, key=lambda breakdown: breakdown.coefficient_tuple)


@dataclass
class ComparisonReport:
    """
    Define the outcome of a bound comparison over an :math:`(m, s)` grid.

    Parameters
    ----------
    name
        Compared bound.
    m_max, s_max
        Grid extent.
    cells
        Number of checked cells.
    worst_margin
        Smallest log margin, i.e. compared log bound minus the best *Choice*
        log bound.
    worst_cell
        Cell :math:`(m, s)` of the smallest margin.
    dominating_choice
        *Choice* whose coefficient tuple is dominated by the compared
        constants, if any.
    constants
        Compared constants as given.
    """

    name: str
    m_max: int
    s_max: int
    cells: int = 0
    worst_margin: Any = None
    worst_cell: Tuple[int, int] | None = None
    dominating_choice: str | None = None
    constants: Dict[str, str] = field(default_factory=dict)


def _choice_breakdowns() -> Dict[str, BoundBreakdown]:
    return {name: assemble_bound(CHOICES[name].params) for name in ("I", "II")}


def _compare(
    report: ComparisonReport,
    bound_log: Any,
    strict: bool,
) -> ComparisonReport:
    if report.m_max < 1 or report.s_max < 1:
        raise ValueError(
            f'"m_max" and "s_max" must be at least 1, got {report.m_max} and '
            f"{report.s_max}!"
        )

    breakdowns = list(_choice_breakdowns().values())

    for m in range(1, report.m_max + 1):
        for s in range(1, report.s_max + 1):
            ours = min(evaluate_bound_log(breakdown, m, s) for breakdown in breakdowns)
            theirs = bound_log(m, s)
            margin = theirs - ours

            report.cells += 1
            if report.worst_margin is None or margin < report.worst_margin:
                report.worst_margin, report.worst_cell = margin, (m, s)

            if margin < 0 or (strict and margin == 0):
                raise ComparisonFailure(
                    f'"{report.name}" comparison fails at (m, s) = ({m}, {s}): '
                    f"best Choice log bound {mpmath.nstr(ours, 12)} vs "
                    f"{mpmath.nstr(theirs, 12)}!",
                    (m, s),
                )

    return report


def compare_evertse(m_max: int = 10, s_max: int = 10) -> ComparisonReport:
    """
    Check that the best *Choice* bound is strictly smaller than
    :math:`(2 + 5 \\cdot 3.26396^m)49^s` for all
    :math:`1 \\leq m \\leq m_{max}` and :math:`1 \\leq s \\leq s_{max}`.

    Raises
    ------
    ComparisonFailure
        If a cell fails, the witness is :math:`(m, s)`.

    Examples
    --------
    >>> compare_evertse(2, 2).cells
    4
    """

    return _compare(
        ComparisonReport("evertse", m_max, s_max), evertse_bound_log, strict=True
    )


def theorem_form_check(
    m_max: int = 10,
    s_max: int = 10,
    coeff_small: Any = CONSTANTS_THEOREM["coeff_small"],
    base_m: Any = CONSTANTS_THEOREM["base_m"],
    base_s: Any = CONSTANTS_THEOREM["base_s"],
) -> ComparisonReport:
    """
    Certify the bound :math:`(c + 5b_m^m)b_s^s`, default to
    :math:`c = 3.1, b_m = 3.4, b_s = 45`.

    A *Choice* must be coefficientwise dominated, i.e. its coefficient tuple
    :math:`(c_s, b_s, b_m, b_{s'})` is at most :math:`(c, b_s, b_m, b_s)`,
    which proves the bound for all :math:`(m, s)`. The grid is then checked
    numerically in the log domain.

    Raises
    ------
    ComparisonFailure
        If no *Choice* is dominated, the witness is the compared constants, or
        if a cell fails, the witness is :math:`(m, s)`.

    Examples
    --------
    >>> theorem_form_check(1, 1).dominating_choice
    'I'
    """

    constants = {
        "coeff_small": str(coeff_small),
        "base_m": str(base_m),
        "base_s": str(base_s),
    }
    report = ComparisonReport("theorem", m_max, s_max, constants=constants)

    with working_precision():
        bounds = (
            as_mpf(as_rational(coeff_small)),
            as_mpf(as_rational(base_s)),
            as_mpf(as_rational(base_m)),
            as_mpf(as_rational(base_s)),
        )

        for name, breakdown in _choice_breakdowns().items():
            if all(x <= y for x, y in zip(breakdown.coefficient_tuple, bounds)):
                report.dominating_choice = name
                break
        else:
            raise ComparisonFailure(
                f"No Choice coefficient tuple is dominated by (c, b_s, b_m, b_s) = "
                f"({coeff_small}, {base_s}, {base_m}, {base_s})!",
                constants,
            )

    return _compare(
        report,
        lambda m, s: theorem_bound_log(m, s, coeff_small, base_m, base_s),
        strict=False,
    )

