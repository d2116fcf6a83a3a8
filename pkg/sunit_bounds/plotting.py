"""
Plotting
========

Defines the plotting of the bound pipeline diagnostics:

-   :func:`sunit_bounds.plotting.plot_part_sizes`
-   :func:`sunit_bounds.plotting.plot_bound_comparison`
-   :func:`sunit_bounds.plotting.plot_pareto_front`
"""

from __future__ import annotations

import matplotlib.pyplot as plt
import numpy as np
from colour.hints import Any, Dict, List, Tuple
from colour.plotting import CONSTANTS_COLOUR_STYLE, artist, render

from sunit_bounds.common import working_precision
from sunit_bounds.evertse_pipeline import (
    BoundBreakdown,
    evaluate_bound_log,
    evertse_bound_log,
    part_sizes,
)
from sunit_bounds.optimizer import pareto_front

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "plot_part_sizes",
    "plot_bound_comparison",
    "plot_pareto_front",
]


def plot_part_sizes(
    breakdown: BoundBreakdown, logA_max: float = 50, samples: int = 101, **kwargs: Any
) -> Tuple[plt.Figure, plt.Axes]:
    """
    Plot the logarithms of the *f-part* and *g-part* of given breakdown
    against :math:`\\log A`.

    Parameters
    ----------
    breakdown
        Bound derivation trace.
    logA_max
        Largest :math:`\\log A`.
    samples
        Number of samples.

    Other Parameters
    ----------------
    kwargs
        {:func:`colour.plotting.artist`, :func:`colour.plotting.render`},
        See the documentation of the previously listed definitions.

    Returns
    -------
    :class:`tuple`
        Current figure and axes.
    """

    _figure, axes = artist(**kwargs)

    logA = np.linspace(0, logA_max, samples)
    sizes = np.array(
        [[float(size) for size in part_sizes(breakdown, value)] for value in logA]
    )

    axes.plot(logA, sizes[:, 0], label="f-part")
    axes.plot(logA, sizes[:, 1], label="g-part", linestyle="--")

    settings: Dict[str, Any] = {
        "axes": axes,
        "legend": True,
        "title": f"Part Sizes - N = {breakdown.N}, k = {breakdown.params.k}",
        "x_label": "log A",
        "y_label": "log Part",
    }
    settings.update(kwargs)

    return render(**settings)


def plot_bound_comparison(
    breakdowns: Dict[str, BoundBreakdown],
    m_max: int = 10,
    s: int = 1,
    **kwargs: Any,
) -> Tuple[plt.Figure, plt.Axes]:
    """
    Plot the logarithm of the counting bound of given breakdowns and of the
    reference bound :math:`(2 + 5 \\cdot 3.26396^m)49^s` against :math:`m`.

    Parameters
    ----------
    breakdowns
        Bound derivation traces keyed by label.
    m_max
        Largest degree :math:`m`.
    s
        Number of places :math:`s`.

    Other Parameters
    ----------------
    kwargs
        {:func:`colour.plotting.artist`, :func:`colour.plotting.render`},
        See the documentation of the previously listed definitions.

    Returns
    -------
    :class:`tuple`
        Current figure and axes.
    """

    _figure, axes = artist(**kwargs)

    m = np.arange(1, m_max + 1)

    with working_precision():
        for label, breakdown in breakdowns.items():
            axes.plot(
                m,
                [float(evaluate_bound_log(breakdown, int(i), s)) for i in m],
                label=label,
                marker="o",
            )

        axes.plot(
            m,
            [float(evertse_bound_log(int(i), s)) for i in m],
            label="Reference",
            color=CONSTANTS_COLOUR_STYLE.colour.dark,
            linestyle="--",
        )

    settings: Dict[str, Any] = {
        "axes": axes,
        "legend": True,
        "title": f"Counting Bound - s = {s}",
        "x_label": "m",
        "y_label": "log Bound",
    }
    settings.update(kwargs)

    return render(**settings)


def plot_pareto_front(
    breakdowns: List[BoundBreakdown], **kwargs: Any
) -> Tuple[plt.Figure, plt.Axes]:
    """
    Plot the :math:`(c_s, b_m)` coefficients of given ranked breakdowns and
    highlight their *Pareto* front.

    Parameters
    ----------
    breakdowns
        Ranked bound derivation traces.

    Other Parameters
    ----------------
    kwargs
        {:func:`colour.plotting.artist`, :func:`colour.plotting.render`},
        See the documentation of the previously listed definitions.

    Returns
    -------
    :class:`tuple`
        Current figure and axes.
    """

    _figure, axes = artist(**kwargs)

    def coordinates(items: List[BoundBreakdown]) -> np.ndarray:
        return np.array(
            [[float(item.coeff_small), float(item.base_m)] for item in items]
        ).reshape(-1, 2)

    candidates = coordinates(breakdowns)
    front = coordinates(pareto_front(breakdowns))

    axes.scatter(candidates[:, 0], candidates[:, 1], label="Candidates", alpha=0.5)
    axes.scatter(
        front[:, 0],
        front[:, 1],
        label="Pareto Front",
        color=CONSTANTS_COLOUR_STYLE.colour.dark,
        marker="x",
    )

    settings: Dict[str, Any] = {
        "axes": axes,
        "legend": True,
        "title": "Pareto Front",
        "x_label": "(N + k) / R(B)",
        "y_label": "2 (2C)^(3/n)",
    }
    settings.update(kwargs)

    return render(**settings)
