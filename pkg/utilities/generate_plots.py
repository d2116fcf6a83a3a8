#!/usr/bin/env python
"""
Generate Plots
==============
"""

from __future__ import annotations

import matplotlib as mpl

mpl.use("AGG")

import os

import matplotlib.pyplot as plt
from colour.plotting import colour_style
from colour.utilities import filter_warnings

from sunit_bounds.evertse_pipeline import CHOICES, assemble_bound
from sunit_bounds.optimizer import SearchSpec, grid_search
from sunit_bounds.plotting import (
    plot_bound_comparison,
    plot_pareto_front,
    plot_part_sizes,
)

__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "generate_documentation_plots",
]


def generate_documentation_plots(output_directory: str):
    """
    Generate documentation plots.

    Parameters
    ----------
    output_directory
        Output directory.
    """

    os.makedirs(output_directory, exist_ok=True)

    filter_warnings()

    colour_style()

    arguments = {
        "tight_layout": True,
        "show": False,
    }

    breakdowns = {
        f"Choice {name}": assemble_bound(choice.params)
        for name, choice in CHOICES.items()
    }

    for name, breakdown in breakdowns.items():
        arguments["filename"] = os.path.join(
            output_directory, f"Plotting_PartSizes_{name.replace(' ', '')}.png"
        )
        plt.close(plot_part_sizes(breakdown, **arguments)[0])

    arguments["filename"] = os.path.join(
        output_directory, "Plotting_BoundComparison.png"
    )
    plt.close(plot_bound_comparison(breakdowns, **arguments)[0])

    grid = grid_search(
        SearchSpec(
            ("0.826", "0.846", "0.004"),
            (800, 1600, 400),
            ("7.6", "7.9", "0.1"),
            (44, 47),
            top=0,
        )
    )

    arguments["filename"] = os.path.join(output_directory, "Plotting_ParetoFront.png")
    plt.close(plot_pareto_front(grid, **arguments)[0])


if __name__ == "__main__":
    os.chdir(os.path.dirname(__file__))

    generate_documentation_plots(os.path.join("..", "docs", "_static"))
