"""Matplotlib rendering of win/loss tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.colors import ListedColormap
from matplotlib.patches import Patch

from .solver import Outcome


def render_outcome_grid(rows, path: str, m: int, b: int = 0) -> str:
    """Save a P/N grid image for boards (a, [b,] c) and return the path.

    ``rows`` is an iterable of (state, classification) as produced by
    enumerate_table; for m < 4 the vertical axis is simply column 2 (or
    absent), for m = 4 the grid fixes the column-2 count at ``b``.
    """
    cells: dict[tuple[int, int], Outcome] = {}
    for state, cls in rows:
        counts = state.counts
        if m == 4 and counts[1] != b:
            continue
        a = counts[0]
        y = counts[-1] if m >= 3 else 0
        cells[(a, y)] = cls.outcome
    if not cells:
        raise ValueError("no rows to plot")
    a_max = max(a for a, _ in cells)
    y_max = max(y for _, y in cells)
    grid = [[(1 if cells.get((a, y)) is Outcome.N else 0)
             for a in range(a_max + 1)]
            for y in range(y_max + 1)]

    fig, ax = plt.subplots(figsize=(max(4, a_max * 0.22), max(3, y_max * 0.22)))
    cmap = ListedColormap(["#3f7fbf", "#d95f5f"])
    ax.imshow(grid, cmap=cmap, origin="lower", vmin=0, vmax=1, aspect="equal")
    ax.set_xlabel("column 1 count")
    if m >= 3:
        ax.set_ylabel(f"column {m - 1} count")
    else:
        ax.set_yticks([])
    title = f"win/loss map, black hole at F{m}"
    if m == 4:
        title += f" (column 2 = {b})"
    ax.set_title(title)
    ax.legend(
        handles=[Patch(color="#3f7fbf", label="P (mover loses)"),
                 Patch(color="#d95f5f", label="N (mover wins)")],
        loc="upper left", bbox_to_anchor=(1.02, 1.0), frameon=False,
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
