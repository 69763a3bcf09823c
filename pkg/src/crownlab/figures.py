"""Matplotlib renderings for the report path.

Hasse diagrams are laid out by chain level; multigraphs on a circle with
solid L-edges and dashed U-edges (loops omitted, as in the DOT export).
All figures go straight to files via the Agg backend.
"""

from __future__ import annotations

import math
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .multigraphs import ImproperCrownGraph  # noqa: E402
from .poset import Poset  # noqa: E402


def draw_hasse(poset: Poset, path: str, title: str | None = None) -> None:
    levels = poset.levels()
    by_level = defaultdict(list)
    for i, p in enumerate(poset.points):
        by_level[levels[i]].append(p)
    pos = {}
    for level, pts in by_level.items():
        for k, p in enumerate(pts):
            pos[p] = ((k + 1) / (len(pts) + 1), level)
    fig, ax = plt.subplots(figsize=(6, 4))
    for x, y in poset.covers():
        ax.plot(
            [pos[x][0], pos[y][0]],
            [pos[x][1], pos[y][1]],
            color="0.4",
            lw=1.2,
            zorder=1,
        )
    for p, (px, py) in pos.items():
        ax.scatter([px], [py], s=260, color="white", edgecolor="black", zorder=2)
        ax.annotate(p, (px, py), ha="center", va="center", fontsize=8, zorder=3)
    ax.set_xlim(0, 1)
    ax.set_ylim(-0.5, max(levels) + 0.5)
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def draw_improper_crown_graph(
    graph: ImproperCrownGraph, path: str, title: str | None = None
) -> None:
    n = max(graph.n, 1)
    pos = {
        i: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
        for i in range(graph.n)
    }
    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    for (i, j) in sorted(graph.l_edges):
        if i != j:
            ax.add_patch(
                FancyArrowPatch(
                    pos[i], pos[j], connectionstyle="arc3,rad=0.12",
                    arrowstyle="-", color="black", lw=1.3,
                )
            )
    for (i, j) in sorted(graph.u_edges):
        if i != j:
            ax.add_patch(
                FancyArrowPatch(
                    pos[i], pos[j], connectionstyle="arc3,rad=-0.12",
                    arrowstyle="-", color="0.35", lw=1.3, linestyle="--",
                )
            )
    for i in range(graph.n):
        ax.scatter(*pos[i], s=420, color="white", edgecolor="black", zorder=2)
        ax.annotate(
            graph.label(i), pos[i], ha="center", va="center", fontsize=6, zorder=3
        )
    ax.set_xlim(-1.4, 1.4)
    ax.set_ylim(-1.4, 1.4)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(
        title or "improper 4-crowns (solid: shared minimum, dashed: shared maximum)",
        fontsize=9,
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
