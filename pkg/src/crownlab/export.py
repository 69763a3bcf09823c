"""DOT renderings: Hasse diagrams and the two multigraphs.

Multigraph convention: L-edges solid, U-edges dashed; loops are omitted
(every vertex carries both) and noted in a comment.
"""

from __future__ import annotations

from .multigraphs import FragmentGraph, ImproperCrownGraph, fragment_label
from .poset import Poset


def hasse_dot(poset: Poset, name: str = "poset") -> str:
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", '  node [shape=plaintext];']
    for p in poset.points:
        lines.append(f'  "{p}";')
    for x, y in poset.covers():
        lines.append(f'  "{x}" -> "{y}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def fragment_graph_dot(graph: FragmentGraph, name: str = "template_fragments") -> str:
    lines = [
        f'graph "{name}" {{',
        "  // loops omitted: every vertex has an L-loop and a U-loop",
        '  node [shape=ellipse];',
    ]
    for s in graph.vertices:
        lines.append(f'  "{fragment_label(s)}";')
    seen = set()
    for i, s in enumerate(graph.vertices):
        for j, t in enumerate(graph.vertices):
            if j <= i:
                continue
            if graph.has_l_edge(s, t):
                lines.append(
                    f'  "{fragment_label(s)}" -- "{fragment_label(t)}" [style=solid];'
                )
            if graph.has_u_edge(s, t):
                lines.append(
                    f'  "{fragment_label(s)}" -- "{fragment_label(t)}" [style=dashed];'
                )
    del seen
    lines.append("}")
    return "\n".join(lines) + "\n"


def improper_crown_graph_dot(
    graph: ImproperCrownGraph, name: str = "improper_crowns"
) -> str:
    lines = [
        f'graph "{name}" {{',
        "  // loops omitted: every vertex has an L-loop and a U-loop",
        '  node [shape=box];',
    ]
    for i in range(graph.n):
        lines.append(f'  "{graph.label(i)}";')
    for (i, j), witness in sorted(graph.l_edges.items()):
        if i != j:
            lines.append(
                f'  "{graph.label(i)}" -- "{graph.label(j)}" '
                f'[style=solid, label="{witness}"];'
            )
    for (i, j), witness in sorted(graph.u_edges.items()):
        if i != j:
            lines.append(
                f'  "{graph.label(i)}" -- "{graph.label(j)}" '
                f'[style=dashed, label="{witness}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
