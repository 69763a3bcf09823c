"""Seeded random posets for the CLI and the test corpus.

Every function takes an integer seed and is deterministic in it; the
general generator drives the CLI, the specialized builders shape corpus
instances for particular pipelines (flat with a crown, crown-free extremal
points, guaranteed improper crowns, decorated big crowns).
"""

from __future__ import annotations

import random

from .crowns import improper_family
from .oracle import crown_free
from .poset import Poset, bits


def _connect(points: list[str], pairs: list[tuple[str, str]], levels: dict[str, int]):
    """Join comparability components by adding level-respecting generators."""
    poset = Poset.from_generators(points, pairs)
    while not poset.is_connected():
        adj = poset.comparability_adjacency()
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= adj[i]
            frontier = nxt & ~seen
            seen |= nxt
        inside = [p for i, p in enumerate(poset.points) if (seen >> i) & 1]
        outside = [p for i, p in enumerate(poset.points) if not (seen >> i) & 1]
        # prefer a cross-level pair: joining equal levels can stretch chains
        chosen = None
        for v in outside:
            for u in inside:
                if levels[u] != levels[v]:
                    chosen = (u, v)
                    break
            if chosen:
                break
        if chosen is None:
            chosen = (inside[0], outside[0])
        u, v = chosen
        # orient by level, then by index; cross-component edges cannot cycle
        if (levels[u], poset.index[u]) <= (levels[v], poset.index[v]):
            pairs.append((u, v))
        else:
            pairs.append((v, u))
        poset = Poset.from_generators(points, pairs)
    return poset


def random_connected_poset(
    seed: int, n_points: int = 8, max_height: int = 2, density: float = 0.25
) -> Poset:
    """Random connected poset: points get levels up to ``max_height``, each
    non-bottom point one guaranteed generator downwards plus density-driven
    extras.  Identical arguments give an identical poset."""
    if n_points < 1:
        raise ValueError("need at least one point")
    if n_points > 1 and max_height < 1:
        raise ValueError("a connected poset on several points needs height >= 1")
    rng = random.Random(seed)
    points = [f"p{i}" for i in range(n_points)]
    levels = {points[0]: 0}
    for p in points[1:]:
        levels[p] = rng.randint(0, max_height)
    pairs: list[tuple[str, str]] = []
    order = sorted(points, key=lambda p: (levels[p], points.index(p)))
    for p in order:
        lows = [q for q in order if levels[q] < levels[p]]
        if not lows:
            levels[p] = 0
            continue
        pairs.append((rng.choice(lows), p))
        for q in lows:
            if rng.random() < density:
                pairs.append((q, p))
    return _connect(points, pairs, levels)


def random_flat_poset(seed: int, n_points: int = 10, density: float = 0.35) -> Poset:
    """Random connected flat poset: a bipartite split into minima and maxima
    with density-driven edges."""
    if n_points < 2:
        raise ValueError("a flat poset needs at least two points")
    rng = random.Random(seed)
    points = [f"p{i}" for i in range(n_points)]
    n_min = rng.randint(1, n_points - 1)
    mins = points[:n_min]
    maxs = points[n_min:]
    pairs = []
    for lo in mins:
        for hi in maxs:
            if rng.random() < density:
                pairs.append((lo, hi))
    levels = {p: 0 if p in mins else 1 for p in points}
    return _connect(points, pairs, levels)


def random_flat_with_crown(seed: int, n_points: int = 10, density: float = 0.4) -> Poset:
    """Random connected flat poset guaranteed to contain a crown."""
    for attempt in range(1000):
        poset = random_flat_poset(seed * 1009 + attempt, n_points, density)
        if not crown_free(poset):
            return poset
    raise RuntimeError("could not generate a flat poset with a crown")


def random_crown_free_flat(seed: int, n_points: int = 9) -> Poset:
    """Random connected flat poset whose comparability graph is a tree."""
    if n_points < 1:
        raise ValueError("need at least one point")
    rng = random.Random(seed)
    points = [f"p{i}" for i in range(n_points)]
    depth = {points[0]: 0}
    pairs = []
    for p in points[1:]:
        parent = rng.choice([q for q in points if q in depth])
        depth[p] = depth[parent] + 1
        if depth[parent] % 2 == 0:
            pairs.append((parent, p))
        else:
            pairs.append((p, parent))
    return Poset.from_generators(points, pairs)


def add_midpoints(poset: Poset, seed: int, k: int, spanning: bool = True) -> Poset:
    """Insert ``k`` non-extremal points without touching the extremal order.

    Each new point sits strictly inside existing relations: either across a
    full 2x2 block (creating an improper crown) when ``spanning`` allows and
    one exists, or along a single edge.  The extremal sub-poset is unchanged
    because every added relation already holds there.
    """
    rng = random.Random(seed)
    doc = poset.to_doc()
    points = list(doc["points"])
    pairs = [tuple(p) for p in doc["pairs"]]
    mins = list(poset.minimal_points())
    maxs = list(poset.maximal_points())
    blocks = []
    for i, lo1 in enumerate(mins):
        for lo2 in mins[i + 1 :]:
            tops = [
                hi for hi in maxs if poset.lt(lo1, hi) and poset.lt(lo2, hi)
            ]
            for a, hi1 in enumerate(tops):
                for hi2 in tops[a + 1 :]:
                    blocks.append((lo1, lo2, hi1, hi2))
    edges = [
        (lo, hi) for lo in mins for hi in maxs if poset.lt(lo, hi)
    ]
    for t in range(k):
        name = f"z{t}"
        while name in points:
            name = "z" + name
        points.append(name)
        if spanning and blocks and rng.random() < 0.7:
            lo1, lo2, hi1, hi2 = rng.choice(blocks)
            pairs += [(lo1, name), (lo2, name), (name, hi1), (name, hi2)]
        elif edges:
            lo, hi = rng.choice(edges)
            pairs += [(lo, name), (name, hi)]
        else:
            raise ValueError("poset has no edge to hang a midpoint on")
    return Poset.from_generators(points, pairs)


def random_with_improper_crowns(seed: int, n_flat: int = 8, k_mid: int = 2) -> Poset:
    """Random poset with at least one improper 4-crown in its extremal points."""
    for attempt in range(1000):
        flat = random_flat_poset(seed * 2003 + attempt, n_flat, density=0.45)
        if len(flat.minimal_points()) < 2 or len(flat.maximal_points()) < 2:
            continue
        poset = add_midpoints(flat, seed * 131 + attempt, k_mid, spanning=True)
        if improper_family(poset).crowns:
            return poset
    raise RuntimeError("could not generate an instance with improper crowns")
