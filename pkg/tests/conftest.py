"""Shared fixtures and deterministic corpus builders."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from crownlab import fixtures as fx
from crownlab.crowns import improper_family
from crownlab.generator import (
    add_midpoints,
    random_connected_poset,
    random_crown_free_flat,
    random_flat_with_crown,
    random_with_improper_crowns,
)
from crownlab.oracle import crown_free
from crownlab.poset import Poset


ALL_FIXTURE_POSETS = {name: build() for name, build in fx.ALL_FIXTURES.items()}


@lru_cache(maxsize=None)
def general_corpus(count: int = 300) -> tuple[Poset, ...]:
    """Connected posets with at most 12 points, mixed sizes and heights."""
    out = []
    seed = 0
    while len(out) < count:
        rng = random.Random(f"corpus-{seed}")
        n = rng.randint(4, 12)
        h = rng.choice((1, 1, 2, 2, 3))
        density = rng.choice((0.15, 0.3, 0.5))
        poset = random_connected_poset(seed, n_points=n, max_height=h, density=density)
        out.append(poset)
        seed += 1
    return tuple(out)


@lru_cache(maxsize=None)
def small_corpus(count: int = 60, max_points: int = 8) -> tuple[Poset, ...]:
    out = []
    seed = 1000
    while len(out) < count:
        rng = random.Random(f"small-{seed}")
        n = rng.randint(4, max_points)
        poset = random_connected_poset(
            seed, n_points=n, max_height=rng.choice((1, 2, 2, 3)), density=0.35
        )
        out.append(poset)
        seed += 1
    return tuple(out)


@lru_cache(maxsize=None)
def flat_crown_corpus(count: int = 100) -> tuple[Poset, ...]:
    """Flat connected posets (<= 14 points) containing a crown."""
    out = []
    for seed in range(count):
        rng = random.Random(f"flatcrown-{seed}")
        n = rng.randint(6, 14)
        out.append(random_flat_with_crown(seed, n_points=n, density=rng.choice((0.3, 0.45))))
    return tuple(out)


@lru_cache(maxsize=None)
def crown_free_corpus(count: int = 50) -> tuple[Poset, ...]:
    """Posets whose extremal points are crown-free (tree comparability),
    thickened with extremal-preserving midpoints."""
    out = []
    for seed in range(count):
        rng = random.Random(f"crownfree-{seed}")
        flat = random_crown_free_flat(seed, n_points=rng.randint(3, 9))
        k = rng.randint(0, 3)
        poset = add_midpoints(flat, seed + 7000, k, spanning=True) if k else flat
        assert crown_free(poset.induced(poset.extremal_decomposition().extremal))
        out.append(poset)
    return tuple(out)


@lru_cache(maxsize=None)
def improper_corpus(count: int = 100) -> tuple[Poset, ...]:
    """Posets with a non-empty improper crown family."""
    out = []
    for seed in range(count):
        rng = random.Random(f"improper-{seed}")
        poset = random_with_improper_crowns(
            seed, n_flat=rng.randint(6, 9), k_mid=rng.randint(1, 3)
        )
        assert improper_family(poset).crowns
        out.append(poset)
    return tuple(out)


@lru_cache(maxsize=None)
def big_crown_corpus(count: int = 40) -> tuple[tuple[Poset, tuple[str, ...]], ...]:
    """Posets whose extremal points contain a 6- or 8-crown, each paired with
    that crown; decorations may or may not leave the crown a retract of the
    extremal sub-poset."""
    out = []
    seed = 0
    while len(out) < count:
        rng = random.Random(f"bigcrown-{seed}")
        size = rng.choice((6, 6, 8))
        base = fx.big_crown(size)
        doc = base.to_doc()
        points = list(doc["points"])
        pairs = [tuple(p) for p in doc["pairs"]]
        maxs = [f"c{i}" for i in range(1, size, 2)]
        mins = [f"c{i}" for i in range(0, size, 2)]
        for d in range(rng.randint(0, 2)):
            name = f"d{d}"
            points.append(name)
            if rng.random() < 0.5:
                for hi in rng.sample(maxs, rng.randint(1, 2)):
                    pairs.append((name, hi))
            else:
                for lo in rng.sample(mins, rng.randint(1, 2)):
                    pairs.append((lo, name))
        flat = Poset.from_generators(points, pairs)
        if not flat.is_connected() or flat.height() != 1:
            seed += 1
            continue
        poset = add_midpoints(flat, seed + 9000, rng.randint(1, 2), spanning=True)
        if poset.n > 14:
            seed += 1
            continue
        crown = tuple(f"c{i}" for i in range(size))
        out.append((poset, crown))
        seed += 1
    return tuple(out)


def four_subset_crown_filter(poset: Poset):
    """Independent enumeration: filter all 4-subsets of the extremal points."""
    deco = poset.extremal_decomposition()
    found = []
    for quad in combinations(deco.extremal, 4):
        rel = [(p, q) for p in quad for q in quad if poset.lt(p, q)]
        lo = [p for p in quad if not any(q[1] == p for q in rel)]
        hi = [p for p in quad if not any(q[0] == p for q in rel)]
        if len(lo) != 2 or len(hi) != 2 or set(lo) & set(hi):
            continue
        if len(rel) != 4 or any((p, q) not in rel for p in lo for q in hi):
            continue
        inner = {
            z
            for z in poset.points
            if all(poset.lt(p, z) for p in lo) and all(poset.lt(z, q) for q in hi)
        }
        if not inner:
            kind = "proper"
        elif any(
            all(poset.leq(x, z) or poset.leq(z, x) for z in inner) for x in inner
        ):
            kind = "hourglass"
        else:
            kind = "improper"
        found.append((frozenset(quad), frozenset(inner), kind))
    return found
