"""Brute-force ground truth on small instances.

Exhaustive backtracking over order-preserving maps, ordered along a linear
extension of the source so every point below the current one is already
assigned.  Negative answers always come from a completed search; running
out of budget raises instead of answering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, DuplicatePoint, NotFlat
from .poset import PointMap, Poset, bits


@dataclass(frozen=True)
class OracleBudget:
    max_source_size: int = 14
    max_maps: int = 100_000_000

    def __post_init__(self):
        if self.max_source_size <= 0 or self.max_maps <= 0:
            raise ValueError("oracle budget must be positive")


@dataclass(frozen=True)
class OracleVerdict:
    exists: bool
    witness: PointMap | None


def _linear_extension(poset: Poset) -> list[int]:
    return sorted(
        range(poset.n), key=lambda i: (bin(poset.down_mask(i)).count("1"), i)
    )


def _check_budget(budget: OracleBudget, source: Poset, n_targets: int, free: int):
    if source.n > budget.max_source_size:
        raise BudgetExceeded(
            f"source has {source.n} points, cap is {budget.max_source_size}"
        )
    if n_targets**free > budget.max_maps:
        raise BudgetExceeded(
            f"worst case {n_targets}**{free} maps, cap is {budget.max_maps}"
        )


def oracle_retraction_exists(
    poset: Poset, retract_points, budget: OracleBudget | None = None
) -> OracleVerdict:
    """Decide by exhaustion whether the induced sub-poset on ``retract_points``
    is a retract, returning a witness retraction when it is."""
    budget = budget or OracleBudget()
    fixed = [poset._require(p) for p in retract_points]
    if len(set(fixed)) != len(fixed):
        raise DuplicatePoint(sorted(retract_points))
    fixed_set = set(fixed)
    targets = sorted(fixed_set)
    free = [i for i in _linear_extension(poset) if i not in fixed_set]
    _check_budget(budget, poset, len(targets), len(free))

    assign: list[int | None] = [None] * poset.n
    for i in fixed_set:
        assign[i] = i

    def feasible(i: int, image: int) -> bool:
        up_i = poset.up_mask(i)
        down_i = poset.down_mask(i)
        for j in range(poset.n):
            a = assign[j]
            if a is None or j == i:
                continue
            if (down_i >> j) & 1 and not (poset.up_mask(a) >> image) & 1:
                return False
            if (up_i >> j) & 1 and not (poset.up_mask(image) >> a) & 1:
                return False
        return True

    def search(k: int) -> bool:
        if k == len(free):
            return True
        i = free[k]
        for image in targets:
            if feasible(i, image):
                assign[i] = image
                if search(k + 1):
                    return True
                assign[i] = None
        return False

    if search(0):
        values = tuple(poset.points[assign[i]] for i in range(poset.n))
        return OracleVerdict(True, PointMap(poset, poset, values))
    return OracleVerdict(False, None)


def oracle_surjective_hom_exists(
    poset: Poset, target: Poset, budget: OracleBudget | None = None
) -> OracleVerdict:
    """Decide by exhaustion whether a surjective homomorphism onto ``target``
    exists, returning a witness when it does."""
    budget = budget or OracleBudget()
    order = _linear_extension(poset)
    _check_budget(budget, poset, target.n, poset.n)

    assign: list[int | None] = [None] * poset.n
    hits = [0] * target.n
    missing = target.n

    def feasible(i: int, image: int) -> bool:
        down_i = poset.down_mask(i)
        for j in range(poset.n):
            a = assign[j]
            if a is None or j == i:
                continue
            # order[k] is a linear extension, so only lower points are assigned
            if (down_i >> j) & 1 and not (target.up_mask(a) >> image) & 1:
                return False
        return True

    def search(k: int) -> bool:
        nonlocal missing
        if missing > poset.n - k:
            return False
        if k == poset.n:
            return missing == 0
        i = order[k]
        for image in range(target.n):
            if feasible(i, image):
                assign[i] = image
                hits[image] += 1
                if hits[image] == 1:
                    missing -= 1
                if search(k + 1):
                    return True
                hits[image] -= 1
                if hits[image] == 0:
                    missing += 1
                assign[i] = None
        return False

    if search(0):
        values = tuple(target.points[assign[i]] for i in range(poset.n))
        return OracleVerdict(True, PointMap(poset, target, values))
    return OracleVerdict(False, None)


def crown_free(poset: Poset) -> bool:
    """True when a flat poset contains no crown.

    Any cycle of the comparability graph contains an induced one, and in a
    flat poset induced cycles are exactly the crowns, so this reduces to
    acyclicity of the comparability graph.
    """
    if poset.height() > 1:
        raise NotFlat("crown freeness is decided on flat posets")
    adj = poset.comparability_adjacency()
    n = poset.n
    edges = sum(bin(m).count("1") for m in adj) // 2
    seen = 0
    components = 0
    for start in range(n):
        if (seen >> start) & 1:
            continue
        components += 1
        seen |= 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= adj[i]
            frontier = nxt & ~seen
            seen |= nxt
    return edges == n - components
