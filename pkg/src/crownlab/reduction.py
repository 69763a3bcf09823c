"""Height reduction preserving the improper-crown multigraph.

Both constructions keep the crown points of the improper family, drop
everything else, and replace the inner structure by fresh height-one
midpoints: one atom per crown (giving pairwise disjoint singleton inners),
or one atom per inclusion-minimal intersection of inners (preserving which
crown subsets have inners meeting in a common point).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .crowns import CrownFamily, improper_family
from .errors import EmptyFamily
from .multigraphs import improper_crown_graph, labeled_edge_sets
from .poset import Poset


@dataclass(frozen=True)
class ReductionResult:
    poset: Poset
    method: int
    crown_points: tuple[frozenset, ...]  # per original family member
    atom_names: tuple[str, ...]
    fgraph_preserved: bool
    height_ok: bool
    inners_disjoint_singletons: bool | None  # method 1 only
    intersection_pattern_preserved: bool | None  # method 2 only

    @property
    def ok(self) -> bool:
        checks = [self.fgraph_preserved, self.height_ok]
        if self.inners_disjoint_singletons is not None:
            checks.append(self.inners_disjoint_singletons)
        if self.intersection_pattern_preserved is not None:
            checks.append(self.intersection_pattern_preserved)
        return all(checks)


def _fresh_prefix(taken) -> str:
    prefix = "#"
    while any(name.startswith(prefix) for name in taken):
        prefix += "#"
    return prefix


def _crown_union(poset: Poset, fam: CrownFamily) -> list[str]:
    union = set()
    for crown in fam.crowns:
        union |= crown.points
    return [p for p in poset.points if p in union]


def _carrier_pairs(poset: Poset, kept: list[str]) -> list[tuple[str, str]]:
    keep = set(kept)
    return [(x, y) for x, y in poset.strict_pairs() if x in keep and y in keep]


def _fgraph_matches(poset: Poset, fam: CrownFamily, reduced: Poset) -> bool:
    fam_r = improper_family(reduced)
    if {c.points for c in fam.crowns} != {c.points for c in fam_r.crowns}:
        return False
    before = labeled_edge_sets(improper_crown_graph(poset, fam))
    after = labeled_edge_sets(improper_crown_graph(reduced, fam_r))
    return before == after


def reduce_with_singleton_inners(poset: Poset, fam: CrownFamily) -> ReductionResult:
    """One fresh atom per improper crown, sitting strictly between its lo and
    hi pairs; the resulting inners are pairwise disjoint singletons."""
    if not fam.crowns:
        raise EmptyFamily("no improper 4-crowns to reduce")
    kept = _crown_union(poset, fam)
    prefix = _fresh_prefix(kept)
    atoms = [f"{prefix}{k + 1}" for k in range(len(fam.crowns))]
    pairs = _carrier_pairs(poset, kept)
    for k, crown in enumerate(fam.crowns):
        for lo in crown.lo:
            pairs.append((lo, atoms[k]))
        for hi in crown.hi:
            pairs.append((atoms[k], hi))
    reduced = Poset.from_generators(kept + atoms, pairs)
    fam_r = improper_family(reduced)
    by_points = {c.points: c for c in fam_r.crowns}
    singletons = all(
        by_points.get(crown.points) is not None
        and by_points[crown.points].inner == frozenset({atoms[k]})
        for k, crown in enumerate(fam.crowns)
    )
    return ReductionResult(
        poset=reduced,
        method=1,
        crown_points=tuple(c.points for c in fam.crowns),
        atom_names=tuple(atoms),
        fgraph_preserved=_fgraph_matches(poset, fam, reduced),
        height_ok=reduced.height() <= 2,
        inners_disjoint_singletons=singletons,
        intersection_pattern_preserved=None,
    )


def _inner_intersections(fam: CrownFamily, max_subset: int | None = None):
    """Non-empty intersections of inners over crown subsets, as frozensets."""
    out = set()
    n = len(fam.crowns)
    limit = n if max_subset is None else min(n, max_subset)
    for size in range(1, limit + 1):
        for subset in combinations(range(n), size):
            inter = frozenset.intersection(*(fam.crowns[i].inner for i in subset))
            out.add((subset, inter))
    return out


def reduce_with_intersection_pattern(
    poset: Poset, fam: CrownFamily, *, pattern_subset_cap: int = 5
) -> ReductionResult:
    """One fresh atom per inclusion-minimal non-empty intersection of inners.

    An atom sits between lo and hi of every crown whose inner contains its
    generating set, so a crown subset keeps a common inner point in the
    reduction exactly when it had one before.  The preservation check
    exhausts crown subsets up to ``pattern_subset_cap``.
    """
    if not fam.crowns:
        raise EmptyFamily("no improper 4-crowns to reduce")
    intersections = {
        inter for _, inter in _inner_intersections(fam) if inter
    }
    minimal = [
        d for d in intersections if not any(e < d for e in intersections)
    ]
    kept = _crown_union(poset, fam)
    prefix = _fresh_prefix(kept)

    def atom_name(d: frozenset) -> str:
        pts = sorted(d, key=poset.index.__getitem__)
        return prefix + "{" + ",".join(pts) + "}"

    minimal.sort(key=lambda d: sorted(poset.index[p] for p in d))
    atoms = {d: atom_name(d) for d in minimal}
    pairs = _carrier_pairs(poset, kept)
    for d, name in atoms.items():
        for crown in fam.crowns:
            if d <= crown.inner:
                for lo in crown.lo:
                    pairs.append((lo, name))
                for hi in crown.hi:
                    pairs.append((name, hi))
    reduced = Poset.from_generators(kept + [atoms[d] for d in minimal], pairs)
    fam_r = improper_family(reduced)
    by_points = {c.points: c for c in fam_r.crowns}
    pattern_ok = True
    if {c.points for c in fam.crowns} == set(by_points):
        n = len(fam.crowns)
        for size in range(1, min(n, pattern_subset_cap) + 1):
            for subset in combinations(range(n), size):
                before = frozenset.intersection(
                    *(fam.crowns[i].inner for i in subset)
                )
                after = frozenset.intersection(
                    *(by_points[fam.crowns[i].points].inner for i in subset)
                )
                if bool(before) != bool(after):
                    pattern_ok = False
                    break
            if not pattern_ok:
                break
    else:
        pattern_ok = False
    return ReductionResult(
        poset=reduced,
        method=2,
        crown_points=tuple(c.points for c in fam.crowns),
        atom_names=tuple(atoms[d] for d in minimal),
        fgraph_preserved=_fgraph_matches(poset, fam, reduced),
        height_ok=reduced.height() <= 2,
        inners_disjoint_singletons=None,
        intersection_pattern_preserved=pattern_ok,
    )
