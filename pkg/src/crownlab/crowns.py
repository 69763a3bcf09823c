"""Four-crown enumeration and classification.

A 4-crown is a quadruple {a', b', v', w'} with a', b' minimal in it, v', w'
maximal in it, and exactly the four crossing relations.  Its inner is the
set of points strictly between both opposite edges; a crown is proper when
the inner is empty, improper otherwise, and an hourglass when one inner
point dominates the inner from below or above.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .errors import NotACrown, NotAnEdge, NotFlat
from .poset import Poset, bits


class CrownKind(enum.Enum):
    PROPER = "proper"
    IMPROPER = "improper"
    HOURGLASS = "hourglass"


@dataclass(frozen=True)
class FourCrown:
    """A labelled 4-crown: lo pair below hi pair, with its inner and kind."""

    lo: tuple[str, str]
    hi: tuple[str, str]
    inner: frozenset[str]
    kind: CrownKind

    @property
    def points(self) -> frozenset[str]:
        return frozenset(self.lo) | frozenset(self.hi)

    @property
    def is_improper(self) -> bool:
        return self.kind is not CrownKind.PROPER

    def sorted_points(self, poset: Poset) -> tuple[str, ...]:
        return tuple(sorted(self.points, key=poset.index.__getitem__))


def _classify_inner(poset: Poset, inner_mask: int) -> CrownKind:
    if not inner_mask:
        return CrownKind.PROPER
    for x in bits(inner_mask):
        if inner_mask & ~(poset.down_mask(x) | poset.up_mask(x)) == 0:
            return CrownKind.HOURGLASS
    return CrownKind.IMPROPER


def _build_crown(poset: Poset, ia: int, ib: int, iv: int, iw: int) -> FourCrown:
    inner = (poset.up_mask(ia) & poset.down_mask(iv)) & (
        poset.up_mask(ib) & poset.down_mask(iw)
    )
    other = (poset.up_mask(ia) & poset.down_mask(iw)) & (
        poset.up_mask(ib) & poset.down_mask(iv)
    )
    # the inner does not depend on how the disjoint edges are paired
    assert inner == other, "inner changed under edge re-pairing"
    crown_mask = (1 << ia) | (1 << ib) | (1 << iv) | (1 << iw)
    assert inner & crown_mask == 0, "inner touches the crown's own points"
    lo = tuple(poset.points[i] for i in sorted((ia, ib)))
    hi = tuple(poset.points[i] for i in sorted((iv, iw)))
    return FourCrown(lo, hi, frozenset(poset.names_of(inner)), _classify_inner(poset, inner))


def enumerate_four_crowns(poset: Poset) -> tuple[FourCrown, ...]:
    """All 4-crowns whose points are extremal in ``poset``.

    The lo pair ranges over minimal points, the hi pair over maximal
    points; the inner is computed against the whole poset.
    """
    mins = [poset.index[p] for p in poset.minimal_points()]
    maxs = [poset.index[p] for p in poset.maximal_points()]
    out = []
    for ia, ib in combinations(mins, 2):
        up_both = poset.up_mask(ia) & poset.up_mask(ib)
        for iv, iw in combinations(maxs, 2):
            if (up_both >> iv) & 1 and (up_both >> iw) & 1:
                out.append(_build_crown(poset, ia, ib, iv, iw))
    out.sort(key=lambda c: tuple(sorted(poset.index[p] for p in c.points)))
    return tuple(out)


def classify_crown(poset: Poset, points) -> FourCrown:
    """Validate that the four points form a 4-crown in ``poset`` and classify it.

    Raises :class:`NotACrown` naming the violated comparability otherwise.
    The points need not be extremal in the ambient poset; the inner always
    is computed against the ambient poset.
    """
    pts = list(points)
    if len(pts) != 4 or len(set(pts)) != 4:
        raise NotACrown(pts, "expected 4 distinct points")
    idx = [poset._require(p) for p in pts]
    lo = [i for i in idx if not any(poset.lt(poset.points[j], poset.points[i]) for j in idx)]
    hi = [i for i in idx if not any(poset.lt(poset.points[i], poset.points[j]) for j in idx)]
    if sorted(lo) == sorted(hi):
        raise NotACrown(pts, "the four points are pairwise incomparable")
    if len(lo) != 2 or len(hi) != 2 or set(lo) & set(hi):
        raise NotACrown(pts, "comparability graph is not a 4-cycle")
    for i in lo:
        for j in hi:
            if not poset.lt(poset.points[i], poset.points[j]):
                raise NotACrown(
                    pts, f"missing relation {poset.points[i]!r} < {poset.points[j]!r}"
                )
    return _build_crown(poset, lo[0], lo[1], hi[0], hi[1])


@dataclass(frozen=True)
class CrownFamily:
    """The improper 4-crowns living in the extremal points, with a point index."""

    crowns: tuple[FourCrown, ...]
    point_index: dict[str, tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.crowns)

    def members_containing(self, point: str) -> tuple[int, ...]:
        return self.point_index.get(point, ())


def improper_family(poset: Poset) -> CrownFamily:
    """The family of improper 4-crowns contained in the extremal sub-poset."""
    crowns = tuple(c for c in enumerate_four_crowns(poset) if c.is_improper)
    deco = poset.extremal_decomposition()
    point_index = {
        p: tuple(i for i, c in enumerate(crowns) if p in c.points)
        for p in deco.extremal
    }
    return CrownFamily(crowns, point_index)


@dataclass(frozen=True)
class RelevantSet:
    """Points tied to improper 4-crowns, plus the induced diagnostic sub-poset
    on the extremal points together with them."""

    points: frozenset[str]
    core: Poset


def relevant_points(poset: Poset, fam: CrownFamily | None = None) -> RelevantSet:
    if fam is None:
        fam = improper_family(poset)
    z: set[str] = set()
    for crown in fam.crowns:
        z |= crown.points
        z |= crown.inner
    deco = poset.extremal_decomposition()
    core = poset.induced(set(deco.extremal) | z)
    return RelevantSet(frozenset(z), core)


def minimal_crown_through_edge(
    poset: Poset, x: str, y: str
) -> tuple[str, ...] | None:
    """A minimum-size crown through the edge x < y of a flat poset.

    Found as a shortest cycle through the edge in the comparability graph:
    breadth-first search from y back to x with the edge removed, breaking
    ties towards the smallest carrier index.  Returns the crown in fence
    order from x to y, or None when no cycle passes through the edge.
    The result is chordless, hence genuinely a crown.
    """
    if poset.height() > 1:
        raise NotFlat("minimal crowns are searched in flat posets only")
    ix = poset._require(x)
    iy = poset._require(y)
    if ix == iy or not poset.lt(x, y):
        raise NotAnEdge(x, y)
    adj = poset.comparability_adjacency()
    adj[ix] &= ~(1 << iy)
    adj[iy] &= ~(1 << ix)
    n = len(poset.points)
    dist = [-1] * n
    dist[iy] = 0
    frontier = [iy]
    d = 0
    while frontier and dist[ix] < 0:
        d += 1
        nxt = []
        for u in frontier:
            for v in bits(adj[u]):
                if dist[v] < 0:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    if dist[ix] < 0:
        return None
    path = [ix]
    cur = ix
    while cur != iy:
        cur = min(v for v in bits(adj[cur]) if dist[v] == dist[cur] - 1)
        path.append(cur)
    crown = tuple(poset.points[i] for i in path)
    assert is_crown(poset, crown), "shortest cycle through an edge must be chordless"
    return crown


def is_crown(poset: Poset, points) -> bool:
    """True when the comparability graph induced on ``points`` is a cycle."""
    pts = list(points)
    if len(pts) < 4 or len(set(pts)) != len(pts):
        return False
    idx = [poset._require(p) for p in pts]
    chosen = 0
    for i in idx:
        chosen |= 1 << i
    adj = poset.comparability_adjacency()
    degs = [bin(adj[i] & chosen).count("1") for i in idx]
    if any(d != 2 for d in degs):
        return False
    # 2-regular and connected == a single cycle
    sub = poset.induced(pts)
    return sub.is_connected()
