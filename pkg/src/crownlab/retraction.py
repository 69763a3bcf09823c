"""Turning existence certificates into explicit verified maps.

Everything here returns point maps that are re-checked by
:func:`~crownlab.poset.classify_map` before they leave the function:
partition-induced maps on the extremal points, their extension over the
non-extremal points, extremal-image normalization, the anchored 4-crown
retraction pipeline, fence retractions onto minimal crowns, the lift of
extremal homomorphisms through 4-crown-free flat targets, the free-edge
pipeline, the fixed-point screen, and greedy removal of irreducible
points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crowns import (
    CrownFamily,
    CrownKind,
    FourCrown,
    enumerate_four_crowns,
    improper_family,
    is_crown,
    minimal_crown_through_edge,
)
from .errors import (
    EdgeInImproperCrown,
    EdgeMissing,
    HypothesisViolated,
    InvalidPartition,
    MinimalityViolated,
    NoCrownThroughEdge,
    NotACrown,
    NotAnEdge,
    NotConnected,
    NotFlat,
    TargetHas4Crown,
    TargetNotFlat,
)
from .multigraphs import template_crown
from .poset import PointMap, Poset, bits, classify_map
from .search import (
    AnchoredCrown,
    SearchStatus,
    anchor_crown,
    find_crown_separating,
    find_separating,
    occupancy_sets,
)


# -- extremal partitions ---------------------------------------------------------


@dataclass(frozen=True)
class ExtremalPartition:
    """A split of the minimal points into a/b and of the maximal points into
    v/w, named after the template crown point each part maps to."""

    a: frozenset
    b: frozenset
    v: frozenset
    w: frozenset


def _validated_partition(poset: Poset, part: ExtremalPartition) -> ExtremalPartition:
    mins = set(poset.minimal_points())
    maxs = set(poset.maximal_points())
    if not part.a or not part.b or not part.v or not part.w:
        raise InvalidPartition("all four parts must be non-empty")
    if part.a & part.b or part.v & part.w:
        raise InvalidPartition("parts must be disjoint")
    if part.a | part.b != mins:
        raise InvalidPartition("a and b must partition the minimal points")
    if part.v | part.w != maxs:
        raise InvalidPartition("v and w must partition the maximal points")
    return part


@dataclass(frozen=True)
class PartitionCheck:
    ok: bool
    violator: FourCrown | None


def check_partition_condition(
    poset: Poset, fam: CrownFamily, part: ExtremalPartition
) -> PartitionCheck:
    """True when no improper 4-crown meets all four parts."""
    _validated_partition(poset, part)
    for crown in fam.crowns:
        pts = crown.points
        if pts & part.a and pts & part.b and pts & part.v and pts & part.w:
            return PartitionCheck(False, crown)
    return PartitionCheck(True, None)


def partition_induced_map(
    poset: Poset,
    part: ExtremalPartition,
    *,
    target: Poset | None = None,
    roles: dict | None = None,
) -> PointMap:
    """The strict surjective map on the extremal points sending each part to
    its named crown point (template crown by default)."""
    _validated_partition(poset, part)
    if target is None:
        target = template_crown()
    if roles is None:
        roles = {"a": "a", "b": "b", "v": "v", "w": "w"}
    deco = poset.extremal_decomposition()
    source = poset.induced(deco.extremal)
    values = []
    for p in source.points:
        if p in part.a:
            values.append(roles["a"])
        elif p in part.b:
            values.append(roles["b"])
        elif p in part.v:
            values.append(roles["v"])
        else:
            values.append(roles["w"])
    return PointMap(source, target, tuple(values))


# -- extension over the non-extremal points ----------------------------------------


def _lower_upper_images(poset: Poset, f: PointMap):
    """Per point of ``poset``: images of the minimal points below it and of
    the maximal points above it."""
    mins = poset.minimal_points()
    maxs = poset.maximal_points()
    min_idx = [poset.index[p] for p in mins]
    max_idx = [poset.index[p] for p in maxs]
    alphas = []
    betas = []
    for i in range(poset.n):
        down = poset.down_mask(i)
        up = poset.up_mask(i)
        alphas.append({f(poset.points[j]) for j in min_idx if (down >> j) & 1})
        betas.append({f(poset.points[j]) for j in max_idx if (up >> j) & 1})
    return alphas, betas


def extend_from_extremals(poset: Poset, f: PointMap) -> PointMap:
    """Extend a homomorphism on the extremal points to the whole poset.

    Requires the target flat and the extension hypothesis: no point may see
    two distinct lower images and two distinct upper images with nothing in
    common.  Each non-extremal point then goes to the single upper image if
    the lower images are plural, to the single lower image if the upper
    images are plural, and to the single upper image otherwise.
    """
    deco = poset.extremal_decomposition()
    expected_source = poset.induced(deco.extremal)
    if f.source != expected_source:
        raise ValueError("map must be defined exactly on the extremal sub-poset")
    target = f.target
    if not target.is_flat():
        raise TargetNotFlat("extension target must be flat")
    if not classify_map(f).is_homomorphism:
        raise ValueError("map on the extremal points must be a homomorphism")
    alphas, betas = _lower_upper_images(poset, f)
    for i, p in enumerate(poset.points):
        alpha, beta = alphas[i], betas[i]
        if len(alpha) >= 2 and len(beta) >= 2 and not (alpha & beta):
            raise HypothesisViolated(p, alpha, beta)
    ext = set(deco.extremal)
    values = []
    for i, p in enumerate(poset.points):
        if p in ext:
            values.append(f(p))
            continue
        alpha, beta = alphas[i], betas[i]
        if len(alpha) >= 2:
            assert len(beta) == 1
            values.append(next(iter(beta)))
        elif len(beta) >= 2:
            assert len(alpha) == 1
            values.append(next(iter(alpha)))
        else:
            values.append(next(iter(beta)))
    g = PointMap(poset, target, tuple(values))
    assert classify_map(g).is_homomorphism, "extension must stay a homomorphism"
    assert all(g(p) == f(p) for p in expected_source.points)
    return g


def normalize_extremal_images(f: PointMap) -> PointMap:
    """Move images of minimal points down into the target's minimal points
    and images of maximal points up into its maximal points, leaving the
    non-extremal points of the source untouched.

    Selectors take the least carrier index among the eligible extremal
    points.  A retraction stays a retraction under this adjustment.
    """
    if not classify_map(f).is_homomorphism:
        raise ValueError("normalization expects a homomorphism")
    src, tgt = f.source, f.target
    src_min = set(src.minimal_points())
    src_max = set(src.maximal_points())
    tgt_min = set(tgt.minimal_points())
    tgt_max = set(tgt.maximal_points())
    values = []
    for p in src.points:
        fp = f(p)
        if p in src_min and fp not in tgt_min:
            values.append(
                next(q for q in tgt.points if q in tgt_min and tgt.leq(q, fp))
            )
        elif p in src_max and fp not in tgt_max:
            values.append(
                next(q for q in tgt.points if q in tgt_max and tgt.leq(fp, q))
            )
        else:
            values.append(fp)
    g = PointMap(src, tgt, tuple(values))
    assert classify_map(g).is_homomorphism
    return g


# -- the anchored 4-crown pipeline ---------------------------------------------------


def partition_from_assignment(
    poset: Poset,
    fam: CrownFamily,
    assignment: dict,
    anchored: AnchoredCrown | None = None,
) -> ExtremalPartition:
    """Complete the forced class occupancies of a separating assignment to a
    full extremal partition.

    Unforced minimal points join the part holding the anchor's a point (or
    the a-part when no anchor is given, rebalancing if the b-part would end
    up empty); with an anchor, the anchor points are placed in different
    parts first, as their forced memberships allow.
    """
    occ = occupancy_sets(poset, fam, assignment)
    mins = list(poset.minimal_points())
    maxs = list(poset.maximal_points())

    def split(side_pts, forced_a, forced_b, first, second):
        part_a = set(forced_a)
        part_b = set(forced_b)
        assert not (part_a & part_b), "forced class occupancies must be disjoint"
        if first is not None:
            anchor_a = first
            if first in forced_a or second in forced_b:
                pass
            elif second in forced_a or first in forced_b:
                first, second = second, first
            assert first not in forced_b and second not in forced_a
            part_a.add(first)
            part_b.add(second)
            # unforced points follow the anchor's a point
            home = part_a if anchor_a in part_a else part_b
            for p in side_pts:
                if p not in part_a and p not in part_b:
                    home.add(p)
        else:
            for p in side_pts:
                if p not in part_a and p not in part_b:
                    part_a.add(p)
            if not part_b:
                spare = next(
                    p for p in side_pts if p in part_a and p not in forced_a
                )
                part_a.discard(spare)
                part_b.add(spare)
            assert part_a, "one side of the partition came out empty"
        return frozenset(part_a), frozenset(part_b)

    if anchored is not None:
        a_part, b_part = split(mins, occ["a"], occ["b"], anchored.a, anchored.b)
        v_part, w_part = split(maxs, occ["v"], occ["w"], anchored.v, anchored.w)
    else:
        a_part, b_part = split(mins, occ["a"], occ["b"], None, None)
        v_part, w_part = split(maxs, occ["v"], occ["w"], None, None)
    return ExtremalPartition(a_part, b_part, v_part, w_part)


def _align_with_crown(
    poset: Poset, g: PointMap, anchored: AnchoredCrown
) -> PointMap:
    """Compose with the unique crown automorphism making the composite fix
    the anchor crown pointwise, and view the result as a self-map."""
    a, b, v, w = anchored.a, anchored.b, anchored.v, anchored.w
    for swap_lo in (False, True):
        for swap_hi in (False, True):
            pi = {a: a, b: b, v: v, w: w}
            if swap_lo:
                pi[a], pi[b] = b, a
            if swap_hi:
                pi[v], pi[w] = w, v
            if all(pi[g(c)] == c for c in (a, b, v, w)):
                values = tuple(pi[g(p)] for p in poset.points)
                return PointMap(poset, poset, values)
    raise AssertionError("no crown automorphism aligns the extension")


def retract_onto_four_crown(
    poset: Poset,
    crown_points,
    *,
    fam: CrownFamily | None = None,
    fast_paths: bool = True,
) -> PointMap | None:
    """A verified retraction onto the given 4-crown of the extremal points,
    or None when none exists (improper anchors included)."""
    if fam is None:
        fam = improper_family(poset)
    result = find_crown_separating(poset, fam, crown_points, fast_paths=fast_paths)
    if result.status is not SearchStatus.FOUND:
        return None
    anchored, _ = anchor_crown(poset, crown_points)
    part = partition_from_assignment(poset, fam, result.assignment, anchored)
    check = check_partition_condition(poset, fam, part)
    assert check.ok, f"partition condition violated by {check.violator}"
    crown_sub = poset.induced(anchored.points)
    f = partition_induced_map(
        poset,
        part,
        target=crown_sub,
        roles={"a": anchored.a, "b": anchored.b, "v": anchored.v, "w": anchored.w},
    )
    g = extend_from_extremals(poset, f)
    r = _align_with_crown(poset, g, anchored)
    verdict = classify_map(r)
    assert verdict.is_retraction, "pipeline output failed the retraction check"
    return r


def surjection_onto_four_crown(poset: Poset, fam: CrownFamily | None = None) -> PointMap | None:
    """A verified surjective homomorphism onto the template 4-crown, or None."""
    if fam is None:
        fam = improper_family(poset)
    result = find_separating(poset, fam)
    if result.status is not SearchStatus.FOUND:
        return None
    part = partition_from_assignment(poset, fam, result.assignment, None)
    check = check_partition_condition(poset, fam, part)
    assert check.ok, f"partition condition violated by {check.violator}"
    f = partition_induced_map(poset, part)
    g = extend_from_extremals(poset, f)
    verdict = classify_map(g)
    assert verdict.is_homomorphism and verdict.is_surjective
    return g


# -- lifts and fences ------------------------------------------------------------------


def lift_flat_hom(poset: Poset, f: PointMap) -> PointMap:
    """Extend a homomorphism on the extremal points through a flat target
    with no 4-crown; such targets make the extension hypothesis automatic."""
    target = f.target
    if not target.is_flat():
        raise TargetNotFlat("lift target must be flat")
    four = enumerate_four_crowns(target)
    if four:
        raise TargetHas4Crown(sorted(four[0].points))
    return extend_from_extremals(poset, f)


def fence_retraction(poset: Poset, crown, edge) -> PointMap:
    """Retraction of a flat connected poset onto a minimal crown through one
    of its edges.

    With the edge removed, every point goes to the unique crown point at
    the same fence distance from the edge's lower endpoint, and points
    farther than the crown is long go to the upper endpoint.
    """
    x, y = edge
    if poset.height() > 1:
        raise NotFlat("fence retraction runs on flat posets")
    if not poset.is_connected():
        raise NotConnected("fence retraction needs a connected poset")
    crown_pts = tuple(crown)
    if x not in crown_pts or y not in crown_pts:
        raise EdgeMissing(x, y, "edge endpoints must lie on the crown")
    if not poset.lt(x, y):
        raise EdgeMissing(x, y)
    if not is_crown(poset, crown_pts):
        raise NotACrown(crown_pts, "comparability graph is not a cycle")
    n = len(crown_pts)
    shortest = minimal_crown_through_edge(poset, x, y)
    assert shortest is not None
    if len(shortest) < n:
        raise MinimalityViolated((x, y), shortest)
    ix = poset.index[x]
    iy = poset.index[y]
    adj = poset.comparability_adjacency()
    adj[ix] &= ~(1 << iy)
    adj[iy] &= ~(1 << ix)
    dist = [-1] * poset.n
    dist[ix] = 0
    frontier = [ix]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for z in bits(adj[u]):
                if dist[z] < 0:
                    dist[z] = d
                    nxt.append(z)
        frontier = nxt
    assert all(dd >= 0 for dd in dist), "removing a cycle edge keeps the poset connected"
    at_distance = {}
    for c in crown_pts:
        at_distance.setdefault(dist[poset.index[c]], []).append(c)
    assert sorted(at_distance) == list(range(n)) and all(
        len(v) == 1 for v in at_distance.values()
    ), "crown points must sit at pairwise distinct fence distances"
    values = tuple(
        at_distance[dist[i]][0] if dist[i] < n else y for i in range(poset.n)
    )
    r = PointMap(poset, poset, values)
    assert classify_map(r).is_retraction
    return r


def retract_crown_from_free_edge(
    poset: Poset, x: str, y: str, *, fam: CrownFamily | None = None
) -> tuple[tuple[str, ...], PointMap]:
    """A verified retraction onto a minimal crown through the given extremal
    edge, which must avoid every improper 4-crown.

    A minimal 4-crown is handled by the anchored pipeline; larger crowns by
    a fence retraction of the extremal sub-poset lifted over the whole
    poset.
    """
    deco = poset.extremal_decomposition()
    ext = set(deco.extremal)
    if x not in ext or y not in ext or not poset.lt(x, y):
        raise NotAnEdge(x, y)
    if fam is None:
        fam = improper_family(poset)
    for i in fam.members_containing(x):
        if y in fam.crowns[i].points:
            raise EdgeInImproperCrown(x, y, sorted(fam.crowns[i].points))
    esub = poset.induced(deco.extremal)
    cycle = minimal_crown_through_edge(esub, x, y)
    if cycle is None:
        raise NoCrownThroughEdge(x, y)
    if len(cycle) == 4:
        r = retract_onto_four_crown(poset, cycle, fam=fam)
        assert r is not None, "a free edge's minimal 4-crown must be a retract"
        return cycle, r
    fence = fence_retraction(esub, cycle, (x, y))
    crown_sub = poset.induced(cycle)
    f = PointMap(esub, crown_sub, fence.values)
    g = lift_flat_hom(poset, f)
    r = PointMap(poset, poset, g.values)
    assert classify_map(r).is_retraction
    return cycle, r


# -- the fixed point screen ---------------------------------------------------------------


@dataclass(frozen=True)
class ScreenFinding:
    kind: str  # "free_edge_retract_crown" | "improper_without_hourglass"
    edge: tuple[str, str]
    crown: tuple[str, ...] | None
    retraction: PointMap | None
    witness_points: tuple[str, ...] | None


@dataclass(frozen=True)
class ScreenReport:
    verdict: str  # "no_fpp" | "inconclusive"
    findings: tuple[ScreenFinding, ...]


def fixed_point_screen(poset: Poset, fam: CrownFamily | None = None) -> ScreenReport:
    """Report violations of the necessary conditions for the fixed point
    property.

    A crown edge of the extremal points contained in no improper 4-crown
    yields a retract-crown certificate.  At height two, a crown edge whose
    improper crowns are all non-hourglass yields a witness sub-poset: the
    crown plus two incomparable inner points.  Neither finding can occur in
    a poset with the fixed point property.
    """
    deco = poset.extremal_decomposition()
    esub = poset.induced(deco.extremal)
    if fam is None:
        fam = improper_family(poset)
    findings: list[ScreenFinding] = []
    height = poset.height()
    for x, y in esub.comparability_edges():
        if minimal_crown_through_edge(esub, x, y) is None:
            continue
        in_improper = [
            i for i in fam.members_containing(x) if y in fam.crowns[i].points
        ]
        if not in_improper:
            cycle, r = retract_crown_from_free_edge(poset, x, y, fam=fam)
            findings.append(
                ScreenFinding("free_edge_retract_crown", (x, y), cycle, r, None)
            )
        elif height == 2 and not any(
            fam.crowns[i].kind is CrownKind.HOURGLASS for i in in_improper
        ):
            crown = fam.crowns[in_improper[0]]
            inner = sorted(crown.inner, key=poset.index.__getitem__)
            pair = next(
                (p, q)
                for k, p in enumerate(inner)
                for q in inner[k + 1 :]
                if not poset.leq(p, q) and not poset.leq(q, p)
            )
            witness = tuple(crown.lo + crown.hi) + pair
            findings.append(
                ScreenFinding(
                    "improper_without_hourglass",
                    (x, y),
                    tuple(crown.lo + crown.hi),
                    None,
                    witness,
                )
            )
    verdict = "no_fpp" if findings else "inconclusive"
    return ScreenReport(verdict, tuple(findings))


# -- irreducible point removal ----------------------------------------------------------


@dataclass(frozen=True)
class DismantleStep:
    removed: str
    absorber: str
    remaining: tuple[str, ...]


@dataclass(frozen=True)
class DismantleTrace:
    steps: tuple[DismantleStep, ...]
    terminal: Poset

    @property
    def reached_singleton(self) -> bool:
        return self.terminal.n == 1


def _irreducible_absorber(poset: Poset, i: int) -> str | None:
    """The absorbing point for an irreducible point: the unique maximal point
    strictly below it, or failing that the unique minimal point strictly above."""
    down = poset.down_mask(i) & ~(1 << i)
    if down:
        tops = [j for j in bits(down) if not (poset.up_mask(j) & down & ~(1 << j))]
        if len(tops) == 1:
            return poset.points[tops[0]]
    up = poset.up_mask(i) & ~(1 << i)
    if up:
        bottoms = [j for j in bits(up) if not (poset.down_mask(j) & up & ~(1 << j))]
        if len(bottoms) == 1:
            return poset.points[bottoms[0]]
    return None


def dismantle(poset: Poset) -> DismantleTrace:
    """Greedily remove irreducible points (least carrier index first) until
    none remain; every step is re-verified as a one-point retraction."""
    steps: list[DismantleStep] = []
    current = poset
    while current.n > 1:
        found = None
        for i, p in enumerate(current.points):
            absorber = _irreducible_absorber(current, i)
            if absorber is not None:
                found = (p, absorber)
                break
        if found is None:
            break
        removed, absorber = found
        values = tuple(absorber if q == removed else q for q in current.points)
        step_map = PointMap(current, current, values)
        assert classify_map(step_map).is_retraction
        remaining = tuple(q for q in current.points if q != removed)
        steps.append(DismantleStep(removed, absorber, remaining))
        current = current.induced(remaining)
    return DismantleTrace(tuple(steps), current)
