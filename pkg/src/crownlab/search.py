"""Existence search for separating assignments of improper crowns.

A crown assignment sends every improper 4-crown of the instance to a
fragment of the template crown.  It must be a multigraph homomorphism
(shared minimal points force fragments sharing a template minimum, dually
for maxima) and must avoid the four fragment classes on crowns containing
four designated witness points.  The crown-anchored search runs on the
four triples only, with forced values for crowns that contain three of the
anchor crown's points; two clique fast paths decide most instances without
search.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .crowns import CrownFamily, FourCrown, classify_crown
from .errors import CrownNotInE, NotACrown, TooFewExtremalPoints
from .multigraphs import (
    CLASSES,
    FRAGMENTS,
    TRIPLES,
    Fragment,
    fragment_label,
    improper_crown_graph,
    shares_max,
    shares_min,
)
from .poset import Poset


class SearchStatus(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"
    CROWN_IMPROPER = "crown_improper"


@dataclass(frozen=True)
class SeparationWitness:
    """Four points driving the avoidance implications: crowns containing x
    must avoid the a-class, x2 the b-class, y the v-class, y2 the w-class."""

    x: str
    x2: str
    y: str
    y2: str

    def as_tuple(self) -> tuple[str, str, str, str]:
        return (self.x, self.x2, self.y, self.y2)


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    fast_path: str | None


@dataclass(frozen=True)
class SearchResult:
    status: SearchStatus
    assignment: dict | None  # crown index -> Fragment
    witness: SeparationWitness | None
    stats: SearchStats

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    reason: str | None


def verify_separating(
    poset: Poset,
    fam: CrownFamily,
    assignment: dict,
    witness: SeparationWitness,
) -> VerifyReport:
    """Check an assignment against the definition, reporting the first
    violated constraint: totality, multigraph homomorphism, then the four
    avoidance implications for the witness points."""
    mins = set(poset.minimal_points())
    maxs = set(poset.maximal_points())
    wx, wx2, wy, wy2 = witness.as_tuple()
    if wx == wx2 or wx not in mins or wx2 not in mins:
        return VerifyReport(False, "witness minimal points invalid")
    if wy == wy2 or wy not in maxs or wy2 not in maxs:
        return VerifyReport(False, "witness maximal points invalid")
    for i in range(len(fam.crowns)):
        if i not in assignment:
            return VerifyReport(False, f"no image for crown {i}")
        if assignment[i] not in FRAGMENTS:
            return VerifyReport(False, f"image of crown {i} is not a fragment")
    graph = improper_crown_graph(poset, fam)
    for i, j in combinations(range(len(fam.crowns)), 2):
        s, t = assignment[i], assignment[j]
        if graph.has_l_edge(i, j) and not shares_min(s, t):
            return VerifyReport(
                False,
                f"L-edge ({graph.label(i)}, {graph.label(j)}) maps to "
                f"({fragment_label(s)}, {fragment_label(t)}) with no shared minimum",
            )
        if graph.has_u_edge(i, j) and not shares_max(s, t):
            return VerifyReport(
                False,
                f"U-edge ({graph.label(i)}, {graph.label(j)}) maps to "
                f"({fragment_label(s)}, {fragment_label(t)}) with no shared maximum",
            )
    for i, crown in enumerate(fam.crowns):
        for point, cls_name in ((wx, "a"), (wx2, "b"), (wy, "v"), (wy2, "w")):
            if point in crown.points and assignment[i] in CLASSES[cls_name]:
                return VerifyReport(
                    False,
                    f"crown {graph.label(i)} contains witness {point!r} but maps "
                    f"into the {cls_name}-class",
                )
    return VerifyReport(True, None)


# -- anchored crown handling ---------------------------------------------------


@dataclass(frozen=True)
class AnchoredCrown:
    """A proper 4-crown in the extremal points with template roles fixed:
    lo pair is (a, b), hi pair is (v, w), each sorted by carrier index."""

    a: str
    b: str
    v: str
    w: str

    @property
    def points(self) -> frozenset[str]:
        return frozenset((self.a, self.b, self.v, self.w))

    def actual(self, role: str) -> str:
        return getattr(self, role)

    def triple_points(self, triple: Fragment) -> frozenset[str]:
        return frozenset(self.actual(role) for role in triple)


def anchor_crown(poset: Poset, crown_points) -> tuple[AnchoredCrown, FourCrown]:
    """Validate the points as a 4-crown inside the extremal points and fix
    template roles.  Raises CrownNotInE otherwise."""
    try:
        crown = classify_crown(poset, crown_points)
    except NotACrown as exc:
        raise CrownNotInE(str(exc)) from exc
    mins = set(poset.minimal_points())
    maxs = set(poset.maximal_points())
    if not (set(crown.lo) <= mins and set(crown.hi) <= maxs):
        raise CrownNotInE(
            f"{sorted(crown_points)} is a 4-crown but not inside the extremal points"
        )
    return AnchoredCrown(crown.lo[0], crown.lo[1], crown.hi[0], crown.hi[1]), crown


def _unit_allowed(
    crown: FourCrown, anchored: AnchoredCrown, domain: tuple[Fragment, ...]
) -> list[Fragment]:
    """Domain values compatible with the avoidance implications.

    The witness labelling follows the forced-value rule: the b point blocks
    the a-class, the a point the b-class, the w point the v-class and the v
    point the w-class.  (With that labelling a crown containing three anchor
    points may keep the matching triple as its image.)
    """
    blocked: set[Fragment] = set()
    if anchored.b in crown.points:
        blocked |= CLASSES["a"]
    if anchored.a in crown.points:
        blocked |= CLASSES["b"]
    if anchored.w in crown.points:
        blocked |= CLASSES["v"]
    if anchored.v in crown.points:
        blocked |= CLASSES["w"]
    return [s for s in domain if s not in blocked]


def _pin_map(fam: CrownFamily, anchored: AnchoredCrown) -> dict:
    """Forced images: every crown containing three of the anchor points maps
    to the triple those points spell."""
    pins: dict[int, Fragment] = {}
    for triple in TRIPLES:
        actual = anchored.triple_points(triple)
        for i, crown in enumerate(fam.crowns):
            if actual <= crown.points:
                assert i not in pins, "a crown cannot extend two different triples"
                pins[i] = triple
    return pins


def _pinned_witness(anchored: AnchoredCrown) -> SeparationWitness:
    return SeparationWitness(
        x=anchored.b, x2=anchored.a, y=anchored.w, y2=anchored.v
    )


def _standard_witness(anchored: AnchoredCrown) -> SeparationWitness:
    return SeparationWitness(
        x=anchored.a, x2=anchored.b, y=anchored.v, y2=anchored.w
    )


# -- the backtracking core -----------------------------------------------------


def _variable_order(graph) -> list[int]:
    return sorted(range(graph.n), key=lambda i: (-graph.degree(i), i))


def _solve(
    graph,
    allowed: list[list[Fragment]],
) -> tuple[dict | None, int]:
    """Plain backtracking with forward checking over the edge constraints."""
    n = graph.n
    order = _variable_order(graph)
    domains: list[list[Fragment]] = [list(allowed[i]) for i in range(n)]
    if any(not d for d in domains):
        return None, 0
    assignment: dict[int, Fragment] = {}
    nodes = 0

    neighbors: list[list[tuple[int, bool, bool]]] = [[] for _ in range(n)]
    for i, j in combinations(range(n), 2):
        l_req = graph.has_l_edge(i, j)
        u_req = graph.has_u_edge(i, j)
        if l_req or u_req:
            neighbors[i].append((j, l_req, u_req))
            neighbors[j].append((i, l_req, u_req))

    def compatible(s: Fragment, t: Fragment, l_req: bool, u_req: bool) -> bool:
        if l_req and not shares_min(s, t):
            return False
        if u_req and not shares_max(s, t):
            return False
        return True

    def backtrack(k: int) -> bool:
        nonlocal nodes
        if k == n:
            return True
        i = order[k]
        for value in domains[i]:
            nodes += 1
            ok = True
            for j, l_req, u_req in neighbors[i]:
                if j in assignment:
                    if not compatible(value, assignment[j], l_req, u_req):
                        ok = False
                        break
                else:
                    if not any(
                        compatible(value, t, l_req, u_req) for t in domains[j]
                    ):
                        ok = False
                        break
            if not ok:
                continue
            assignment[i] = value
            if backtrack(k + 1):
                return True
            del assignment[i]
        return False

    if backtrack(0):
        return dict(assignment), nodes
    return None, nodes


# -- fast paths ------------------------------------------------------------------


def clique_fast_paths(
    poset: Poset, fam: CrownFamily, crown_points
) -> SearchResult | None:
    """Decide without search when possible.

    (i) An anchor point in no improper crown: the constant map onto the
    triple omitting its level partner separates.  (ii) A complete improper
    crown graph: separation holds exactly when some anchor edge lies in no
    improper crown, witnessed by a two-valued assignment.  Otherwise None.
    """
    anchored, crown = anchor_crown(poset, crown_points)
    if crown.is_improper:
        return SearchResult(
            SearchStatus.CROWN_IMPROPER, None, None, SearchStats(0, None)
        )
    opposite = {"a": "b", "b": "a", "v": "w", "w": "v"}
    for role in ("a", "b", "v", "w"):
        point = anchored.actual(role)
        if not fam.members_containing(point):
            target = frozenset({"a", "b", "v", "w"} - {opposite[role]})
            assignment = {i: target for i in range(len(fam.crowns))}
            witness = _standard_witness(anchored)
            report = verify_separating(poset, fam, assignment, witness)
            assert report.ok, report.reason
            return SearchResult(
                SearchStatus.FOUND,
                assignment,
                witness,
                SearchStats(0, "free_point"),
            )
    graph = improper_crown_graph(poset, fam)
    if fam.crowns and graph.is_complete():
        for lo_role in ("a", "b"):
            for hi_role in ("v", "w"):
                lo_pt = anchored.actual(lo_role)
                hi_pt = anchored.actual(hi_role)
                if any(
                    {lo_pt, hi_pt} <= c.points for c in fam.crowns
                ):
                    continue
                in_image = frozenset({"a", "b", hi_role})
                out_image = frozenset({"v", "w", lo_role})
                assignment = {
                    i: in_image if lo_pt in c.points else out_image
                    for i, c in enumerate(fam.crowns)
                }
                witness = _standard_witness(anchored)
                report = verify_separating(poset, fam, assignment, witness)
                assert report.ok, report.reason
                return SearchResult(
                    SearchStatus.FOUND,
                    assignment,
                    witness,
                    SearchStats(0, "free_edge"),
                )
        return SearchResult(
            SearchStatus.NOT_FOUND, None, None, SearchStats(0, "complete_family")
        )
    return None


# -- public searches ----------------------------------------------------------------


def find_crown_separating(
    poset: Poset,
    fam: CrownFamily,
    crown_points,
    *,
    domain: str = "triples",
    pin: bool = True,
    fast_paths: bool = True,
) -> SearchResult:
    """Decide whether an assignment separating the anchor crown exists.

    ``domain`` selects the value set: "triples" restricts to the four
    3-point fragments (sufficient by the collapse argument), "all" searches
    the full eight.  ``pin`` applies the forced-value rule.  An improper
    anchor is reported as its own status, never as plain absence.
    """
    anchored, crown = anchor_crown(poset, crown_points)
    if crown.is_improper:
        return SearchResult(
            SearchStatus.CROWN_IMPROPER, None, None, SearchStats(0, None)
        )
    if fast_paths:
        decided = clique_fast_paths(poset, fam, crown_points)
        if decided is not None:
            return decided
    values = TRIPLES if domain == "triples" else FRAGMENTS
    allowed = [_unit_allowed(c, anchored, values) for c in fam.crowns]
    if pin:
        for i, target in _pin_map(fam, anchored).items():
            allowed[i] = [v for v in allowed[i] if v == target]
    graph = improper_crown_graph(poset, fam)
    assignment, nodes = _solve(graph, allowed)
    if assignment is None:
        return SearchResult(
            SearchStatus.NOT_FOUND, None, None, SearchStats(nodes, None)
        )
    witness = _pinned_witness(anchored)
    report = verify_separating(poset, fam, assignment, witness)
    assert report.ok, report.reason
    return SearchResult(
        SearchStatus.FOUND, assignment, witness, SearchStats(nodes, None)
    )


def occupancy_sets(
    poset: Poset, fam: CrownFamily, assignment: dict
) -> dict[str, set[str]]:
    """Per class, the extremal points forced into it: minimal points of
    crowns mapped into the a-/b-class, maximal points for v/w."""
    mins = set(poset.minimal_points())
    maxs = set(poset.maximal_points())
    occupied: dict[str, set[str]] = {"a": set(), "b": set(), "v": set(), "w": set()}
    for i, crown in enumerate(fam.crowns):
        value = assignment[i]
        for cls_name, cls in CLASSES.items():
            if value in cls:
                side = mins if cls_name in ("a", "b") else maxs
                occupied[cls_name] |= crown.points & side
    return occupied


def _pick_distinct(avail_a: list[str], avail_b: list[str]):
    for x in avail_a:
        for x2 in avail_b:
            if x != x2:
                return x, x2
    return None


def find_separating(poset: Poset, fam: CrownFamily) -> SearchResult:
    """Decide whether any separating assignment exists (witness points free).

    Searches the full eight-fragment domain under the homomorphism
    constraints; a complete assignment is accepted when the forced-class
    point sets still leave two distinct minimal and two distinct maximal
    witnesses.  The occupancy only grows along a branch, so emptiness of
    either side prunes.
    """
    mins = list(poset.minimal_points())
    maxs = list(poset.maximal_points())
    if len(mins) < 2 or len(maxs) < 2:
        raise TooFewExtremalPoints(
            f"need two minimal and two maximal points, have {len(mins)} and {len(maxs)}"
        )
    graph = improper_crown_graph(poset, fam)
    n = graph.n
    order = _variable_order(graph)
    domains = [list(FRAGMENTS) for _ in range(n)]
    assignment: dict[int, Fragment] = {}
    nodes = 0

    neighbors: list[list[tuple[int, bool, bool]]] = [[] for _ in range(n)]
    for i, j in combinations(range(n), 2):
        l_req = graph.has_l_edge(i, j)
        u_req = graph.has_u_edge(i, j)
        if l_req or u_req:
            neighbors[i].append((j, l_req, u_req))
            neighbors[j].append((i, l_req, u_req))

    min_sets = [c.points & set(mins) for c in fam.crowns]
    max_sets = [c.points & set(maxs) for c in fam.crowns]
    occupied: dict[str, set[str]] = {"a": set(), "b": set(), "v": set(), "w": set()}

    def deltas(i: int, value: Fragment) -> list[tuple[str, set[str]]]:
        out = []
        for cls_name, cls in CLASSES.items():
            if value in cls:
                pts = min_sets[i] if cls_name in ("a", "b") else max_sets[i]
                fresh = pts - occupied[cls_name]
                if fresh:
                    out.append((cls_name, fresh))
        return out

    def witness_possible() -> bool:
        avail_a = [p for p in mins if p not in occupied["a"]]
        avail_b = [p for p in mins if p not in occupied["b"]]
        avail_v = [p for p in maxs if p not in occupied["v"]]
        avail_w = [p for p in maxs if p not in occupied["w"]]
        if not (avail_a and avail_b and avail_v and avail_w):
            return False
        if _pick_distinct(avail_a, avail_b) is None:
            return False
        return _pick_distinct(avail_v, avail_w) is not None

    def backtrack(k: int) -> bool:
        nonlocal nodes
        if k == n:
            return witness_possible()
        i = order[k]
        for value in domains[i]:
            nodes += 1
            ok = True
            for j, l_req, u_req in neighbors[i]:
                if j in assignment:
                    s, t = value, assignment[j]
                    if l_req and not shares_min(s, t):
                        ok = False
                        break
                    if u_req and not shares_max(s, t):
                        ok = False
                        break
            if not ok:
                continue
            added = deltas(i, value)
            for cls_name, fresh in added:
                occupied[cls_name] |= fresh
            assignment[i] = value
            if witness_possible() and backtrack(k + 1):
                return True
            del assignment[i]
            for cls_name, fresh in added:
                occupied[cls_name] -= fresh
        return False

    if backtrack(0):
        pair_min = _pick_distinct(
            [p for p in mins if p not in occupied["a"]],
            [p for p in mins if p not in occupied["b"]],
        )
        pair_max = _pick_distinct(
            [p for p in maxs if p not in occupied["v"]],
            [p for p in maxs if p not in occupied["w"]],
        )
        witness = SeparationWitness(pair_min[0], pair_min[1], pair_max[0], pair_max[1])
        report = verify_separating(poset, fam, dict(assignment), witness)
        assert report.ok, report.reason
        return SearchResult(
            SearchStatus.FOUND, dict(assignment), witness, SearchStats(nodes, None)
        )
    return SearchResult(SearchStatus.NOT_FOUND, None, None, SearchStats(nodes, None))
