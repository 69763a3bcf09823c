"""The two multigraphs the retract decision runs on.

On one side a fixed 8-vertex multigraph whose vertices are the connected
2- and 3-point sub-posets ("fragments") of a template 4-crown on points
a, b below v, w; two fragments get an L-edge when they share a minimal
template point and a U-edge when they share a maximal one.  On the other
side the instance multigraph over the improper 4-crowns of a poset, with
L-/U-edges for shared minimal/maximal points.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .crowns import CrownFamily, FourCrown
from .errors import NotATwoClique
from .poset import Poset

TEMPLATE_MINS = ("a", "b")
TEMPLATE_MAXS = ("v", "w")
TEMPLATE_POINTS = TEMPLATE_MINS + TEMPLATE_MAXS

Fragment = frozenset  # frozenset[str] over template point names


def template_crown() -> Poset:
    """The template 4-crown: a, b minimal, v, w maximal, all four crossings."""
    return Poset.from_generators(
        TEMPLATE_POINTS, [("a", "v"), ("a", "w"), ("b", "v"), ("b", "w")]
    )


def _frag(*names: str) -> Fragment:
    return frozenset(names)


# canonical listing: the four 2-point fragments, then the four 3-point ones
FRAGMENTS: tuple[Fragment, ...] = (
    _frag("a", "v"),
    _frag("a", "w"),
    _frag("b", "v"),
    _frag("b", "w"),
    _frag("a", "b", "v"),
    _frag("a", "b", "w"),
    _frag("a", "v", "w"),
    _frag("b", "v", "w"),
)
TRIPLES: tuple[Fragment, ...] = FRAGMENTS[4:]

_ORDER = {name: i for i, name in enumerate(TEMPLATE_POINTS)}


def fragment_label(s: Fragment) -> str:
    names = sorted(s, key=_ORDER.__getitem__)
    if len(names) == 3:
        return "".join(names)
    return "{" + ",".join(names) + "}"


_BY_LABEL = {fragment_label(s): s for s in FRAGMENTS}


def fragment_from_label(label: str) -> Fragment:
    return _BY_LABEL[label]


def shares_min(s: Fragment, t: Fragment) -> bool:
    return bool(s & t & set(TEMPLATE_MINS))


def shares_max(s: Fragment, t: Fragment) -> bool:
    return bool(s & t & set(TEMPLATE_MAXS))


@dataclass(frozen=True)
class FragmentGraph:
    """The fixed multigraph over the eight fragments; edges stored as
    adjacency maps that include the loops (every fragment has both)."""

    vertices: tuple[Fragment, ...]
    l_adj: dict
    u_adj: dict

    def has_l_edge(self, s: Fragment, t: Fragment) -> bool:
        return t in self.l_adj[s]

    def has_u_edge(self, s: Fragment, t: Fragment) -> bool:
        return t in self.u_adj[s]


def template_fragment_graph() -> FragmentGraph:
    l_adj = {
        s: frozenset(t for t in FRAGMENTS if shares_min(s, t)) for s in FRAGMENTS
    }
    u_adj = {
        s: frozenset(t for t in FRAGMENTS if shares_max(s, t)) for s in FRAGMENTS
    }
    return FragmentGraph(FRAGMENTS, l_adj, u_adj)


# -- the four avoidance classes ----------------------------------------------

CLASS_A: frozenset = frozenset(
    s for s in FRAGMENTS if s & set(TEMPLATE_MINS) == {"a"}
)
CLASS_B: frozenset = frozenset(
    s for s in FRAGMENTS if s & set(TEMPLATE_MINS) == {"b"}
)
CLASS_V: frozenset = frozenset(
    s for s in FRAGMENTS if s & set(TEMPLATE_MAXS) == {"v"}
)
CLASS_W: frozenset = frozenset(
    s for s in FRAGMENTS if s & set(TEMPLATE_MAXS) == {"w"}
)
CLASSES: dict[str, frozenset] = {
    "a": CLASS_A,
    "b": CLASS_B,
    "v": CLASS_V,
    "w": CLASS_W,
}


@dataclass(frozen=True)
class VertexClass:
    in_a: bool
    in_b: bool
    in_v: bool
    in_w: bool


def classify_fragments() -> dict:
    """Per-fragment class membership table, with the structural sanity checks."""
    table = {
        s: VertexClass(s in CLASS_A, s in CLASS_B, s in CLASS_V, s in CLASS_W)
        for s in FRAGMENTS
    }
    assert all(len(c) == 3 for c in (CLASS_A, CLASS_B, CLASS_V, CLASS_W))
    assert CLASS_A | CLASS_B | CLASS_V | CLASS_W == set(FRAGMENTS)
    return table


# -- collapse onto the triples ------------------------------------------------

# Pinned images for the 2-point fragments: the unique class-preserving choice
# validated by the tests (a triple containing the pair, picked so that every
# class non-membership is preserved).
TRIPLE_COLLAPSE: dict = {
    _frag("a", "v"): _frag("a", "v", "w"),
    _frag("a", "w"): _frag("a", "b", "w"),
    _frag("b", "v"): _frag("a", "b", "v"),
    _frag("b", "w"): _frag("b", "v", "w"),
    **{t: t for t in TRIPLES},
}


def collapse_to_triple(s: Fragment) -> Fragment:
    """Map a fragment to a 3-point fragment: triples stay fixed, pairs move to
    an adjacent triple without entering any avoidance class they avoided."""
    return TRIPLE_COLLAPSE[s]


# -- automorphisms -------------------------------------------------------------


def _point_swap(swap_mins: bool, swap_maxs: bool) -> dict:
    table = {}
    for s in FRAGMENTS:
        out = set()
        for p in s:
            if swap_mins and p in TEMPLATE_MINS:
                out.add("b" if p == "a" else "a")
            elif swap_maxs and p in TEMPLATE_MAXS:
                out.add("w" if p == "v" else "v")
            else:
                out.add(p)
        table[s] = frozenset(out)
    return table


def fragment_graph_automorphisms() -> tuple[dict, ...]:
    """All multigraph automorphisms, found by exhausting the size-preserving
    vertex permutations.  There are exactly four: the subset actions of the
    identity and of swapping the template minima and/or maxima."""
    pairs = FRAGMENTS[:4]
    triples = FRAGMENTS[4:]
    autos = []
    for perm2 in permutations(pairs):
        for perm3 in permutations(triples):
            table = dict(zip(pairs, perm2)) | dict(zip(triples, perm3))
            ok = True
            for s in FRAGMENTS:
                for t in FRAGMENTS:
                    if shares_min(s, t) != shares_min(table[s], table[t]):
                        ok = False
                        break
                    if shares_max(s, t) != shares_max(table[s], table[t]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                autos.append(table)
    autos.sort(key=lambda t: tuple(fragment_label(t[s]) for s in FRAGMENTS))
    expected = [
        _point_swap(sm, sx) for sm in (False, True) for sx in (False, True)
    ]
    assert len(autos) == 4
    assert all(e in autos for e in expected)
    return tuple(autos)


# -- the two-clique collapse ---------------------------------------------------


@dataclass(frozen=True)
class CliqueCollapse:
    """The 5-fragment region around a two-clique of triples and the retraction
    of the fragment graph that folds it onto the clique."""

    region: frozenset
    mapping: dict


def clique_collapse(s: Fragment, t: Fragment) -> CliqueCollapse:
    """For triples S, T joined by both an L-edge and a U-edge, fold the two
    disjoint 2-point fragments inside S or T onto their containing triple.

    The region is {S, T, S∩T} plus those two fragments; the mapping fixes
    everything else, is a multigraph homomorphism, and preserves all four
    class non-memberships.
    """
    if (
        s not in TRIPLES
        or t not in TRIPLES
        or s == t
        or not shares_min(s, t)
        or not shares_max(s, t)
    ):
        raise NotATwoClique(
            f"{fragment_label(s)}, {fragment_label(t)} is not a two-clique of triples"
        )
    shared = s & t
    assert shared in FRAGMENTS
    side_s = next(p for p in FRAGMENTS[:4] if p <= s and p != shared)
    side_t = next(p for p in FRAGMENTS[:4] if p <= t and p != shared)
    assert not (side_s & side_t), "the folded fragments must be disjoint"
    mapping = {f: f for f in FRAGMENTS}
    mapping[side_s] = s
    mapping[side_t] = t
    region = frozenset({s, t, shared, side_s, side_t})
    return CliqueCollapse(region, mapping)


# -- the instance multigraph ----------------------------------------------------


@dataclass(frozen=True)
class ImproperCrownGraph:
    """Multigraph over the improper 4-crowns of a poset.

    Edges are stored with the least-index shared point as witness, so the
    whole graph can be re-validated from the witnesses alone.
    """

    crowns: tuple[FourCrown, ...]
    l_edges: dict  # (i, j) with i <= j -> witness point name
    u_edges: dict

    @property
    def n(self) -> int:
        return len(self.crowns)

    def has_l_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.l_edges

    def has_u_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.u_edges

    def is_complete(self) -> bool:
        """Both edge kinds between every pair of distinct vertices."""
        return all(
            self.has_l_edge(i, j) and self.has_u_edge(i, j)
            for i, j in combinations(range(self.n), 2)
        )

    def degree(self, i: int) -> int:
        """Number of distinct neighbours over both edge kinds, loops excluded."""
        seen = set()
        for (p, q) in list(self.l_edges) + list(self.u_edges):
            if p == q:
                continue
            if p == i:
                seen.add(q)
            elif q == i:
                seen.add(p)
        return len(seen)

    def label(self, i: int) -> str:
        crown = self.crowns[i]
        pts = ",".join(crown.lo + crown.hi)
        return f"F{i + 1}={{{pts}}}"


def improper_crown_graph(poset: Poset, fam: CrownFamily) -> ImproperCrownGraph:
    mins = set(poset.minimal_points())
    maxs = set(poset.maximal_points())
    l_edges = {}
    u_edges = {}
    for i in range(len(fam.crowns)):
        for j in range(i, len(fam.crowns)):
            shared = fam.crowns[i].points & fam.crowns[j].points
            shared_min = sorted(shared & mins, key=poset.index.__getitem__)
            shared_max = sorted(shared & maxs, key=poset.index.__getitem__)
            if shared_min:
                l_edges[(i, j)] = shared_min[0]
            if shared_max:
                u_edges[(i, j)] = shared_max[0]
    return ImproperCrownGraph(fam.crowns, l_edges, u_edges)


def labeled_edge_sets(graph: ImproperCrownGraph) -> tuple[set, set]:
    """Edges keyed by crown point sets, for comparing graphs across posets."""
    def key(i: int, j: int) -> frozenset:
        return frozenset(
            {graph.crowns[i].points, graph.crowns[j].points}
        )

    return (
        {key(i, j) for (i, j) in graph.l_edges},
        {key(i, j) for (i, j) in graph.u_edges},
    )
