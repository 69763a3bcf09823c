"""Named small posets pinning the structural cases the test corpus leans on."""

from __future__ import annotations

from .poset import Poset


def c4() -> Poset:
    """The bare 4-crown: a, b below v, w, nothing else."""
    return Poset.from_generators(
        ["a", "b", "v", "w"], [("a", "v"), ("a", "w"), ("b", "v"), ("b", "w")]
    )


def hourglass() -> Poset:
    """The 4-crown with a single spanning midpoint; its only crown is an
    hourglass-crown, and no surjection onto a 4-crown exists."""
    return Poset.from_generators(
        ["a", "b", "v", "w", "x"],
        [("a", "x"), ("b", "x"), ("x", "v"), ("x", "w")],
    )


def two_mid() -> Poset:
    """The 4-crown with two incomparable spanning midpoints: improper but not
    an hourglass, and the minimal height-2 witness against the fixed point
    property."""
    return Poset.from_generators(
        ["a", "b", "v", "w", "x", "y"],
        [
            ("a", "x"), ("b", "x"), ("x", "v"), ("x", "w"),
            ("a", "y"), ("b", "y"), ("y", "v"), ("y", "w"),
        ],
    )


def w2() -> Poset:
    """Two improper crowns with disjoint inners sharing the minimal point b
    and the maximal point w, plus direct relations completing the extremal
    bipartite order so that {a, c, v, u} is a proper 4-crown (and a retract)."""
    return Poset.from_generators(
        ["a", "b", "c", "v", "w", "u", "m1", "m2"],
        [
            ("a", "m1"), ("b", "m1"), ("m1", "v"), ("m1", "w"),
            ("b", "m2"), ("c", "m2"), ("m2", "w"), ("m2", "u"),
            ("a", "u"), ("c", "v"),
        ],
    )


def p9_like() -> Poset:
    """Height-2 poset with a proper 4-crown {a1, a3, v1, v3} whose improper
    crown graph is complete on four vertices while every extremal edge lies
    in an improper 4-crown; consequently no 4-crown is a retract.

    Found by exhaustive search over height-2 level structures; ten points
    is the minimum carrier admitting all four properties at once.
    """
    pairs = []
    blocks = {
        "m11": (("a1", "a2"), ("v1", "v2")),
        "m12": (("a1", "a2"), ("v2", "v3")),
        "m21": (("a2", "a3"), ("v1", "v2")),
        "m22": (("a2", "a3"), ("v2", "v3")),
    }
    for mid, (lows, highs) in blocks.items():
        for lo in lows:
            pairs.append((lo, mid))
        for hi in highs:
            pairs.append((mid, hi))
    return Poset.from_generators(
        ["a1", "a2", "a3", "v1", "v2", "v3", "m11", "m12", "m21", "m22"], pairs
    )


def big_crown(n: int) -> Poset:
    """The n-crown (n even, at least 4): points c0..c(n-1) around a cycle,
    even indices minimal."""
    if n < 4 or n % 2:
        raise ValueError("crown size must be an even number >= 4")
    points = [f"c{i}" for i in range(n)]
    pairs = []
    for e in range(0, n, 2):
        pairs.append((points[e], points[(e + 1) % n]))
        pairs.append((points[e], points[(e - 1) % n]))
    return Poset.from_generators(points, pairs)


def fence(n: int) -> Poset:
    """The n-point fence f0 < f1 > f2 < f3 ... (path comparability graph)."""
    if n < 1:
        raise ValueError("fence needs at least one point")
    points = [f"f{i}" for i in range(n)]
    pairs = []
    for i in range(n - 1):
        lo, hi = (i, i + 1) if i % 2 == 0 else (i + 1, i)
        pairs.append((points[lo], points[hi]))
    return Poset.from_generators(points, pairs)


def c4_with_pendant_chain() -> Poset:
    """4-crown plus a 2-chain hanging below v: a non-extremal point exists
    but no improper crown does."""
    return Poset.from_generators(
        ["a", "b", "v", "w", "q1", "q2"],
        [("a", "v"), ("a", "w"), ("b", "v"), ("b", "w"), ("q1", "q2"), ("q2", "v")],
    )


def six_crown_plus_top() -> Poset:
    """6-crown plus one extra maximal point above two of its minimal points."""
    base = big_crown(6)
    doc = base.to_doc()
    return Poset.from_generators(
        doc["points"] + ["u"], [tuple(p) for p in doc["pairs"]] + [("c0", "u"), ("c2", "u")]
    )


def flat6_decorated() -> Poset:
    """Flat 6-crown with pendant decorations: an extra minimal point below
    one crown maximum and an extra maximal point above one crown minimum."""
    base = big_crown(6)
    doc = base.to_doc()
    return Poset.from_generators(
        doc["points"] + ["d0", "d1"],
        [tuple(p) for p in doc["pairs"]] + [("d0", "c1"), ("c0", "d1")],
    )


def pinned_triple() -> Poset:
    """A proper 4-crown {a, b, v, w} next to an improper crown {a, b, v, y}
    sharing three of its points, which forces that crown's image in any
    anchored separating assignment."""
    return Poset.from_generators(
        ["a", "b", "v", "w", "y", "m"],
        [("a", "m"), ("b", "m"), ("m", "v"), ("m", "y"), ("a", "w"), ("b", "w")],
    )


def six_crown_with_tail() -> Poset:
    """6-crown with a fence of two extra points hanging below c3: their fence
    distance from c4 exceeds the crown length, so a fence retraction through
    the edge (c4, c3) sends them to the upper endpoint."""
    base = big_crown(6)
    doc = base.to_doc()
    return Poset.from_generators(
        doc["points"] + ["t1", "t2"],
        [tuple(p) for p in doc["pairs"]] + [("t1", "c3"), ("t1", "t2")],
    )


def nested_inners() -> Poset:
    """Improper crowns whose inners nest: {a,b,v,u} has inner {x, y} while
    {a,b,v,w} and {a,b,w,u} have inner {x}.  The minimal non-empty inner
    intersections collapse to the single set {x}."""
    return Poset.from_generators(
        ["a", "b", "v", "w", "u", "x", "y"],
        [
            ("a", "x"), ("b", "x"), ("x", "v"), ("x", "w"), ("x", "u"),
            ("a", "y"), ("b", "y"), ("y", "v"), ("y", "u"),
        ],
    )


def three_chain() -> Poset:
    return Poset.from_generators(["a", "m", "v"], [("a", "m"), ("m", "v")])


ALL_FIXTURES = {
    "c4": c4,
    "hourglass": hourglass,
    "two_mid": two_mid,
    "w2": w2,
    "p9_like": p9_like,
    "six_crown": lambda: big_crown(6),
    "eight_crown": lambda: big_crown(8),
    "fence5": lambda: fence(5),
    "c4_with_pendant_chain": c4_with_pendant_chain,
    "pinned_triple": pinned_triple,
    "six_crown_plus_top": six_crown_plus_top,
    "six_crown_with_tail": six_crown_with_tail,
    "flat6_decorated": flat6_decorated,
    "nested_inners": nested_inners,
    "three_chain": three_chain,
}
