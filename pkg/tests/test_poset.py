"""Poset construction, queries, and point-map classification."""

import random

import pytest

from conftest import ALL_FIXTURE_POSETS, small_corpus
from crownlab import fixtures as fx
from crownlab.errors import (
    CycleDetected,
    DocumentError,
    DuplicatePoint,
    EmptySubset,
    TargetMismatch,
    UnknownPoint,
)
from crownlab.poset import PointMap, Poset, classify_map, pointmap_from_doc, pointmap_to_doc


def matrix_power_closure(points, pairs):
    """Independent reflexive-transitive closure by iterated boolean products."""
    n = len(points)
    idx = {p: i for i, p in enumerate(points)}
    m = [[i == j for j in range(n)] for i in range(n)]
    for x, y in pairs:
        m[idx[x]][idx[y]] = True
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if not m[i][j] and any(m[i][k] and m[k][j] for k in range(n)):
                    m[i][j] = True
                    changed = True
    return {
        (points[i], points[j]) for i in range(n) for j in range(n) if m[i][j]
    }


def leq_pairs(poset):
    return {
        (x, y) for x in poset.points for y in poset.points if poset.leq(x, y)
    }


def test_two_chain_closure():
    p = Poset.from_generators(["a", "v"], [("a", "v")])
    assert leq_pairs(p) == {("a", "a"), ("v", "v"), ("a", "v")}


def test_singleton():
    p = Poset.from_generators(["x"], [])
    assert leq_pairs(p) == {("x", "x")}
    assert p.is_connected() and p.height() == 0


def test_c4_closure_matches_matrix_power_oracle():
    pairs = [("a", "v"), ("a", "w"), ("b", "v"), ("b", "w")]
    p = Poset.from_generators(["a", "b", "v", "w"], pairs)
    assert leq_pairs(p) == matrix_power_closure(["a", "b", "v", "w"], pairs)


def test_closure_matches_matrix_power_on_corpus():
    for poset in small_corpus(25):
        doc = poset.to_doc()
        assert leq_pairs(poset) == matrix_power_closure(
            doc["points"], [tuple(p) for p in doc["pairs"]]
        )


def test_generators_need_not_be_covers():
    p = Poset.from_generators(["a", "m", "v"], [("a", "m"), ("m", "v"), ("a", "v")])
    assert p.covers() == [("a", "m"), ("m", "v")]


def test_cycle_detected():
    with pytest.raises(CycleDetected):
        Poset.from_generators(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
    with pytest.raises(CycleDetected):
        Poset.from_generators(["a"], [("a", "a")])


def test_duplicate_and_unknown_points():
    with pytest.raises(DuplicatePoint):
        Poset.from_generators(["a", "a"], [])
    with pytest.raises(UnknownPoint):
        Poset.from_generators(["a"], [("a", "zz")])
    with pytest.raises(DocumentError):
        Poset.from_doc({"points": ["a"]})
    with pytest.raises(DocumentError):
        Poset.from_generators([], [])


def test_doc_round_trip():
    for poset in ALL_FIXTURE_POSETS.values():
        assert Poset.from_doc(poset.to_doc()) == poset


def test_closure_idempotence():
    for poset in list(ALL_FIXTURE_POSETS.values()) + list(small_corpus(25)):
        again = Poset.from_generators(poset.points, list(poset.strict_pairs()))
        assert again == poset


def test_extremal_decomposition_c4():
    deco = fx.c4().extremal_decomposition()
    assert set(deco.minimal) == {"a", "b"}
    assert set(deco.maximal) == {"v", "w"}
    assert deco.middle == ()


def test_extremal_decomposition_chain_and_hourglass():
    deco = fx.three_chain().extremal_decomposition()
    assert deco.minimal == ("a",) and deco.maximal == ("v",) and deco.middle == ("m",)
    deco = fx.hourglass().extremal_decomposition()
    assert deco.middle == ("x",)


def test_every_point_has_extremes_around_it():
    for poset in list(ALL_FIXTURE_POSETS.values()) + list(small_corpus(25)):
        mins = set(poset.minimal_points())
        maxs = set(poset.maximal_points())
        for p in poset.points:
            assert poset.down_set(p) & mins
            assert poset.up_set(p) & maxs


def test_minimal_maximal_disjoint_antichains_when_connected():
    for poset in list(ALL_FIXTURE_POSETS.values()) + list(small_corpus(25)):
        if poset.n < 2 or not poset.is_connected():
            continue
        mins = poset.minimal_points()
        maxs = poset.maximal_points()
        assert not set(mins) & set(maxs)
        for anti in (mins, maxs):
            for x in anti:
                for y in anti:
                    assert x == y or not poset.leq(x, y)


def test_intervals():
    c4 = fx.c4()
    assert c4.interval("a", "v") == {"a", "v"}
    hg = fx.hourglass()
    assert hg.interval("a", "v") == {"a", "x", "v"}
    for poset in ALL_FIXTURE_POSETS.values():
        for x in poset.points:
            assert poset.interval(x, x) == {x}
    with pytest.raises(UnknownPoint):
        c4.interval("a", "nope")


def test_structure_queries():
    c4 = fx.c4()
    assert c4.is_connected() and c4.height() == 1
    hg = fx.hourglass()
    assert hg.is_connected() and hg.height() == 2
    edges = {frozenset(e) for e in c4.comparability_edges()}
    assert edges == {
        frozenset(("a", "v")),
        frozenset(("a", "w")),
        frozenset(("b", "v")),
        frozenset(("b", "w")),
    }
    with pytest.raises(EmptySubset):
        c4.comparability_edges([])
    with pytest.raises(EmptySubset):
        c4.induced([])


def test_comparability_graph_of_c4_is_a_cycle():
    c4 = fx.c4()
    adjacency = {p: set() for p in c4.points}
    for x, y in c4.comparability_edges():
        adjacency[x].add(y)
        adjacency[y].add(x)
    assert all(len(nbrs) == 2 for nbrs in adjacency.values())
    assert c4.is_connected()


def test_induced_keeps_carrier_order():
    hg = fx.hourglass()
    sub = hg.induced({"x", "b", "v"})
    assert sub.points == ("b", "v", "x")
    assert sub.lt("b", "x") and sub.lt("x", "v") and sub.lt("b", "v")


def test_classify_identity_on_c4():
    c4 = fx.c4()
    verdict = classify_map(PointMap.identity(c4))
    assert verdict.is_homomorphism and verdict.is_strict_on_subset
    assert verdict.is_surjective and verdict.is_retraction


def test_classify_constant_on_chain():
    chain = Poset.from_generators(["a", "v"], [("a", "v")])
    f = PointMap(chain, chain, ("v", "v"))
    verdict = classify_map(f)
    assert verdict.is_homomorphism
    assert not verdict.is_strict_on_subset
    assert verdict.is_retraction and not verdict.is_surjective


def test_classify_hourglass_to_c4_violation():
    hg = fx.hourglass()
    f = PointMap(hg, fx.c4(), ("a", "b", "v", "w", "v"))
    verdict = classify_map(f)
    assert not verdict.is_homomorphism
    assert verdict.homomorphism_violation == ("x", "w")


def test_classify_agrees_with_pairwise_scan():
    rng = random.Random(7)
    for poset in small_corpus(30, max_points=7):
        target = small_corpus(30, max_points=7)[rng.randrange(30)]
        values = tuple(rng.choice(target.points) for _ in poset.points)
        f = PointMap(poset, target, values)
        verdict = classify_map(f)
        hom = all(
            target.leq(f(x), f(y))
            for x in poset.points
            for y in poset.points
            if poset.leq(x, y)
        )
        strict = all(
            target.lt(f(x), f(y))
            for x in poset.points
            for y in poset.points
            if poset.lt(x, y)
        )
        assert verdict.is_homomorphism == hom
        assert verdict.is_strict_on_subset == strict
        assert verdict.is_surjective == (set(values) == set(target.points))


def test_retraction_requires_same_poset_and_idempotence():
    c4 = fx.c4()
    swap = PointMap(c4, c4, ("b", "a", "w", "v"))
    verdict = classify_map(swap)
    assert verdict.is_homomorphism and not verdict.is_retraction


def test_compose_and_mismatch():
    c4 = fx.c4()
    hg = fx.hourglass()
    to_c4 = PointMap(hg, c4, ("a", "b", "v", "w", "a"))
    ident = PointMap.identity(c4)
    assert to_c4.then(ident).as_dict() == to_c4.as_dict()
    with pytest.raises(TargetMismatch):
        ident.then(to_c4)


def test_pointmap_documents():
    c4 = fx.c4()
    f = PointMap.identity(c4)
    doc = pointmap_to_doc(f)
    again = pointmap_from_doc(doc, c4, c4)
    assert again.as_dict() == f.as_dict()
    with pytest.raises(DocumentError):
        pointmap_from_doc({}, c4, c4)
    with pytest.raises(DocumentError):
        PointMap.from_dict(c4, c4, {"a": "a"})
