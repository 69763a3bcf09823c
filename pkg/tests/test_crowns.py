"""Crown enumeration, classification, families, and minimal crowns."""

import pytest

from conftest import ALL_FIXTURE_POSETS, four_subset_crown_filter, small_corpus
from crownlab import fixtures as fx
from crownlab.crowns import (
    CrownKind,
    classify_crown,
    enumerate_four_crowns,
    improper_family,
    is_crown,
    minimal_crown_through_edge,
    relevant_points,
)
from crownlab.errors import NotACrown, NotAnEdge, NotFlat
from crownlab.poset import Poset


def test_c4_single_proper_crown():
    crowns = enumerate_four_crowns(fx.c4())
    assert len(crowns) == 1
    assert crowns[0].kind is CrownKind.PROPER and crowns[0].inner == frozenset()


def test_hourglass_crown():
    crowns = enumerate_four_crowns(fx.hourglass())
    assert len(crowns) == 1
    assert crowns[0].kind is CrownKind.HOURGLASS
    assert crowns[0].inner == {"x"}


def test_two_mid_improper_not_hourglass():
    crowns = enumerate_four_crowns(fx.two_mid())
    assert len(crowns) == 1
    crown = crowns[0]
    assert crown.kind is CrownKind.IMPROPER and crown.inner == {"x", "y"}
    poset = fx.two_mid()
    # no single inner point dominates the inner from below or above
    for z in crown.inner:
        assert not all(
            poset.leq(z, other) or poset.leq(other, z) for other in crown.inner
        )


def test_enumeration_matches_four_subset_filter():
    posets = list(ALL_FIXTURE_POSETS.values()) + [
        p for p in small_corpus(40) if p.n <= 8
    ]
    for poset in posets:
        expected = {
            (pts, inner, kind) for pts, inner, kind in four_subset_crown_filter(poset)
        }
        got = {
            (c.points, c.inner, c.kind.value) for c in enumerate_four_crowns(poset)
        }
        assert got == expected


def test_inner_symmetry_and_disjointness():
    for poset in list(ALL_FIXTURE_POSETS.values()) + list(small_corpus(30)):
        for crown in enumerate_four_crowns(poset):
            a, b = crown.lo
            v, w = crown.hi
            one = poset.interval(a, v) & poset.interval(b, w)
            two = poset.interval(a, w) & poset.interval(b, v)
            assert one == two == crown.inner
            assert not crown.inner & crown.points


def test_classify_crown_accepts_and_labels():
    hg = fx.hourglass()
    crown = classify_crown(hg, ["w", "b", "a", "v"])
    assert crown.lo == ("a", "b") and crown.hi == ("v", "w")
    assert crown.kind is CrownKind.HOURGLASS


def test_classify_crown_rejections():
    hg = fx.hourglass()
    with pytest.raises(NotACrown):
        classify_crown(hg, ["a", "b", "v", "v"])
    with pytest.raises(NotACrown):
        classify_crown(hg, ["a", "b", "x", "v"])  # chain through x
    with pytest.raises(NotACrown):
        classify_crown(fx.fence(5), ["f0", "f1", "f2", "f3"])  # missing relation
    antichain = Poset.from_generators(["a", "b", "c", "d"], [])
    with pytest.raises(NotACrown):
        classify_crown(antichain, ["a", "b", "c", "d"])


def test_improper_family_flat_is_empty():
    for name in ("c4", "six_crown", "fence5", "flat6_decorated"):
        assert len(improper_family(ALL_FIXTURE_POSETS[name])) == 0


def test_improper_family_sizes_and_point_index():
    assert len(improper_family(fx.hourglass())) == 1
    fam = improper_family(fx.w2())
    assert len(fam) == 2
    assert fam.members_containing("b") == (0, 1)
    assert fam.members_containing("w") == (0, 1)
    assert fam.members_containing("a") == (0,)
    crowns = {tuple(c.lo + c.hi) for c in fam.crowns}
    assert crowns == {("a", "b", "v", "w"), ("b", "c", "w", "u")}


def test_relevant_points():
    assert relevant_points(fx.c4()).points == frozenset()
    assert relevant_points(fx.hourglass()).points == {"a", "b", "v", "w", "x"}
    pendant = fx.c4_with_pendant_chain()
    assert pendant.extremal_decomposition().middle  # non-extremal points exist
    assert relevant_points(pendant).points == frozenset()
    core = relevant_points(fx.hourglass()).core
    assert set(core.points) == {"a", "b", "v", "w", "x"}


def test_minimal_crown_through_edge_c4():
    crown = minimal_crown_through_edge(fx.c4(), "a", "v")
    assert crown is not None and len(crown) == 4
    assert crown[0] == "a" and crown[-1] == "v"
    assert set(crown) == {"a", "b", "v", "w"}


def test_minimal_crown_through_edge_six_crown():
    k6 = fx.big_crown(6)
    crown = minimal_crown_through_edge(k6, "c0", "c1")
    assert crown is not None and len(crown) == 6
    assert set(crown) == set(k6.points)


def test_minimal_crown_through_edge_fence_absent():
    assert minimal_crown_through_edge(fx.fence(5), "f0", "f1") is None


def test_minimal_crown_shortcut_through_added_top():
    poset = fx.six_crown_plus_top()
    crown = minimal_crown_through_edge(poset, "c0", "c1")
    assert crown is not None and len(crown) == 4
    assert set(crown) == {"c0", "c1", "c2", "u"}


def test_minimal_crown_errors():
    with pytest.raises(NotFlat):
        minimal_crown_through_edge(fx.hourglass(), "a", "v")
    with pytest.raises(NotAnEdge):
        minimal_crown_through_edge(fx.c4(), "a", "b")
    with pytest.raises(NotAnEdge):
        minimal_crown_through_edge(fx.c4(), "v", "a")


def test_minimal_crowns_are_chordless_on_corpus():
    from conftest import flat_crown_corpus

    for poset in flat_crown_corpus(25):
        for x, y in poset.comparability_edges():
            crown = minimal_crown_through_edge(poset, x, y)
            if crown is None:
                continue
            assert is_crown(poset, crown)
            # chordless: only consecutive cycle points are comparable
            n = len(crown)
            for i in range(n):
                for j in range(i + 1, n):
                    comparable = poset.lt(crown[i], crown[j]) or poset.lt(
                        crown[j], crown[i]
                    )
                    adjacent = j == i + 1 or (i == 0 and j == n - 1)
                    assert comparable == adjacent
