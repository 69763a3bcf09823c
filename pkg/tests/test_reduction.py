"""Height-2 reductions preserving the improper-crown multigraph."""

from itertools import permutations

import pytest

from crownlab import fixtures as fx
from crownlab.crowns import improper_family
from crownlab.errors import EmptyFamily
from crownlab.poset import Poset
from crownlab.reduction import (
    reduce_with_intersection_pattern,
    reduce_with_singleton_inners,
)


def isomorphic(p: Poset, q: Poset) -> bool:
    if p.n != q.n:
        return False
    for perm in permutations(q.points):
        table = dict(zip(p.points, perm))
        if all(
            p.leq(x, y) == q.leq(table[x], table[y])
            for x in p.points
            for y in p.points
        ):
            return True
    return False


def test_method1_hourglass_reproduces_itself():
    poset = fx.hourglass()
    result = reduce_with_singleton_inners(poset, improper_family(poset))
    assert result.ok
    assert isomorphic(result.poset, poset)


def test_method1_two_mid_collapses_inner():
    poset = fx.two_mid()
    result = reduce_with_singleton_inners(poset, improper_family(poset))
    assert result.ok
    assert result.poset.n == 5  # 4 crown points plus a single fresh atom
    assert len(result.atom_names) == 1
    assert isomorphic(result.poset, fx.hourglass())


def test_method1_w2_disjoint_atoms():
    poset = fx.w2()
    result = reduce_with_singleton_inners(poset, improper_family(poset))
    assert result.ok
    assert len(result.atom_names) == 2
    fam_r = improper_family(result.poset)
    inners = [c.inner for c in fam_r.crowns]
    assert all(len(i) == 1 for i in inners)
    assert inners[0] != inners[1]


def test_method2_hourglass():
    poset = fx.hourglass()
    result = reduce_with_intersection_pattern(poset, improper_family(poset))
    assert result.ok
    assert isomorphic(result.poset, poset)


def test_method2_nested_inners_collapse_to_single_atom():
    poset = fx.nested_inners()
    fam = improper_family(poset)
    inners = sorted((sorted(c.inner) for c in fam.crowns), key=len)
    assert inners == [["x"], ["x"], ["x", "y"]]
    result = reduce_with_intersection_pattern(poset, fam)
    assert result.ok
    # intersections are {x} and {x,y}; only {x} is inclusion-minimal
    assert len(result.atom_names) == 1
    fam_r = improper_family(result.poset)
    assert all(len(c.inner) == 1 for c in fam_r.crowns)


def test_method2_w2_keeps_disjoint_atoms():
    poset = fx.w2()
    result = reduce_with_intersection_pattern(poset, improper_family(poset))
    assert result.ok
    assert len(result.atom_names) == 2


def test_reductions_keep_crown_relations():
    for name in ("hourglass", "two_mid", "w2", "nested_inners", "p9_like"):
        poset = fx.ALL_FIXTURES[name]()
        fam = improper_family(poset)
        for build in (reduce_with_singleton_inners, reduce_with_intersection_pattern):
            result = build(poset, fam)
            assert result.ok
            assert result.poset.height() <= 2
            kept = [p for p in result.poset.points if p in set(poset.points)]
            for x in kept:
                for y in kept:
                    assert poset.leq(x, y) == result.poset.leq(x, y)


def test_empty_family_rejected():
    poset = fx.c4()
    fam = improper_family(poset)
    with pytest.raises(EmptyFamily):
        reduce_with_singleton_inners(poset, fam)
    with pytest.raises(EmptyFamily):
        reduce_with_intersection_pattern(poset, fam)


def test_fresh_names_avoid_collisions():
    # a kept crown point already called "#1" pushes atoms to a longer prefix
    poset = Poset.from_generators(
        ["#1", "b", "v", "w", "x"],
        [("#1", "x"), ("b", "x"), ("x", "v"), ("x", "w")],
    )
    result = reduce_with_singleton_inners(poset, improper_family(poset))
    assert result.ok
    assert result.atom_names == ("##1",)
    assert "#1" in result.poset.points
