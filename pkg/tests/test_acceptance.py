"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines live.
Every criterion is oracle-anchored or property-based at desk scale; all
tolerances are exact (agreement must be 100%).
"""

import random
import time

from conftest import (
    ALL_FIXTURE_POSETS,
    big_crown_corpus,
    crown_free_corpus,
    flat_crown_corpus,
    general_corpus,
    improper_corpus,
)
from crownlab.crowns import enumerate_four_crowns, improper_family, is_crown, minimal_crown_through_edge
from crownlab.errors import HypothesisViolated
from crownlab.multigraphs import (
    collapse_to_triple,
    improper_crown_graph,
    template_crown,
)
from crownlab.oracle import (
    OracleBudget,
    crown_free,
    oracle_retraction_exists,
    oracle_surjective_hom_exists,
)
from crownlab.poset import PointMap, classify_map
from crownlab.reduction import (
    reduce_with_intersection_pattern,
    reduce_with_singleton_inners,
)
from crownlab.retraction import (
    ExtremalPartition,
    dismantle,
    extend_from_extremals,
    fence_retraction,
    lift_flat_hom,
    partition_induced_map,
    retract_onto_four_crown,
)
from crownlab.search import (
    SearchStatus,
    clique_fast_paths,
    find_crown_separating,
    find_separating,
    verify_separating,
)


def _emit(num: int, ok: bool, detail: str) -> None:
    print(f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, detail


def _corpus_with_fixtures():
    posets = [p for p in ALL_FIXTURE_POSETS.values() if p.n <= 12]
    posets += list(general_corpus(300))
    return posets


def test_criterion_1_retract_decision_matches_oracle():
    start = time.perf_counter()
    checked = 0
    disagreements = 0
    for poset in _corpus_with_fixtures():
        fam = improper_family(poset)
        for crown in enumerate_four_crowns(poset):
            pts = list(crown.lo + crown.hi)
            built = retract_onto_four_crown(poset, pts, fam=fam)
            expected = oracle_retraction_exists(poset, pts).exists
            checked += 1
            if (built is not None) != expected:
                disagreements += 1
            if built is not None:
                verdict = classify_map(built)
                assert verdict.is_retraction
                assert set(built.image()) == set(pts)
    elapsed = time.perf_counter() - start
    ok = disagreements == 0 and checked > 0 and elapsed < 300
    _emit(
        1,
        ok,
        f"retract pipeline vs oracle on {checked} anchored crowns, "
        f"{disagreements} disagreements, {elapsed:.1f}s (< 300s)",
    )


def test_criterion_2_surjection_decision_matches_oracle():
    target = template_crown()
    checked = 0
    disagreements = 0
    for poset in _corpus_with_fixtures():
        if len(poset.minimal_points()) < 2 or len(poset.maximal_points()) < 2:
            continue
        fam = improper_family(poset)
        decision = find_separating(poset, fam).status is SearchStatus.FOUND
        expected = oracle_surjective_hom_exists(poset, target).exists
        checked += 1
        if decision != expected:
            disagreements += 1
    ok = disagreements == 0 and checked >= 250
    _emit(
        2,
        ok,
        f"separating decision vs surjection oracle on {checked} posets, "
        f"{disagreements} disagreements",
    )


def test_criterion_3_restricted_search_conformance():
    checked = 0
    failures = 0
    for poset in _corpus_with_fixtures():
        fam = improper_family(poset)
        for crown in enumerate_four_crowns(poset):
            if crown.is_improper:
                continue
            pts = list(crown.lo + crown.hi)
            full = find_crown_separating(
                poset, fam, pts, domain="all", pin=False, fast_paths=False
            )
            if full.status is not SearchStatus.FOUND:
                continue
            checked += 1
            pinned = find_crown_separating(poset, fam, pts, fast_paths=False)
            collapsed = {i: collapse_to_triple(s) for i, s in full.assignment.items()}
            recheck = verify_separating(poset, fam, collapsed, full.witness)
            if pinned.status is not SearchStatus.FOUND or not recheck.ok:
                failures += 1
    ok = failures == 0 and checked > 0
    _emit(
        3,
        ok,
        f"triple-restricted pinned search and collapse re-verification on "
        f"{checked} found instances, {failures} failures",
    )


def test_criterion_4_extension_hypothesis_and_restriction():
    rng = random.Random("criterion-4")
    checked_ok = 0
    checked_violations = 0
    failures = 0
    for poset in _corpus_with_fixtures():
        mins = list(poset.minimal_points())
        maxs = list(poset.maximal_points())
        if len(mins) < 2 or len(maxs) < 2:
            continue
        min_set, max_set = set(mins), set(maxs)
        splits = []
        for _ in range(3):
            cut_lo = rng.randint(1, len(mins) - 1)
            cut_hi = rng.randint(1, len(maxs) - 1)
            lo = rng.sample(mins, cut_lo)
            hi = rng.sample(maxs, cut_hi)
            splits.append(
                ExtremalPartition(
                    frozenset(lo),
                    frozenset(min_set - set(lo)),
                    frozenset(hi),
                    frozenset(max_set - set(hi)),
                )
            )
        for part in splits:
            f = partition_induced_map(poset, part)
            # independent scan for the blocking condition
            blocked = any(
                len({f(m) for m in poset.down_set(x) if m in min_set}) >= 2
                and len({f(m) for m in poset.up_set(x) if m in max_set}) >= 2
                for x in poset.points
            )
            try:
                g = extend_from_extremals(poset, f)
            except HypothesisViolated:
                checked_violations += 1
                if not blocked:
                    failures += 1
                continue
            checked_ok += 1
            verdict = classify_map(g)
            if blocked or not verdict.is_homomorphism:
                failures += 1
            if any(g(p) != f(p) for p in f.source.points):
                failures += 1
    ok = failures == 0 and checked_ok > 0 and checked_violations > 0
    _emit(
        4,
        ok,
        f"extension checked on {checked_ok} passing and "
        f"{checked_violations} blocked partition maps, {failures} failures",
    )


def test_criterion_5_fence_retractions_on_flat_corpus():
    checked = 0
    failures = 0
    for poset in flat_crown_corpus(100):
        edge = None
        for x, y in poset.comparability_edges():
            if minimal_crown_through_edge(poset, x, y) is not None:
                edge = (x, y)
                break
        assert edge is not None  # corpus guarantees a crown
        crown = minimal_crown_through_edge(poset, *edge)
        mapping = fence_retraction(poset, crown, edge)
        verdict = classify_map(mapping)
        checked += 1
        if not (
            verdict.is_homomorphism
            and verdict.is_retraction
            and set(mapping.image()) == set(crown)
            and is_crown(poset, crown)
        ):
            failures += 1
    ok = failures == 0 and checked == 100
    _emit(
        5,
        ok,
        f"verified fence retractions onto minimal crowns on {checked} flat "
        f"posets, {failures} failures",
    )


def test_criterion_6_lift_through_big_crowns():
    lifted = 0
    failures = 0
    converse_checked = 0
    budget = OracleBudget(max_source_size=14, max_maps=500_000_000)
    for poset, crown in big_crown_corpus(40):
        deco = poset.extremal_decomposition()
        esub = poset.induced(deco.extremal)
        on_extremal = oracle_retraction_exists(esub, crown, budget)
        on_whole = oracle_retraction_exists(poset, crown, budget)
        converse_checked += 1
        if on_extremal.exists != on_whole.exists:
            failures += 1
        if on_extremal.exists:
            crown_sub = poset.induced(crown)
            f = PointMap(esub, crown_sub, on_extremal.witness.values)
            g = lift_flat_hom(poset, f)
            lifted += 1
            as_self = PointMap(poset, poset, g.values)
            verdict = classify_map(as_self)
            if not verdict.is_retraction or set(as_self.image()) != set(crown):
                failures += 1
    ok = failures == 0 and lifted >= 30
    _emit(
        6,
        ok,
        f"{lifted} verified lifts (>= 30 needed) and extremal/whole oracle "
        f"agreement on {converse_checked} instances, {failures} failures",
    )


def test_criterion_7_dismantling_crown_free_extremal_points():
    checked = 0
    failures = 0
    for poset in crown_free_corpus(50):
        deco = poset.extremal_decomposition()
        assert crown_free(poset.induced(deco.extremal))
        trace = dismantle(poset)
        checked += 1
        if not trace.reached_singleton:
            failures += 1
        sizes = [len(step.remaining) for step in trace.steps]
        assert sizes == list(range(poset.n - 1, poset.n - 1 - len(sizes), -1))
    ok = failures == 0 and checked == 50
    _emit(
        7,
        ok,
        f"greedy dismantling reached a singleton on {checked} crown-free "
        f"instances, {failures} failures",
    )


def test_criterion_8_reductions_preserve_crown_graph():
    instances = [
        p for p in ALL_FIXTURE_POSETS.values() if improper_family(p).crowns
    ]
    instances += list(improper_corpus(100))
    checked = 0
    failures = 0
    for poset in instances:
        fam = improper_family(poset)
        r1 = reduce_with_singleton_inners(poset, fam)
        r2 = reduce_with_intersection_pattern(poset, fam)
        checked += 1
        if not (r1.ok and r2.ok):
            failures += 1
        if r1.poset.height() > 2 or r2.poset.height() > 2:
            failures += 1
    ok = failures == 0 and checked >= 100
    _emit(
        8,
        ok,
        f"both reductions verified on {checked} instances with improper "
        f"crowns, {failures} failures",
    )


def test_criterion_9_fast_paths_agree_with_search_and_oracle():
    decided = 0
    complete_checked = 0
    failures = 0
    for poset in _corpus_with_fixtures():
        fam = improper_family(poset)
        graph = improper_crown_graph(poset, fam)
        complete = bool(fam.crowns) and graph.is_complete()
        for crown in enumerate_four_crowns(poset):
            if crown.is_improper:
                continue
            pts = list(crown.lo + crown.hi)
            fast = clique_fast_paths(poset, fam, pts)
            if fast is not None:
                decided += 1
                general = find_crown_separating(poset, fam, pts, fast_paths=False)
                if fast.status != general.status:
                    failures += 1
            if complete and poset.n <= 12:
                free_edge_exists = any(
                    not any({lo, hi} <= c.points for c in fam.crowns)
                    for lo in crown.lo
                    for hi in crown.hi
                )
                complete_checked += 1
                if free_edge_exists != oracle_retraction_exists(poset, pts).exists:
                    failures += 1
    ok = failures == 0 and decided > 0 and complete_checked > 0
    _emit(
        9,
        ok,
        f"fast paths agreed with search on {decided} decisions; free-edge "
        f"criterion matched the oracle on {complete_checked} complete-graph "
        f"instances, {failures} failures",
    )


def test_criterion_10_membership_invariants_on_found_assignments():
    found = 0
    violations = 0
    for poset in _corpus_with_fixtures():
        fam = improper_family(poset)
        for crown in enumerate_four_crowns(poset):
            if crown.is_improper:
                continue
            pts = list(crown.lo + crown.hi)
            result = find_crown_separating(poset, fam, pts)
            if result.status is not SearchStatus.FOUND:
                continue
            found += 1
            lo, hi = set(crown.lo), set(crown.hi)
            for i, member in enumerate(fam.crowns):
                value = result.assignment[i]
                if lo <= member.points and value not in (
                    frozenset("abv"),
                    frozenset("abw"),
                ):
                    violations += 1
                if hi <= member.points and value not in (
                    frozenset("avw"),
                    frozenset("bvw"),
                ):
                    violations += 1
            for fragment in set(result.assignment.values()):
                covered = set()
                for i, member in enumerate(fam.crowns):
                    if result.assignment[i] == fragment:
                        covered |= member.points
                if set(pts) <= covered:
                    violations += 1
    ok = violations == 0 and found > 0
    _emit(
        10,
        ok,
        f"membership invariants held on {found} found assignments, "
        f"{violations} violations",
    )
