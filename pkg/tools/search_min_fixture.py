"""Exhaustive search for the smallest height-2 poset with the four pinned
properties of the complete-graph fixture:

  1. some proper 4-crown among the extremal points,
  2. exactly four improper 4-crowns forming a complete multigraph,
  3. exactly five proper crowns among the extremal points,
  4. every extremal edge contained in an improper 4-crown.

Structure: L mins, U maxes, M midpoints; each midpoint spans a non-empty
lower set and upper set; the extremal bipartite graph is the forced span
closure plus optional direct edges.  Property 4 forbids direct edges not
covered by improper crowns, so only covered extras are enumerated.

Usage: python3 search_min_fixture.py [n_points]
"""

import sys
from itertools import combinations, combinations_with_replacement


def pairs_of(bits_set):
    return list(combinations(sorted(bits_set), 2))


def search(total: int) -> list:
    hits = []
    for n_min in range(2, total - 2):
        for n_max in range(2, total - 1 - n_min):
            n_mid = total - n_min - n_max
            if n_mid < 1:
                continue
            mins = list(range(n_min))
            maxs = list(range(n_max))
            spans = [
                (frozenset(lo), frozenset(hi))
                for k in range(1, n_min + 1)
                for lo in combinations(mins, k)
                for j in range(1, n_max + 1)
                for hi in combinations(maxs, j)
            ]
            for config in combinations_with_replacement(spans, n_mid):
                # improper crowns: (lo pair, hi pair) inside one midpoint span
                family = set()
                for lo, hi in config:
                    for a, b in pairs_of(lo):
                        for v, w in pairs_of(hi):
                            family.add(((a, b), (v, w)))
                if len(family) != 4:
                    continue
                fam = sorted(family)
                if not all(
                    set(f[0]) & set(g[0]) and set(f[1]) & set(g[1])
                    for f, g in combinations(fam, 2)
                ):
                    continue
                covered = {
                    (x, y) for (lo, hi) in fam for x in lo for y in hi
                }
                forced = {
                    (x, y) for (lo, hi) in config for x in lo for y in hi
                }
                if not forced <= covered:
                    continue
                optional = sorted(covered - forced)
                for r in range(len(optional) + 1):
                    for extra in combinations(optional, r):
                        edges = forced | set(extra)
                        crowns = sum(
                            1
                            for a, b in combinations(mins, 2)
                            for v, w in combinations(maxs, 2)
                            if {(a, v), (a, w), (b, v), (b, w)} <= edges
                        )
                        if crowns != 9:
                            continue
                        # connectivity over mins+maxs+mids
                        adj = {("L", i): set() for i in mins}
                        adj |= {("U", i): set() for i in maxs}
                        adj |= {("M", i): set() for i in range(n_mid)}
                        for x, y in edges:
                            adj[("L", x)].add(("U", y))
                            adj[("U", y)].add(("L", x))
                        for i, (lo, hi) in enumerate(config):
                            for x in lo:
                                adj[("M", i)].add(("L", x))
                                adj[("L", x)].add(("M", i))
                            for y in hi:
                                adj[("M", i)].add(("U", y))
                                adj[("U", y)].add(("M", i))
                        seen = {("L", 0)}
                        stack = [("L", 0)]
                        while stack:
                            for nb in adj[stack.pop()]:
                                if nb not in seen:
                                    seen.add(nb)
                                    stack.append(nb)
                        if len(seen) != total:
                            continue
                        hits.append((n_min, n_max, config, sorted(edges)))
                        if len(hits) >= 3:
                            return hits
    return hits


if __name__ == "__main__":
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 9
    found = search(n)
    if not found:
        print(f"{n} points: no instance")
    for hit in found:
        print(f"{n} points: mins={hit[0]} maxs={hit[1]} spans={hit[2]} edges={hit[3]}")
