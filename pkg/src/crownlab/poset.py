"""Finite posets on named points, plus total point maps between them.

The order relation is stored densely: one bitmask per point over the
carrier indices, kept reflexively and transitively closed.  At the scale
this package targets (carriers well under ~50 points) the dense form is
both the simplest and the fastest choice.  Point identifiers are opaque
strings externally and dense integer indices internally; the index order
is the listed order of the carrier, which makes every iteration order in
the package deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    CycleDetected,
    DocumentError,
    DuplicatePoint,
    EmptySubset,
    TargetMismatch,
    UnknownPoint,
)


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset.

    Instances are safe to share across threads: construction closes the
    relation once and nothing mutates afterwards.
    """

    __slots__ = ("points", "index", "_up", "_down")

    def __init__(self, points: Iterable[str], up_rows: Iterable[int]):
        """Trusted constructor: ``up_rows[i]`` must already be the closed
        up-set mask of point ``i``.  Use :meth:`from_generators` for raw input."""
        self.points: tuple[str, ...] = tuple(points)
        self.index: dict[str, int] = {p: i for i, p in enumerate(self.points)}
        self._up: tuple[int, ...] = tuple(up_rows)
        down = [0] * len(self.points)
        for i, row in enumerate(self._up):
            for j in bits(row):
                down[j] |= 1 << i
        self._down: tuple[int, ...] = tuple(down)

    # -- construction ---------------------------------------------------

    @classmethod
    def from_generators(
        cls, points: Iterable[str], pairs: Iterable[tuple[str, str]]
    ) -> "Poset":
        """Build a poset from arbitrary strictly-below generator pairs.

        The pairs need not be covers; the reflexive-transitive closure is
        taken.  Rejects duplicate or unknown point names and any cycle the
        closure uncovers.
        """
        pts = list(points)
        if not pts:
            raise DocumentError("carrier must be non-empty")
        index: dict[str, int] = {}
        for i, p in enumerate(pts):
            if not isinstance(p, str):
                raise DocumentError(f"point names must be strings, got {p!r}")
            if p in index:
                raise DuplicatePoint(p)
            index[p] = i
        n = len(pts)
        up = [1 << i for i in range(n)]
        for pair in pairs:
            x, y = pair
            if x not in index:
                raise UnknownPoint(x, "generator pairs")
            if y not in index:
                raise UnknownPoint(y, "generator pairs")
            if x == y:
                raise CycleDetected((x, y))
            up[index[x]] |= 1 << index[y]
        # closure by repeated squaring of the reachability rows
        changed = True
        while changed:
            changed = False
            for i in range(n):
                row = up[i]
                acc = row
                rest = row
                while rest:
                    low = rest & -rest
                    acc |= up[low.bit_length() - 1]
                    rest ^= low
                if acc != row:
                    up[i] = acc
                    changed = True
        for i in range(n):
            for j in bits(up[i]):
                if j != i and (up[j] >> i) & 1:
                    raise CycleDetected((pts[i], pts[j]))
        return cls(pts, up)

    @classmethod
    def from_doc(cls, doc: dict) -> "Poset":
        """Parse the standard poset document: ``{"points": [...], "pairs": [[x, y], ...]}``."""
        if not isinstance(doc, dict):
            raise DocumentError("poset document must be a mapping")
        if "points" not in doc or "pairs" not in doc:
            raise DocumentError('poset document needs "points" and "pairs" keys')
        points = doc["points"]
        pairs = doc["pairs"]
        if not isinstance(points, list):
            raise DocumentError('"points" must be a list of strings')
        if not isinstance(pairs, list):
            raise DocumentError('"pairs" must be a list of 2-element lists')
        norm = []
        for pair in pairs:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise DocumentError(f"malformed pair {pair!r}")
            norm.append((pair[0], pair[1]))
        return cls.from_generators(points, norm)

    def to_doc(self) -> dict:
        """Emit the document form; pairs are reduced to covering pairs."""
        return {
            "points": list(self.points),
            "pairs": [[x, y] for x, y in self.covers()],
        }

    # -- basics ----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: str) -> bool:
        return point in self.index

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poset)
            and self.points == other.points
            and self._up == other._up
        )

    def __hash__(self) -> int:
        return hash((self.points, self._up))

    def __repr__(self) -> str:
        return f"Poset({len(self.points)} points, {len(list(self.strict_pairs()))} edges)"

    def _require(self, point: str) -> int:
        try:
            return self.index[point]
        except KeyError:
            raise UnknownPoint(point) from None

    # -- mask-level helpers (used heavily by sibling modules) ------------

    def up_mask(self, i: int) -> int:
        return self._up[i]

    def down_mask(self, i: int) -> int:
        return self._down[i]

    def mask_of(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            mask |= 1 << self._require(name)
        return mask

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.points[i] for i in bits(mask))

    # -- order queries ----------------------------------------------------

    def leq(self, x: str, y: str) -> bool:
        return bool((self._up[self._require(x)] >> self._require(y)) & 1)

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.leq(x, y)

    def down_set(self, y: str) -> frozenset[str]:
        return frozenset(self.names_of(self._down[self._require(y)]))

    def up_set(self, y: str) -> frozenset[str]:
        return frozenset(self.names_of(self._up[self._require(y)]))

    def interval(self, x: str, y: str) -> frozenset[str]:
        mask = self._up[self._require(x)] & self._down[self._require(y)]
        return frozenset(self.names_of(mask))

    def strict_pairs(self) -> Iterator[tuple[str, str]]:
        """All strict relations (x, y) with x < y, in carrier order."""
        for i, row in enumerate(self._up):
            for j in bits(row & ~(1 << i)):
                yield self.points[i], self.points[j]

    # -- extremal structure ------------------------------------------------

    def minimal_points(self) -> tuple[str, ...]:
        return tuple(
            p for i, p in enumerate(self.points) if self._down[i] == 1 << i
        )

    def maximal_points(self) -> tuple[str, ...]:
        return tuple(p for i, p in enumerate(self.points) if self._up[i] == 1 << i)

    def extremal_decomposition(self) -> "ExtremalDecomposition":
        minimal = self.minimal_points()
        maximal = self.maximal_points()
        ext = set(minimal) | set(maximal)
        extremal = tuple(p for p in self.points if p in ext)
        middle = tuple(p for p in self.points if p not in ext)
        return ExtremalDecomposition(minimal, maximal, extremal, middle)

    # -- structure queries ---------------------------------------------------

    def comparability_adjacency(self) -> list[int]:
        """Per point, the mask of points strictly comparable to it."""
        return [
            (self._up[i] | self._down[i]) & ~(1 << i) for i in range(len(self.points))
        ]

    def is_connected(self) -> bool:
        if len(self.points) == 1:
            return True
        adj = self.comparability_adjacency()
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= adj[i]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << len(self.points)) - 1

    def height(self) -> int:
        """Maximal chain length, counted in edges (a flat poset has height 1)."""
        return max(self.levels())

    def is_flat(self) -> bool:
        return self.height() <= 1

    def levels(self) -> tuple[int, ...]:
        """Length of the longest chain ending at each point."""
        order = sorted(range(len(self.points)), key=lambda i: bin(self._down[i]).count("1"))
        level = [0] * len(self.points)
        for i in order:
            below = self._down[i] & ~(1 << i)
            if below:
                level[i] = 1 + max(level[j] for j in bits(below))
        return tuple(level)

    def induced(self, names: Iterable[str]) -> "Poset":
        """Sub-poset on the given points, keeping the carrier order."""
        chosen = set(names)
        if not chosen:
            raise EmptySubset("induced sub-poset needs a non-empty point set")
        idxs = [i for i, p in enumerate(self.points) if p in chosen]
        for name in chosen:
            self._require(name)
        pos = {old: new for new, old in enumerate(idxs)}
        rows = []
        for old in idxs:
            row = 0
            for j in bits(self._up[old]):
                if j in pos:
                    row |= 1 << pos[j]
            rows.append(row)
        return Poset((self.points[i] for i in idxs), rows)

    def comparability_edges(
        self, names: Iterable[str] | None = None
    ) -> list[tuple[str, str]]:
        """Edges of the comparability graph on ``names`` (default: all points).

        Each edge is emitted once, oriented as (lower, upper).
        """
        if names is None:
            chosen = set(self.points)
        else:
            chosen = set(names)
            if not chosen:
                raise EmptySubset("comparability graph needs a non-empty point set")
            for name in chosen:
                self._require(name)
        out = []
        for i, p in enumerate(self.points):
            if p not in chosen:
                continue
            for j in bits(self._up[i] & ~(1 << i)):
                q = self.points[j]
                if q in chosen:
                    out.append((p, q))
        return out

    def covers(self) -> list[tuple[str, str]]:
        """Hasse covering pairs (x, y): x < y with nothing strictly between."""
        out = []
        for i in range(len(self.points)):
            strict_up = self._up[i] & ~(1 << i)
            for j in bits(strict_up):
                between = strict_up & self._down[j] & ~(1 << j)
                if not between:
                    out.append((self.points[i], self.points[j]))
        return out


@dataclass(frozen=True)
class ExtremalDecomposition:
    """Minimal / maximal / extremal / non-extremal points, in carrier order."""

    minimal: tuple[str, ...]
    maximal: tuple[str, ...]
    extremal: tuple[str, ...]
    middle: tuple[str, ...]


# -- point maps -------------------------------------------------------------


@dataclass(frozen=True)
class PointMap:
    """A total map between poset carriers.

    Verdicts (homomorphism, strictness, retraction) are never cached on the
    map; :func:`classify_map` recomputes them from scratch every time.
    """

    source: Poset
    target: Poset
    values: tuple[str, ...]  # aligned with source.points

    def __post_init__(self):
        if len(self.values) != len(self.source.points):
            raise DocumentError("point map must be total on the source carrier")
        for v in self.values:
            if v not in self.target.index:
                raise UnknownPoint(v, "map values")

    @classmethod
    def from_dict(cls, source: Poset, target: Poset, mapping: dict) -> "PointMap":
        values = []
        for p in source.points:
            if p not in mapping:
                raise DocumentError(f"point map misses an image for {p!r}")
            values.append(mapping[p])
        return cls(source, target, tuple(values))

    @classmethod
    def identity(cls, poset: Poset) -> "PointMap":
        return cls(poset, poset, poset.points)

    def __call__(self, point: str) -> str:
        return self.values[self.source._require(point)]

    def as_dict(self) -> dict[str, str]:
        return dict(zip(self.source.points, self.values))

    def image(self) -> tuple[str, ...]:
        seen = set(self.values)
        return tuple(p for p in self.target.points if p in seen)

    def then(self, other: "PointMap") -> "PointMap":
        """Composition: first self, then other."""
        if self.target != other.source:
            raise TargetMismatch("composition needs matching middle poset")
        return PointMap(
            self.source, other.target, tuple(other(v) for v in self.values)
        )

    def restrict(self, names: Iterable[str]) -> "PointMap":
        sub = self.source.induced(names)
        return PointMap(sub, self.target, tuple(self(p) for p in sub.points))


@dataclass(frozen=True)
class MapClassification:
    is_homomorphism: bool
    homomorphism_violation: tuple[str, str] | None
    is_strict_on_subset: bool
    strictness_violation: tuple[str, str] | None
    is_surjective: bool
    is_retraction: bool


def classify_map(
    f: PointMap, strictness_subset: Iterable[str] | None = None
) -> MapClassification:
    """Recompute all verdicts for ``f``.

    ``is_strict_on_subset`` refers to the given subset (default: the whole
    source carrier): every strict relation inside it must map to a strict
    relation.  ``is_retraction`` additionally requires source and target to
    be the same poset and the map to be idempotent, which fixes its image
    pointwise.
    """
    src, tgt = f.source, f.target
    hom = True
    hom_violation = None
    for x, y in src.strict_pairs():
        if not tgt.leq(f(x), f(y)):
            hom = False
            hom_violation = (x, y)
            break
    subset = set(strictness_subset) if strictness_subset is not None else set(src.points)
    for name in subset:
        src._require(name)
    strict = True
    strict_violation = None
    for x, y in src.strict_pairs():
        if x in subset and y in subset and not tgt.lt(f(x), f(y)):
            strict = False
            strict_violation = (x, y)
            break
    surjective = set(f.values) == set(tgt.points)
    retraction = (
        src == tgt and hom and all(f(v) == v for v in set(f.values))
    )
    return MapClassification(
        hom, hom_violation, strict, strict_violation, surjective, retraction
    )


def pointmap_to_doc(f: PointMap) -> dict:
    """Serialize a point map in the shared certificate format."""
    return {"map": f.as_dict()}


def pointmap_from_doc(doc: dict, source: Poset, target: Poset | None = None) -> PointMap:
    if not isinstance(doc, dict) or "map" not in doc or not isinstance(doc["map"], dict):
        raise DocumentError('point-map document needs a "map" mapping')
    return PointMap.from_dict(source, target if target is not None else source, doc["map"])
