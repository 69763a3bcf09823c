"""Exception types shared across the package."""


class CrownLabError(Exception):
    """Base class for every error raised by crownlab."""


class DocumentError(CrownLabError):
    """A poset or point-map document is structurally malformed."""


class DuplicatePoint(CrownLabError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"duplicate point {point!r}")


class UnknownPoint(CrownLabError):
    def __init__(self, point, where=""):
        self.point = point
        suffix = f" in {where}" if where else ""
        super().__init__(f"unknown point {point!r}{suffix}")


class CycleDetected(CrownLabError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(
            f"order cycle through {self.pair[0]!r} and {self.pair[1]!r}"
        )


class EmptySubset(CrownLabError):
    """An operation that needs a non-empty point subset received an empty one."""


class NotConnected(CrownLabError):
    """The operation requires a connected poset."""


class NotACrown(CrownLabError):
    def __init__(self, points, reason):
        self.crown_points = tuple(points)
        self.reason = reason
        super().__init__(f"{sorted(map(str, points))} is not a 4-crown: {reason}")


class NotFlat(CrownLabError):
    """The operation requires a poset of height at most one."""


class NotAnEdge(CrownLabError):
    def __init__(self, x, y):
        self.edge = (x, y)
        super().__init__(f"({x!r}, {y!r}) is not a strict relation")


class TargetMismatch(CrownLabError):
    """Point maps over different posets were composed."""


class InvalidPartition(CrownLabError):
    """An extremal partition violated disjointness, coverage, or non-emptiness."""


class CrownNotInE(CrownLabError):
    """The given points are not a 4-crown inside the extremal sub-poset."""


class TooFewExtremalPoints(CrownLabError):
    """The search needs at least two minimal and two maximal points."""


class HypothesisViolated(CrownLabError):
    """The extension hypothesis fails: some point sees two lower images and
    two upper images with nothing shared."""

    def __init__(self, point, alpha, beta):
        self.point = point
        self.alpha = frozenset(alpha)
        self.beta = frozenset(beta)
        super().__init__(
            f"extension hypothesis fails at {point!r}: "
            f"lower images {sorted(alpha)}, upper images {sorted(beta)}"
        )


class TargetNotFlat(CrownLabError):
    """The lift target must be flat."""


class TargetHas4Crown(CrownLabError):
    def __init__(self, crown_points):
        self.crown_points = tuple(crown_points)
        super().__init__(
            f"lift target contains the 4-crown {sorted(map(str, crown_points))}"
        )


class EdgeMissing(CrownLabError):
    def __init__(self, x, y, reason="not an edge of the poset"):
        self.edge = (x, y)
        super().__init__(f"edge ({x!r}, {y!r}): {reason}")


class MinimalityViolated(CrownLabError):
    def __init__(self, edge, smaller):
        self.edge = edge
        self.smaller = tuple(smaller)
        super().__init__(
            f"a smaller crown of size {len(smaller)} passes through "
            f"({edge[0]!r}, {edge[1]!r})"
        )


class EdgeInImproperCrown(CrownLabError):
    def __init__(self, x, y, crown_points):
        self.edge = (x, y)
        self.crown_points = tuple(crown_points)
        super().__init__(
            f"edge ({x!r}, {y!r}) lies in the improper 4-crown "
            f"{sorted(map(str, crown_points))}"
        )


class NoCrownThroughEdge(CrownLabError):
    def __init__(self, x, y):
        self.edge = (x, y)
        super().__init__(f"no crown passes through edge ({x!r}, {y!r})")


class NotATwoClique(CrownLabError):
    """The two fragments are not distinct triples joined by both edge kinds."""


class EmptyFamily(CrownLabError):
    """The poset has no improper 4-crowns, so the reduction is undefined."""


class BudgetExceeded(CrownLabError):
    def __init__(self, detail):
        super().__init__(f"oracle budget exceeded: {detail}")
