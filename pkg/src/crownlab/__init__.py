"""Crown retracts in finite posets.

Decision procedures for 4-crown retracts via separating assignments of
improper crowns, explicit verified retraction construction, fence
retractions onto larger crowns, irreducible-point dismantling, height
reductions, and brute-force oracles cross-checking all of it.
"""

from . import errors
from .crowns import (
    CrownFamily,
    CrownKind,
    FourCrown,
    classify_crown,
    enumerate_four_crowns,
    improper_family,
    minimal_crown_through_edge,
    relevant_points,
)
from .oracle import (
    OracleBudget,
    crown_free,
    oracle_retraction_exists,
    oracle_surjective_hom_exists,
)
from .poset import (
    ExtremalDecomposition,
    MapClassification,
    PointMap,
    Poset,
    classify_map,
)
from .reduction import (
    ReductionResult,
    reduce_with_intersection_pattern,
    reduce_with_singleton_inners,
)
from .retraction import (
    DismantleTrace,
    ExtremalPartition,
    ScreenReport,
    check_partition_condition,
    dismantle,
    extend_from_extremals,
    fence_retraction,
    fixed_point_screen,
    lift_flat_hom,
    normalize_extremal_images,
    partition_induced_map,
    retract_crown_from_free_edge,
    retract_onto_four_crown,
    surjection_onto_four_crown,
)
from .search import (
    SearchResult,
    SearchStatus,
    SeparationWitness,
    clique_fast_paths,
    find_crown_separating,
    find_separating,
    verify_separating,
)

__all__ = [
    "errors",
    "CrownFamily",
    "CrownKind",
    "DismantleTrace",
    "ExtremalDecomposition",
    "ExtremalPartition",
    "FourCrown",
    "MapClassification",
    "OracleBudget",
    "PointMap",
    "Poset",
    "ReductionResult",
    "ScreenReport",
    "SearchResult",
    "SearchStatus",
    "SeparationWitness",
    "check_partition_condition",
    "classify_crown",
    "classify_map",
    "clique_fast_paths",
    "crown_free",
    "dismantle",
    "enumerate_four_crowns",
    "extend_from_extremals",
    "fence_retraction",
    "find_crown_separating",
    "find_separating",
    "fixed_point_screen",
    "improper_family",
    "lift_flat_hom",
    "minimal_crown_through_edge",
    "normalize_extremal_images",
    "oracle_retraction_exists",
    "oracle_surjective_hom_exists",
    "partition_induced_map",
    "reduce_with_intersection_pattern",
    "reduce_with_singleton_inners",
    "relevant_points",
    "retract_crown_from_free_edge",
    "retract_onto_four_crown",
    "surjection_onto_four_crown",
    "verify_separating",
]
