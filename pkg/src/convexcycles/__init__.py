"""Minimum-crossing cycling 2-factors of complete geometric graphs with
vertices in convex position.

Exact solvers (brute force, branch and bound, a crossing-free decision by
interval DP), constructive rewrites with per-step crossing budgets, the
hull-transposition distance with its bound checks, and file/CLI plumbing.
"""

from convexcycles.crossings import (
    CyclingVerdict,
    SidePartition,
    TwoFactor,
    count_crossings,
    crossings_of_edge,
    cycles_of,
    edges_between,
    edges_cross,
    side_partition,
    validate_cycling,
)
from convexcycles.distance import (
    BoundReport,
    DistanceAtlas,
    DistanceResult,
    ScanRecord,
    ScanReport,
    distance_atlas,
    extremal_crossings,
    extremal_two_factor,
    multiset_sequences,
    scan_instances,
    state_count,
    transposition_distance,
    uniqueness_scan,
    verify_bounds,
)
from convexcycles.instance import (
    CapExceededError,
    ConvexInstance,
    InputError,
    InternalError,
    Transposition,
    Verdict,
    apply_transposition,
    canonical_form,
    extremal_instance,
    hull_neighbor_pairs,
    is_hull_adjacent,
    symmetry_orbit,
    validate_instance,
)
from convexcycles.solver import (
    CrossingFreeWitness,
    SolveResult,
    admits_crossing_free,
    enumerate_cycling_two_factors,
    list_all_optima,
    min_crossings_bnb,
    min_crossings_bruteforce,
    two_factor_count,
)
from convexcycles.transforms import (
    UnwindResult,
    UnwindStep,
    construct_k3,
    insert_hull_edge,
    split_long_cycles,
    uncross_all,
    uncross_step,
    unwind_transpositions,
)

__version__ = "0.1.0"
