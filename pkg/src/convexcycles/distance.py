"""Transposition distance, bound verification, and the extremal family.

The distance of an instance is the least number of hull-neighbor swaps
reaching a color sequence that admits a crossing-free cycling 2-factor.
It is computed by breadth-first search over raw color sequences; swaps of
equal labels change nothing and are skipped as moves.  A multi-source
variant walks outward from every admitting sequence at once, which is the
right shape for whole-space scans.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from convexcycles.crossings import Edge, TwoFactor
from convexcycles.instance import (
    CapExceededError,
    ConvexInstance,
    InputError,
    InternalError,
    Transposition,
    canonical_form,
    extremal_instance,
    validate_instance,
)
from convexcycles.solver import (
    _crossing_free_blocks,
    min_crossings_bruteforce,
    min_crossings_bnb,
)

DEFAULT_STATE_CAP = 10**7


@dataclass(frozen=True)
class DistanceResult:
    """Exact transposition distance with a realizing swap sequence."""

    distance: int
    witness: tuple[Transposition, ...]


def state_count(k: int, n: int) -> int:
    """Number of distinct color sequences: (k*n)! / (n!)^k."""
    return math.factorial(k * n) // math.factorial(n) ** k


def _ensure_valid(inst: ConvexInstance) -> None:
    verdict = validate_instance(inst)
    if not verdict:
        raise InputError("; ".join(verdict.problems))


def _admits(k: int, colors: tuple[int, ...]) -> bool:
    return _crossing_free_blocks(k, colors) is not None


def _moves(colors: tuple[int, ...]):
    m = len(colors)
    for a in range(m):
        b = (a + 1) % m
        if colors[a] == colors[b]:
            continue
        swapped = list(colors)
        swapped[a], swapped[b] = swapped[b], swapped[a]
        yield Transposition(a, b), tuple(swapped)


def transposition_distance(
    inst: ConvexInstance, cap: int = DEFAULT_STATE_CAP
) -> DistanceResult:
    """BFS from the instance to the nearest admitting color sequence."""
    _ensure_valid(inst)
    total = state_count(inst.k, inst.n)
    if total > cap:
        raise CapExceededError(f"{total} color sequences exceeds the cap {cap}")
    start = inst.colors
    k = inst.k
    if _admits(k, start):
        return DistanceResult(0, ())
    parents: dict[tuple[int, ...], tuple[tuple[int, ...], Transposition]] = {}
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for t, nxt in _moves(state):
            if nxt in seen:
                continue
            seen.add(nxt)
            parents[nxt] = (state, t)
            if _admits(k, nxt):
                path = [t]
                back = state
                while back != start:
                    back, step = parents[back]
                    path.append(step)
                path.reverse()
                return DistanceResult(len(path), tuple(path))
            queue.append(nxt)
    raise InternalError("transposition search exhausted the state space without a goal")


@dataclass(frozen=True)
class DistanceAtlas:
    """Distances from every color sequence to the admitting set.

    Built by one reverse BFS from all admitting sequences; `parents` maps
    each non-admitting sequence to (next sequence toward the goal, swap).
    """

    k: int
    n: int
    distances: dict[tuple[int, ...], int]
    parents: dict[tuple[int, ...], tuple[tuple[int, ...], Transposition]]

    def distance(self, colors: tuple[int, ...]) -> int:
        return self.distances[colors]

    def witness(self, colors: tuple[int, ...]) -> tuple[Transposition, ...]:
        path = []
        state = colors
        while state in self.parents:
            state, t = self.parents[state]
            path.append(t)
        return tuple(path)


def multiset_sequences(k: int, n: int):
    """All length-k*n sequences using each label in 1..k exactly n times,
    in lexicographic order."""
    counts = [n] * k
    seq: list[int] = []

    def emit():
        if len(seq) == k * n:
            yield tuple(seq)
            return
        for label in range(1, k + 1):
            if counts[label - 1] == 0:
                continue
            counts[label - 1] -= 1
            seq.append(label)
            yield from emit()
            seq.pop()
            counts[label - 1] += 1

    yield from emit()


def distance_atlas(k: int, n: int, cap: int = DEFAULT_STATE_CAP) -> DistanceAtlas:
    """Multi-source reverse BFS from every admitting sequence."""
    total = state_count(k, n)
    if total > cap:
        raise CapExceededError(f"{total} color sequences exceeds the cap {cap}")
    distances: dict[tuple[int, ...], int] = {}
    parents: dict[tuple[int, ...], tuple[tuple[int, ...], Transposition]] = {}
    queue: deque[tuple[int, ...]] = deque()
    for colors in multiset_sequences(k, n):
        if _admits(k, colors):
            distances[colors] = 0
            queue.append(colors)
    while queue:
        state = queue.popleft()
        d = distances[state]
        for t, nxt in _moves(state):
            if nxt in distances:
                continue
            distances[nxt] = d + 1
            parents[nxt] = (state, t)
            queue.append(nxt)
    if len(distances) != total:
        raise InternalError("transposition moves do not connect the sequence space")
    return DistanceAtlas(k, n, distances, parents)


@dataclass(frozen=True)
class BoundReport:
    """Exact minimum against the distance-based and closed-form bounds.

    The k=3-only fields are None for other class counts; all flags are
    recomputed comparisons.
    """

    instance: ConvexInstance
    exact_min: int
    distance: int
    bound_generic: int
    bound_k3: int | None
    bound_closed_form: int | None
    ok_generic: bool
    ok_k3: bool | None
    ok_closed_form: bool | None


def verify_bounds(
    inst: ConvexInstance,
    solver: str = "bnb",
    enum_cap: int = 10**8,
    state_cap: int = DEFAULT_STATE_CAP,
) -> BoundReport:
    """Solve exactly, compute the distance, and check every bound."""
    _ensure_valid(inst)
    if solver == "brute":
        exact = min_crossings_bruteforce(inst, enum_cap).minimum
    elif solver == "bnb":
        result = min_crossings_bnb(inst)
        if not result.optimal:
            raise CapExceededError("branch-and-bound budget exhausted before optimality")
        exact = result.minimum
    else:
        raise InputError(f"unknown solver {solver!r}")
    d = transposition_distance(inst, state_cap).distance
    generic = 4 * d
    if inst.k == 3:
        k3 = 3 * d
        closed = extremal_crossings(inst.n)
        return BoundReport(
            inst, exact, d, generic, k3, closed,
            exact <= generic, exact <= k3, exact <= closed,
        )
    return BoundReport(inst, exact, d, generic, None, None, exact <= generic, None, None)


def extremal_two_factor(n: int) -> TwoFactor:
    """The unique optimum of the contiguous-block k=3 instance.

    With classes occupying arcs 0..n-1, n..2n-1, 2n..3n-1, position i of
    the first class pairs with 2n-1-i and 3n-1-i, and position n+i with
    3n-1-i (0-based).
    """
    inst = extremal_instance(n)
    edges: list[Edge] = []
    for i in range(n):
        edges.append((i, 2 * n - 1 - i))
        edges.append((i, 3 * n - 1 - i))
        edges.append((n + i, 3 * n - 1 - i))
    return TwoFactor.from_edges(inst, sorted(edges))


def extremal_crossings(n: int) -> int:
    """Closed form 3n(n-1)/2 for the contiguous-block instance's minimum."""
    if n < 1:
        raise InputError(f"per-class size n={n} must be positive")
    return 3 * n * (n - 1) // 2


@dataclass(frozen=True)
class ScanRecord:
    """One color sequence's results within a whole-space scan."""

    colors: tuple[int, ...]
    canonical: tuple[int, ...]
    exact_min: int
    distance: int
    witness_edges: tuple[Edge, ...]
    report: BoundReport


@dataclass(frozen=True)
class ScanReport:
    """Bound verification over every color sequence of a given shape.

    One record per sequence, each checked against every applicable bound;
    `equality_classes` lists the canonical instances where the closed-form
    bound for k=3 is attained.
    """

    k: int
    n: int
    records: tuple[ScanRecord, ...]
    sequences_total: int
    max_min: int
    all_bounds_hold: bool
    equality_classes: tuple[tuple[int, ...], ...]
    unique_extremal: bool | None


def scan_instances(
    k: int,
    n: int,
    enum_cap: int = 10**8,
    state_cap: int = DEFAULT_STATE_CAP,
) -> ScanReport:
    """Exhaustively verify the bounds for all sequences with k classes of n.

    For k=3 also checks that the closed-form bound is attained exactly on
    the canonical class of the contiguous-block instance.
    """
    if k < 3 or n < 1:
        raise InputError(f"scan requires k >= 3 and n >= 1, got k={k}, n={n}")
    atlas = distance_atlas(k, n, state_cap)
    records = []
    all_hold = True
    equality: set[tuple[int, ...]] = set()
    closed = extremal_crossings(n) if k == 3 else None
    for colors in multiset_sequences(k, n):
        inst = ConvexInstance(k, n, colors)
        solved = min_crossings_bruteforce(inst, enum_cap)
        d = atlas.distance(colors)
        generic = 4 * d
        canon = canonical_form(inst).colors
        if k == 3:
            report = BoundReport(
                inst, solved.minimum, d, generic, 3 * d, closed,
                solved.minimum <= generic,
                solved.minimum <= 3 * d,
                solved.minimum <= closed,  # type: ignore[operator]
            )
            if solved.minimum == closed:
                equality.add(canon)
        else:
            report = BoundReport(
                inst, solved.minimum, d, generic,
                None, None, solved.minimum <= generic, None, None,
            )
        flags = [report.ok_generic, report.ok_k3, report.ok_closed_form]
        all_hold = all_hold and all(f for f in flags if f is not None)
        records.append(
            ScanRecord(colors, canon, solved.minimum, d, solved.witness.edges, report)
        )
    if len(records) != state_count(k, n):
        raise InternalError("scan did not cover the whole sequence space")
    unique = None
    if k == 3:
        extremal_canon = canonical_form(extremal_instance(n)).colors
        unique = equality == {extremal_canon}
    return ScanReport(
        k, n, tuple(records), len(records),
        max(r.exact_min for r in records),
        all_hold, tuple(sorted(equality)), unique,
    )


def uniqueness_scan(n: int, enum_cap: int = 10**8) -> ScanReport:
    """k=3 whole-space scan; the closed-form bound must be tight exactly
    on the contiguous-block canonical class."""
    return scan_instances(3, n, enum_cap)
