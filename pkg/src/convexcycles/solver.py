"""Exact crossing minimization over all cycling 2-factors.

A cycling 2-factor is exactly one perfect pairing per consecutive class
pair, so the search space has (n!)^k candidates.  The brute-force scan is
the reference oracle; the branch-and-bound solver prunes on the crossings
already committed, which only grow as edges are added.  The crossing-free
decision is a separate interval DP over non-crossing partitions into
k-blocks and never enumerates 2-factors.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from convexcycles import kernels
from convexcycles.crossings import Edge, TwoFactor, normalize_edge
from convexcycles.instance import (
    CapExceededError,
    ConvexInstance,
    InputError,
    InternalError,
    validate_instance,
)

DEFAULT_ENUM_CAP = 10**8
DEFAULT_NODE_BUDGET = 10**7


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    `explored` counts candidate 2-factors fully evaluated.  `optima_count`
    is None when the search was cut short; `optimal` is False only when a
    node budget stopped the branch-and-bound early.
    """

    minimum: int
    witness: TwoFactor
    optima_count: int | None
    explored: int
    optimal: bool = True


@dataclass(frozen=True)
class CrossingFreeWitness:
    """A non-crossing partition into valid k-blocks and its 2-factor."""

    blocks: tuple[tuple[int, ...], ...]
    two_factor: TwoFactor


def _ensure_valid(inst: ConvexInstance) -> None:
    verdict = validate_instance(inst)
    if not verdict:
        raise InputError("; ".join(verdict.problems))


def two_factor_count(inst: ConvexInstance) -> int:
    """(n!)^k, the number of cycling 2-factors of the instance."""
    return math.factorial(inst.n) ** inst.k


def enumerate_cycling_two_factors(
    inst: ConvexInstance, cap: int = DEFAULT_ENUM_CAP
) -> Iterator[TwoFactor]:
    """Yield every cycling 2-factor exactly once, lexicographic by pairing."""
    _ensure_valid(inst)
    total = two_factor_count(inst)
    if total > cap:
        raise CapExceededError(f"{total} cycling 2-factors exceeds the cap {cap}")
    perms = list(permutations(range(inst.n)))
    for assignment in product(perms, repeat=inst.k):
        yield TwoFactor(inst, assignment)


def _candidate_edges(
    by_class: tuple[tuple[int, ...], ...],
    assignment,
    us: array,
    vs: array,
    k: int,
    n: int,
) -> None:
    idx = 0
    for i in range(k):
        src = by_class[i]
        dst = by_class[(i + 1) % k]
        perm = assignment[i]
        for j in range(n):
            a = src[j]
            b = dst[perm[j]]
            if a < b:
                us[idx] = a
                vs[idx] = b
            else:
                us[idx] = b
                vs[idx] = a
            idx += 1


def _sorted_edges(us: array, vs: array) -> tuple[Edge, ...]:
    return tuple(sorted(zip(us, vs)))


def min_crossings_bruteforce(
    inst: ConvexInstance, cap: int = DEFAULT_ENUM_CAP
) -> SolveResult:
    """Exact minimum by evaluating all (n!)^k candidates.

    The witness is the optimal 2-factor with the lexicographically least
    edge list.
    """
    _ensure_valid(inst)
    total = two_factor_count(inst)
    if total > cap:
        raise CapExceededError(f"{total} cycling 2-factors exceeds the cap {cap}")
    k, n, m = inst.k, inst.n, inst.size
    by_class = inst.class_positions()
    perms = list(permutations(range(n)))
    us = array("i", [0] * m)
    vs = array("i", [0] * m)
    best = -1
    best_assignment = None
    best_edges: tuple[Edge, ...] | None = None
    optima = 0
    explored = 0
    for assignment in product(perms, repeat=k):
        _candidate_edges(by_class, assignment, us, vs, k, n)
        count = kernels.count_crossings_arrays(us, vs)
        explored += 1
        if best < 0 or count < best:
            best = count
            best_assignment = assignment
            best_edges = _sorted_edges(us, vs)
            optima = 1
        elif count == best:
            optima += 1
            edges = _sorted_edges(us, vs)
            if edges < best_edges:  # type: ignore[operator]
                best_assignment = assignment
                best_edges = edges
    witness = TwoFactor(inst, best_assignment)  # type: ignore[arg-type]
    return SolveResult(best, witness, optima, explored)


def list_all_optima(inst: ConvexInstance, cap: int = DEFAULT_ENUM_CAP) -> list[TwoFactor]:
    """All 2-factors attaining the exact minimum, least edge list first."""
    _ensure_valid(inst)
    total = two_factor_count(inst)
    if total > cap:
        raise CapExceededError(f"{total} cycling 2-factors exceeds the cap {cap}")
    best = -1
    optima: list[TwoFactor] = []
    for tf in enumerate_cycling_two_factors(inst, cap):
        count = tf.crossing_count
        if best < 0 or count < best:
            best = count
            optima = [tf]
        elif count == best:
            optima.append(tf)
    optima.sort(key=lambda tf: tf.edges)
    return optima


def min_crossings_bnb(
    inst: ConvexInstance, node_budget: int = DEFAULT_NODE_BUDGET
) -> SolveResult:
    """Exact minimum by depth-first search with incremental crossing counts.

    Pairings are built class by class; a branch is cut as soon as the
    crossings among committed edges exceed the incumbent, which is sound
    because adding edges never removes crossings.  Branches tying the
    incumbent are kept so the witness matches the brute-force tie-break.
    For k=3 the incumbent is seeded with the recursive construction's
    2-factor.
    """
    _ensure_valid(inst)
    k, n, m = inst.k, inst.n, inst.size
    by_class = inst.class_positions()
    us = array("i", [0] * m)
    vs = array("i", [0] * m)
    assignment = [[-1] * n for _ in range(k)]
    used = [[False] * n for _ in range(k)]

    best: int
    best_assignment: tuple[tuple[int, ...], ...] | None
    best_edges: tuple[Edge, ...] | None
    if k == 3:
        from convexcycles.transforms import construct_k3

        seed = construct_k3(inst)
        best = seed.crossing_count
        best_assignment = seed.pairings
        best_edges = seed.edges
    else:
        best = -1
        best_assignment = None
        best_edges = None

    optima = 0
    explored = 0
    nodes = 0
    aborted = False
    edge_crossings = kernels.edge_crossings

    def dfs(depth: int, partial: int) -> None:
        nonlocal best, best_assignment, best_edges, optima, explored, nodes, aborted
        if aborted:
            return
        if depth == m:
            explored += 1
            edges = _sorted_edges(us, vs)
            if best < 0 or partial < best:
                best = partial
                best_assignment = tuple(tuple(row) for row in assignment)
                best_edges = edges
                optima = 1
            elif partial == best:
                optima += 1
                if edges < best_edges:  # type: ignore[operator]
                    best_assignment = tuple(tuple(row) for row in assignment)
                    best_edges = edges
            return
        i, j = divmod(depth, n)
        src = by_class[i][j]
        dst_class = by_class[(i + 1) % k]
        used_i = used[i]
        for t in range(n):
            if used_i[t]:
                continue
            nodes += 1
            if nodes > node_budget:
                aborted = True
                return
            dst = dst_class[t]
            u, v = (src, dst) if src < dst else (dst, src)
            added = edge_crossings(u, v, us, vs, depth)
            total = partial + added
            if 0 <= best < total:
                continue
            us[depth] = u
            vs[depth] = v
            used_i[t] = True
            assignment[i][j] = t
            dfs(depth + 1, total)
            used_i[t] = False
            if aborted:
                return

    dfs(0, 0)
    if best_assignment is None:
        raise CapExceededError(f"node budget {node_budget} too small to reach any candidate")
    witness = TwoFactor(inst, tuple(tuple(row) for row in best_assignment))
    if aborted:
        return SolveResult(best, witness, None, explored, optimal=False)
    return SolveResult(best, witness, optima, explored)


@lru_cache(maxsize=None)
def _valid_block_words(k: int) -> frozenset[tuple[int, ...]]:
    # A crossing-free k-cycle is the polygon of its vertices in circular
    # order, and the cycling condition forces the labels along the polygon
    # to step consistently +1 or -1 (mod k): 2k words in total.
    asc = tuple(range(1, k + 1))
    words = set()
    for r in range(k):
        rot = asc[r:] + asc[:r]
        words.add(rot)
        words.add(tuple(reversed(rot)))
    return frozenset(words)


@lru_cache(maxsize=None)
def _crossing_free_blocks(
    k: int, colors: tuple[int, ...]
) -> tuple[tuple[int, ...], ...] | None:
    """Non-crossing partition of 0..len(colors)-1 into valid k-blocks, or None.

    Works on the cut line between the last and first position; a partition
    is non-crossing on the circle iff it is non-crossing on that line.
    """
    words = _valid_block_words(k)
    memo: dict[tuple[int, int], tuple[tuple[int, ...], ...] | None] = {}

    def solve(lo: int, hi: int) -> tuple[tuple[int, ...], ...] | None:
        # positions lo..hi inclusive; interval length is a multiple of k
        if lo > hi:
            return ()
        key = (lo, hi)
        if key in memo:
            return memo[key]
        block = [lo]

        def choose(start: int) -> tuple[tuple[int, ...], ...] | None:
            # each gap between consecutive members must have length
            # divisible by k, hence the stride in the candidate range
            if len(block) == k:
                if tuple(colors[p] for p in block) not in words:
                    return None
                parts = [tuple(block)]
                prev = block[0]
                for b in block[1:]:
                    inner = solve(prev + 1, b - 1)
                    if inner is None:
                        return None
                    parts.extend(inner)
                    prev = b
                tail = solve(block[-1] + 1, hi)
                if tail is None:
                    return None
                parts.extend(tail)
                return tuple(parts)
            for b in range(start, hi + 1, k):
                block.append(b)
                found = choose(b + 1)
                if found is not None:
                    return found
                block.pop()
            return None

        result = choose(lo + 1)
        memo[key] = result
        return result

    if len(colors) % k != 0:
        return None
    return solve(0, len(colors) - 1)


def _block_polygon_edges(block: tuple[int, ...]) -> list[Edge]:
    edges = [normalize_edge((block[t], block[t + 1])) for t in range(len(block) - 1)]
    edges.append(normalize_edge((block[0], block[-1])))
    return edges


def admits_crossing_free(inst: ConvexInstance) -> CrossingFreeWitness | None:
    """Witness of a crossing-free cycling 2-factor, or None if none exists.

    The witness consists only of k-cycles (one polygon per block).
    """
    _ensure_valid(inst)
    blocks = _crossing_free_blocks(inst.k, inst.colors)
    if blocks is None:
        return None
    edges: list[Edge] = []
    for block in blocks:
        edges.extend(_block_polygon_edges(block))
    tf = TwoFactor.from_edges(inst, sorted(edges))
    if tf.crossing_count != 0:
        raise InternalError("crossing-free witness recounts nonzero crossings")
    return CrossingFreeWitness(blocks, tf)
