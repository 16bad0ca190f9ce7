"""Combinatorial crossing model: side partitions, crossing counts, 2-factors.

Two chords of points in convex position intersect iff their endpoints
interleave in the circular order, i.e. one endpoint of the second chord
lies on each side of the first.  Edges sharing an endpoint never count
as crossing.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from convexcycles import kernels
from convexcycles.instance import ConvexInstance, InputError, Verdict, validate_instance

Edge = tuple[int, int]


def normalize_edge(e: Sequence[int]) -> Edge:
    u, v = e
    if u == v:
        raise InputError(f"degenerate edge ({u},{v})")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SidePartition:
    """The two open circular arcs of positions on either side of an edge."""

    left: frozenset[int]
    right: frozenset[int]


def side_partition(inst: ConvexInstance, e: Sequence[int]) -> SidePartition:
    """Split all other positions into the two arcs between e's endpoints."""
    u, v = normalize_edge(e)
    m = inst.size
    if not (0 <= u < m and v < m):
        raise InputError(f"edge ({u},{v}) out of range for size {m}")
    left = frozenset(range(u + 1, v))
    right = frozenset(p for p in range(m) if p < u or p > v)
    return SidePartition(left, right)


def edges_cross(e1: Sequence[int], e2: Sequence[int]) -> bool:
    """True iff the chords cross; endpoint-sharing pairs do not cross."""
    u1, v1 = normalize_edge(e1)
    u2, v2 = normalize_edge(e2)
    return (u1 < u2 < v1 < v2) or (u2 < u1 < v2 < v1)


def edges_between(edges: Iterable[Sequence[int]], a: Iterable[int], b: Iterable[int]) -> int:
    """Count edges with one endpoint in a and the other in b (disjoint sets)."""
    set_a = frozenset(a)
    set_b = frozenset(b)
    overlap = set_a & set_b
    if overlap:
        raise InputError(f"endpoint sets overlap: {sorted(overlap)}")
    total = 0
    for u, v in edges:
        if (u in set_a and v in set_b) or (u in set_b and v in set_a):
            total += 1
    return total


def _edge_arrays(edges: Iterable[Sequence[int]]) -> tuple[array, array]:
    us = array("i")
    vs = array("i")
    for e in edges:
        u, v = normalize_edge(e)
        us.append(u)
        vs.append(v)
    return us, vs


def count_crossings(edges: Iterable[Sequence[int]]) -> int:
    """Number of unordered crossing pairs in the edge set."""
    us, vs = _edge_arrays(edges)
    return kernels.count_crossings_arrays(us, vs)


def crossings_of_edge(edges: Sequence[Sequence[int]], e: Sequence[int]) -> int:
    """Crossings of e against the rest of the set; e itself must be a member."""
    target = normalize_edge(e)
    members = [normalize_edge(x) for x in edges]
    if target not in members:
        raise InputError(f"edge {target} is not in the 2-factor")
    us, vs = _edge_arrays(members)
    # e vs itself fails the strict interleaving test, so no exclusion needed
    return kernels.edge_crossings(target[0], target[1], us, vs, len(members))


@dataclass(frozen=True)
class CyclingVerdict(Verdict):
    """Validation outcome plus the traced cycles (when 2-regular)."""

    cycles: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class TwoFactor:
    """A cycling 2-factor: one perfect pairing per consecutive class pair.

    ``pairings[i][j] = t`` matches the j-th position of class i+1 (in
    ascending position order) with the t-th position of the cyclically
    next class.  The derived edge list has exactly k*n chords and every
    cycle length is a multiple of k.
    """

    instance: ConvexInstance
    pairings: tuple[tuple[int, ...], ...]

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        by_class = self.instance.class_positions()
        k = self.instance.k
        out = []
        for i, perm in enumerate(self.pairings):
            src = by_class[i]
            dst = by_class[(i + 1) % k]
            for j, t in enumerate(perm):
                out.append(normalize_edge((src[j], dst[t])))
        return tuple(sorted(out))

    @cached_property
    def crossing_count(self) -> int:
        return count_crossings(self.edges)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        return cycles_of(self)

    @classmethod
    def from_edges(cls, inst: ConvexInstance, edges: Iterable[Sequence[int]]) -> "TwoFactor":
        """Rebuild the pairing representation from an edge list.

        Raises InputError when the edges are not a valid cycling 2-factor
        of the instance.
        """
        verdict = validate_cycling(inst, edges)
        if not verdict:
            raise InputError("; ".join(verdict.problems))
        k = inst.k
        by_class = inst.class_positions()
        index_of = [{p: j for j, p in enumerate(ps)} for ps in by_class]
        slots: list[list[int | None]] = [[None] * inst.n for _ in range(k)]
        for e in edges:
            u, v = normalize_edge(e)
            cu = inst.colors[u] - 1
            cv = inst.colors[v] - 1
            if (cu + 1) % k == cv:
                i, src, dst = cu, u, v
            else:
                i, src, dst = cv, v, u
            slots[i][index_of[i][src]] = index_of[(i + 1) % k][dst]
        return cls(inst, tuple(tuple(s) for s in slots))  # type: ignore[arg-type]

    def replace_edges(self, drop: Iterable[Sequence[int]], add: Iterable[Sequence[int]]) -> "TwoFactor":
        """New 2-factor with `drop` removed and `add` inserted, revalidated."""
        current = set(self.edges)
        for e in drop:
            ne = normalize_edge(e)
            if ne not in current:
                raise InputError(f"cannot drop missing edge {ne}")
            current.remove(ne)
        for e in add:
            ne = normalize_edge(e)
            if ne in current:
                raise InputError(f"cannot add duplicate edge {ne}")
            current.add(ne)
        return TwoFactor.from_edges(self.instance, sorted(current))


def validate_cycling(inst: ConvexInstance, edges: Iterable[Sequence[int]]) -> CyclingVerdict:
    """Check the cycling 2-factor conditions on an edge list.

    Accepts iff the edges are 2-regular with every vertex adjacent to one
    vertex of its successor class and one of its predecessor class; also
    traces the cycles and checks each length is divisible by k.
    """
    inst_verdict = validate_instance(inst)
    if not inst_verdict:
        return CyclingVerdict(False, inst_verdict.problems)
    k, m = inst.k, inst.size
    problems: list[str] = []
    adj: list[list[int]] = [[] for _ in range(m)]
    seen: set[Edge] = set()
    for e in edges:
        try:
            u, v = normalize_edge(e)
        except InputError as exc:
            return CyclingVerdict(False, (str(exc),))
        if not (0 <= u < m and v < m):
            return CyclingVerdict(False, (f"edge ({u},{v}) out of range for size {m}",))
        if (u, v) in seen:
            problems.append(f"duplicate edge ({u},{v})")
            continue
        seen.add((u, v))
        adj[u].append(v)
        adj[v].append(u)
    if len(seen) != m:
        problems.append(f"expected {m} edges, found {len(seen)}")
    for p in range(m):
        if len(adj[p]) != 2:
            problems.append(f"vertex {p} has degree {len(adj[p])}, expected 2")
            continue
        c = inst.colors[p] - 1
        succ = (c + 1) % k + 1
        pred = (c - 1) % k + 1
        got = sorted(inst.colors[q] for q in adj[p])
        if got != sorted((succ, pred)):
            problems.append(
                f"vertex {p} (class {c + 1}) has neighbor classes {got},"
                f" expected one of class {pred} and one of class {succ}"
            )
    if problems:
        return CyclingVerdict(False, tuple(problems))
    cycles = _trace_cycles(adj)
    for cyc in cycles:
        if len(cyc) % k != 0:
            problems.append(f"cycle {cyc} has length {len(cyc)}, not a multiple of k={k}")
    return CyclingVerdict(not problems, tuple(problems), cycles)


def _trace_cycles(adj: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    # Deterministic: each cycle starts at its least vertex and walks toward
    # the smaller of the two neighbors first.
    visited = [False] * len(adj)
    cycles = []
    for start in range(len(adj)):
        if visited[start]:
            continue
        cycle = [start]
        visited[start] = True
        prev, cur = start, min(adj[start])
        while cur != start:
            cycle.append(cur)
            visited[cur] = True
            nxt = adj[cur][0] if adj[cur][1] == prev else adj[cur][1]
            prev, cur = cur, nxt
        cycles.append(tuple(cycle))
    return tuple(cycles)


def cycles_of(tf: TwoFactor) -> tuple[tuple[int, ...], ...]:
    """Vertex cycles of a valid cycling 2-factor, deterministically ordered."""
    verdict = validate_cycling(tf.instance, tf.edges)
    if not verdict:
        raise InputError("; ".join(verdict.problems))
    return verdict.cycles
