"""Constructive rewrites of cycling 2-factors.

These are the upper-bound workhorses: an uncrossing swap for edges of the
same class pair, hull-edge insertion at bounded cost, splitting of long
crossing-free cycles into k-cycles, reverse replay of a transposition
sequence, and the recursive k=3 construction with a closed-form crossing
budget.  Every rewrite revalidates its output.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from convexcycles.crossings import TwoFactor, edges_cross, normalize_edge
from convexcycles.instance import (
    ConvexInstance,
    InputError,
    InternalError,
    Transposition,
    apply_transposition,
    is_hull_adjacent,
    validate_instance,
)


def _ensure_valid(inst: ConvexInstance) -> None:
    verdict = validate_instance(inst)
    if not verdict:
        raise InputError("; ".join(verdict.problems))


def _pair_index(inst: ConvexInstance, u: int, v: int) -> int:
    # class pair i joins class i+1 to class i+2 (1-based labels)
    cu = inst.colors[u] - 1
    cv = inst.colors[v] - 1
    return cu if (cu + 1) % inst.k == cv else cv


def uncross_step(tf: TwoFactor) -> TwoFactor | None:
    """Swap one crossing pair of edges joining the same two classes.

    If edges uv and rs cross with u,r in one class and v,s in the next,
    replacing them by us and rv removes at least one crossing and keeps
    the 2-factor cycling.  Returns None when no such pair exists.
    """
    inst = tf.instance
    by_pair: list[list[tuple[int, int]]] = [[] for _ in range(inst.k)]
    for e in tf.edges:
        by_pair[_pair_index(inst, *e)].append(e)
    for i in range(inst.k):
        for e1, e2 in combinations(by_pair[i], 2):
            if not edges_cross(e1, e2):
                continue
            label_u = i + 1
            u = e1[0] if inst.colors[e1[0]] == label_u else e1[1]
            v = e1[0] if u == e1[1] else e1[1]
            r = e2[0] if inst.colors[e2[0]] == label_u else e2[1]
            s = e2[0] if r == e2[1] else e2[1]
            new = tf.replace_edges([e1, e2], [(u, s), (r, v)])
            if new.crossing_count >= tf.crossing_count:
                raise InternalError("uncrossing swap failed to reduce crossings")
            return new
    return None


def uncross_all(tf: TwoFactor) -> TwoFactor:
    """Apply uncrossing swaps until no same-class-pair edges cross.

    Terminates in at most the initial crossing count steps because each
    swap strictly reduces the count.
    """
    limit = tf.crossing_count
    for _ in range(limit + 1):
        nxt = uncross_step(tf)
        if nxt is None:
            return tf
        tf = nxt
    raise InternalError("uncrossing did not reach a fixpoint within the crossing count")


def insert_hull_edge(tf: TwoFactor, u: int, v: int) -> TwoFactor:
    """Rewire so the hull-neighbor edge uv joins the 2-factor.

    Requires u and v hull-adjacent with v's class the cyclic successor of
    u's, and uv not already present.  With r the current partner of u in
    v's class and s the partner of v in u's class, uv and rs replace ur
    and vs; the crossing count grows by at most 2.
    """
    inst = tf.instance
    if not is_hull_adjacent(inst, u, v):
        raise InputError(f"positions {u} and {v} are not hull neighbors")
    cu = inst.colors[u] - 1
    cv = inst.colors[v] - 1
    if (cu + 1) % inst.k != cv:
        raise InputError(
            f"class {cv + 1} of v is not the cyclic successor of class {cu + 1} of u"
        )
    e_new = normalize_edge((u, v))
    if e_new in tf.edges:
        raise InputError(f"edge {e_new} is already in the 2-factor")
    adj: dict[int, list[int]] = {}
    for a, b in tf.edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    r = next(q for q in adj[u] if inst.colors[q] - 1 == cv)
    s = next(q for q in adj[v] if inst.colors[q] - 1 == cu)
    new = tf.replace_edges([(u, r), (v, s)], [(u, v), (r, s)])
    if new.crossing_count > tf.crossing_count + 2:
        raise InternalError("hull-edge insertion exceeded the +2 crossing budget")
    return new


def split_long_cycles(tf: TwoFactor) -> TwoFactor:
    """Split every cycle of a crossing-free 2-factor down to length k.

    A crossing-free cycle visits its vertices in circular order, so the
    k lowest positions of the longest-overdue cycle form a path whose
    closing chord stays crossing-free; rewiring it off shortens the cycle.
    """
    if tf.crossing_count != 0:
        raise InputError("cycle splitting requires a crossing-free 2-factor")
    k = tf.instance.k
    while True:
        long_cycles = [c for c in tf.cycles() if len(c) > k]
        if not long_cycles:
            return tf
        verts = sorted(min(long_cycles, key=min))
        first, mid_last, mid_next, last = verts[0], verts[k - 1], verts[k], verts[-1]
        edge_set = set(tf.edges)
        for needed in ((first, last), (mid_last, mid_next)):
            if normalize_edge(needed) not in edge_set:
                raise InternalError(f"crossing-free cycle is not in circular order: {verts}")
        tf = tf.replace_edges(
            [(first, last), (mid_last, mid_next)],
            [(first, mid_last), (last, mid_next)],
        )
        if tf.crossing_count != 0:
            raise InternalError("cycle split introduced a crossing")


@dataclass(frozen=True)
class UnwindStep:
    """One reverse-replayed transposition and its crossing budget."""

    transposition: Transposition
    budget: int
    inserted: bool
    fallback: bool
    crossings_after: int


@dataclass(frozen=True)
class UnwindResult:
    """2-factor produced by reverse replay, with the per-step trace."""

    two_factor: TwoFactor
    steps: tuple[UnwindStep, ...]

    @property
    def total_budget(self) -> int:
        return sum(s.budget for s in self.steps)

    @property
    def fallback_steps(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.steps) if s.fallback)


def _swap_positions(tf: TwoFactor, t: Transposition) -> TwoFactor:
    """Transpose two hull-neighbor vertices, keeping their adjacencies."""
    inst = apply_transposition(tf.instance, t)
    a, b = t.a, t.b

    def remap(p: int) -> int:
        return b if p == a else a if p == b else p

    edges = sorted(normalize_edge((remap(x), remap(y))) for x, y in tf.edges)
    return TwoFactor.from_edges(inst, edges)


def _reverse_step_k3(tf: TwoFactor, t: Transposition) -> tuple[TwoFactor, UnwindStep]:
    # Consecutive-class swaps first force uv into the 2-factor (cost <= 2),
    # after which the swap itself costs <= 1.  Same-class swaps cannot use
    # the insertion and fall back to the generic +4 budget.
    inst = tf.instance
    la, lb = inst.colors[t.a], inst.colors[t.b]
    if la == lb:
        new = _swap_positions(tf, t)
        return new, UnwindStep(t, 4, False, True, new.crossing_count)
    u, v = (t.a, t.b) if (la % 3) + 1 == lb else (t.b, t.a)
    inserted = False
    if normalize_edge((u, v)) not in tf.edges:
        tf = insert_hull_edge(tf, u, v)
        inserted = True
    new = _swap_positions(tf, t)
    return new, UnwindStep(t, 3, inserted, False, new.crossing_count)


def unwind_transpositions(
    inst: ConvexInstance, seq, mode: str = "generic"
) -> UnwindResult:
    """Rebuild a bounded-crossing 2-factor from a transposition sequence.

    Applying `seq` to `inst` must reach an instance admitting a
    crossing-free 2-factor; that witness (all k-cycles) is then carried
    back through the sequence in reverse.  Generic mode adds at most 4
    crossings per step; k3 mode (k=3 only) at most 3 per consecutive-class
    step, falling back to 4 on same-class steps.
    """
    from convexcycles.solver import admits_crossing_free

    _ensure_valid(inst)
    if mode not in ("generic", "k3"):
        raise InputError(f"unknown unwind mode {mode!r}")
    if mode == "k3" and inst.k != 3:
        raise InputError("k3 mode requires an instance with exactly 3 classes")
    seq = list(seq)
    terminal = inst
    for t in seq:
        terminal = apply_transposition(terminal, t)
    witness = admits_crossing_free(terminal)
    if witness is None:
        raise InputError(
            "applying the sequence does not reach an instance with a"
            " crossing-free cycling 2-factor"
        )
    tf = witness.two_factor
    steps: list[UnwindStep] = []
    for t in reversed(seq):
        if mode == "k3":
            tf, step = _reverse_step_k3(tf, t)
        else:
            tf = _swap_positions(tf, t)
            step = UnwindStep(t, 4, False, False, tf.crossing_count)
        steps.append(step)
    if tf.instance.colors != inst.colors:
        raise InternalError("reverse replay did not return to the original instance")
    return UnwindResult(tf, tuple(steps))


def construct_k3(inst: ConvexInstance) -> TwoFactor:
    """Recursive k=3 construction with at most 3n(n-1)/2 crossings.

    Finds a hull-adjacent pair of consecutive classes, bubbles the nearest
    third-class vertex next to it, solves the instance with that triple
    removed, reinserts the triple as a triangle (crossing-free by
    construction), and replays the bubbling in reverse at <= 3 crossings
    per step.
    """
    _ensure_valid(inst)
    if inst.k != 3:
        raise InputError(f"construction requires k=3, got k={inst.k}")
    tf = _build_k3(inst.colors)
    n = inst.n
    if tf.crossing_count > 3 * n * (n - 1) // 2:
        raise InternalError("construction exceeded its closed-form crossing budget")
    return tf


def _build_k3(colors: tuple[int, ...]) -> TwoFactor:
    m = len(colors)
    n = m // 3
    inst = ConvexInstance(3, n, colors)
    if n == 1:
        return TwoFactor.from_edges(inst, [(0, 1), (1, 2), (0, 2)])

    pair = None
    for a in range(m):
        b = (a + 1) % m
        la, lb = colors[a], colors[b]
        if la != lb:
            pair = (a, b)
            break
    if pair is None:
        raise InputError("no hull-adjacent pair of distinct classes exists")
    a, b = pair
    third = 6 - colors[a] - colors[b]

    found = None
    for d in range(1, m - 1):
        after = (b + d) % m
        if colors[after] == third:
            found = ("after", d, after)
            break
        before = (a - d) % m
        if colors[before] == third:
            found = ("before", d, before)
            break
    if found is None:
        raise InternalError("no third-class vertex found on a valid instance")
    side, d, _ = found

    seq: list[Transposition] = []
    cur = list(colors)
    if side == "after":
        # walk the third-class vertex from b+d down to b+1
        for x in range(d - 1, 0, -1):
            t = Transposition((b + x) % m, (b + x + 1) % m)
            seq.append(t)
            cur[t.a], cur[t.b] = cur[t.b], cur[t.a]
        triple = {a, b, (b + 1) % m}
    else:
        for x in range(d - 1, 0, -1):
            t = Transposition((a - x - 1) % m, (a - x) % m)
            seq.append(t)
            cur[t.a], cur[t.b] = cur[t.b], cur[t.a]
        triple = {(a - 1) % m, a, b}

    bubbled = ConvexInstance(3, n, tuple(cur))
    kept = [p for p in range(m) if p not in triple]
    sub = _build_k3(tuple(bubbled.colors[p] for p in kept))
    lifted = [normalize_edge((kept[x], kept[y])) for x, y in sub.edges]
    t0, t1, t2 = sorted(triple)
    tf = TwoFactor.from_edges(bubbled, sorted(lifted + [(t0, t1), (t1, t2), (t0, t2)]))

    for t in reversed(seq):
        tf, _ = _reverse_step_k3(tf, t)
    if tf.instance.colors != colors:
        raise InternalError("bubbling replay did not return to the original instance")
    return tf
