"""Shared fixtures and independent test oracles.

The oracles here deliberately take different routes than the library:
crossing via strict arc membership, minima via direct itertools
enumeration, canonical forms via literal orbit generation.  They exist to
cross-check the production paths, so they must not call them.
"""

import random
from itertools import permutations, product

import pytest

from convexcycles import ConvexInstance, TwoFactor

# The six-point, three-class golden instance and its two drawn 2-factors
# (normalized sorted edge tuples); the second is the unique minimum.
GOLDEN_COLORS = (1, 1, 2, 2, 3, 3)
GOLDEN_SUBOPT_EDGES = ((0, 2), (0, 5), (1, 3), (1, 4), (2, 5), (3, 4))
GOLDEN_OPT_EDGES = ((0, 3), (0, 5), (1, 2), (1, 4), (2, 5), (3, 4))


@pytest.fixture
def golden6() -> ConvexInstance:
    return ConvexInstance.of(3, 2, GOLDEN_COLORS)


def oracle_cross(e1, e2) -> bool:
    """Crossing test via arc membership: chords cross iff exactly one
    endpoint of the second lies strictly inside the first's lower arc."""
    u1, v1 = min(e1), max(e1)
    u2, v2 = min(e2), max(e2)
    if len({u1, v1, u2, v2}) < 4:
        return False
    inside = sum(1 for x in (u2, v2) if u1 < x < v1)
    return inside == 1


def oracle_count(edges) -> int:
    edges = list(edges)
    return sum(
        1
        for i in range(len(edges))
        for j in range(i + 1, len(edges))
        if oracle_cross(edges[i], edges[j])
    )


def oracle_candidate_edges(inst: ConvexInstance, assignment):
    by_class = [[] for _ in range(inst.k)]
    for p, c in enumerate(inst.colors):
        by_class[c - 1].append(p)
    edges = []
    for i in range(inst.k):
        dst = by_class[(i + 1) % inst.k]
        for j, t in enumerate(assignment[i]):
            a, b = by_class[i][j], dst[t]
            edges.append((min(a, b), max(a, b)))
    return tuple(sorted(edges))


def oracle_all_two_factors(inst: ConvexInstance):
    perms = list(permutations(range(inst.n)))
    for assignment in product(perms, repeat=inst.k):
        yield oracle_candidate_edges(inst, assignment)


def oracle_min_crossings(inst: ConvexInstance) -> int:
    return min(oracle_count(edges) for edges in oracle_all_two_factors(inst))


def oracle_orbit(inst: ConvexInstance):
    """Literal symmetry orbit: rotations x reflection x dihedral label maps."""
    m = inst.size
    k = inst.k
    label_maps = []
    for shift in range(k):
        label_maps.append({c: (c - 1 + shift) % k + 1 for c in range(1, k + 1)})
        label_maps.append({c: (shift - (c - 1)) % k + 1 for c in range(1, k + 1)})
    out = set()
    for seq in (inst.colors, tuple(reversed(inst.colors))):
        for r in range(m):
            rotated = seq[r:] + seq[:r]
            for lm in label_maps:
                out.add(tuple(lm[c] for c in rotated))
    return out


def random_instance(rng: random.Random, k: int, n: int) -> ConvexInstance:
    colors = [label for label in range(1, k + 1) for _ in range(n)]
    rng.shuffle(colors)
    return ConvexInstance.of(k, n, colors)


def random_two_factor(rng: random.Random, inst: ConvexInstance) -> TwoFactor:
    pairings = tuple(
        tuple(rng.sample(range(inst.n), inst.n)) for _ in range(inst.k)
    )
    return TwoFactor(inst, pairings)


def random_insertion_point(rng: random.Random, tf: TwoFactor):
    """A uniformly chosen valid (u, v, r, s) for hull-edge insertion."""
    inst = tf.instance
    m = inst.size
    k = inst.k
    edge_set = set(tf.edges)
    adj = {}
    for a, b in tf.edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    candidates = []
    for a in range(m):
        b = (a + 1) % m
        for u, v in ((a, b), (b, a)):
            cu, cv = inst.colors[u] - 1, inst.colors[v] - 1
            if (cu + 1) % k != cv:
                continue
            if (min(u, v), max(u, v)) in edge_set:
                continue
            r = next(q for q in adj[u] if inst.colors[q] - 1 == cv)
            s = next(q for q in adj[v] if inst.colors[q] - 1 == cu)
            candidates.append((u, v, r, s))
    if not candidates:
        return None
    return rng.choice(candidates)


def same_pair_crossings(tf: TwoFactor) -> int:
    """Crossing pairs among edges that join the same two classes."""
    inst = tf.instance
    total = 0
    edges = list(tf.edges)
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            e1, e2 = edges[i], edges[j]
            classes1 = frozenset((inst.colors[e1[0]], inst.colors[e1[1]]))
            classes2 = frozenset((inst.colors[e2[0]], inst.colors[e2[1]]))
            if classes1 == classes2 and oracle_cross(e1, e2):
                total += 1
    return total
