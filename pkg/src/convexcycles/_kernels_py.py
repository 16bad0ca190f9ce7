"""Pure-Python crossing kernels; same contract as the compiled module.

Edges are given as parallel endpoint sequences with us[i] < vs[i].  Two
chords of a circle cross iff their endpoints interleave in the circular
order, which for sorted endpoint pairs is the strict chain test below;
shared endpoints never count.
"""

IMPLEMENTATION = "python"


def count_crossings_arrays(us, vs) -> int:
    """Number of unordered crossing pairs among the edges (us[i], vs[i])."""
    total = 0
    m = len(us)
    for i in range(m):
        ui = us[i]
        vi = vs[i]
        for j in range(i + 1, m):
            uj = us[j]
            vj = vs[j]
            if (ui < uj < vi < vj) or (uj < ui < vj < vi):
                total += 1
    return total


def edge_crossings(u: int, v: int, us, vs, count: int) -> int:
    """Crossings of the chord (u, v), u < v, against the first `count` edges."""
    total = 0
    for i in range(count):
        ui = us[i]
        vi = vs[i]
        if (u < ui < v < vi) or (ui < u < vi < v):
            total += 1
    return total
