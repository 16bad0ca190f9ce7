"""Colored convex-position instances and hull-neighbor transpositions.

Vertices live at positions 0..k*n-1 in circular order around the convex
hull; only that cyclic order matters for crossings, so no coordinates are
ever stored.  Each position carries a class label in 1..k and every label
appears exactly n times.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class InputError(ValueError):
    """Malformed or invariant-violating user input."""


class CapExceededError(RuntimeError):
    """A configured enumeration/search cap would be exceeded."""


class InternalError(RuntimeError):
    """An internal invariant was violated (a bug, not a user error)."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of a validation check with human-readable problem list."""

    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ConvexInstance:
    """k classes of n vertices each, as a circular color sequence.

    ``colors[p]`` is the class label (1-based) of the vertex at hull
    position ``p``.  The constructor does not validate; use
    :func:`validate_instance` or :meth:`ConvexInstance.of`.
    """

    k: int
    n: int
    colors: tuple[int, ...]

    @classmethod
    def of(cls, k: int, n: int, colors) -> "ConvexInstance":
        """Build a validated instance; raises InputError on any violation."""
        inst = cls(k, n, tuple(colors))
        verdict = validate_instance(inst)
        if not verdict:
            raise InputError("; ".join(verdict.problems))
        return inst

    @property
    def size(self) -> int:
        """Number of positions, k*n."""
        return self.k * self.n

    def class_positions(self) -> tuple[tuple[int, ...], ...]:
        """Positions of each class in ascending order; index c = label c+1."""
        buckets: list[list[int]] = [[] for _ in range(self.k)]
        for p, c in enumerate(self.colors):
            buckets[c - 1].append(p)
        return tuple(tuple(b) for b in buckets)

    def with_colors(self, colors) -> "ConvexInstance":
        return ConvexInstance(self.k, self.n, tuple(colors))


@dataclass(frozen=True)
class Transposition:
    """A swap of the vertices at two hull-adjacent positions."""

    a: int
    b: int

    def sorted_pair(self) -> tuple[int, int]:
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)


def validate_instance(inst: ConvexInstance) -> Verdict:
    """Check the instance invariants, reporting every violation found."""
    problems: list[str] = []
    if inst.k < 3:
        problems.append(f"class count k={inst.k} but at least 3 classes are required")
    if inst.n < 1:
        problems.append(f"per-class size n={inst.n} must be positive")
    if len(inst.colors) != inst.k * inst.n:
        problems.append(
            f"expected {inst.k * inst.n} labels (k*n), found {len(inst.colors)}"
        )
    bad = sorted({c for c in inst.colors if not (1 <= c <= inst.k)})
    if bad:
        problems.append(f"labels out of range 1..{inst.k}: {bad}")
    elif not problems:
        for label in range(1, inst.k + 1):
            count = inst.colors.count(label)
            if count != inst.n:
                problems.append(
                    f"label {label} appears {count} times, expected {inst.n}"
                )
    return Verdict(not problems, tuple(problems))


def is_hull_adjacent(inst: ConvexInstance, a: int, b: int) -> bool:
    """True when positions a and b are neighbors in the circular order."""
    m = inst.size
    if not (0 <= a < m and 0 <= b < m) or a == b:
        return False
    lo, hi = (a, b) if a < b else (b, a)
    return hi - lo == 1 or (lo == 0 and hi == m - 1)


def hull_neighbor_pairs(inst: ConvexInstance) -> list[tuple[int, int]]:
    """All k*n hull-adjacent position pairs, (i, i+1) plus the wrap pair."""
    m = inst.size
    return [(i, (i + 1) % m) for i in range(m)]


def apply_transposition(inst: ConvexInstance, t: Transposition) -> ConvexInstance:
    """Swap the colors at t.a and t.b; rejects non-adjacent position pairs.

    Swapping two equal labels is legal and returns an equal instance.
    """
    if not is_hull_adjacent(inst, t.a, t.b):
        raise InputError(
            f"positions {t.a} and {t.b} are not hull neighbors for size {inst.size}"
        )
    colors = list(inst.colors)
    colors[t.a], colors[t.b] = colors[t.b], colors[t.a]
    return inst.with_colors(colors)


def _label_maps(k: int) -> list[tuple[int, ...]]:
    # Dihedral action on the cyclic class order: shifts and shift-reversals.
    # Arbitrary class permutations would break the cycling condition for k >= 4.
    maps = []
    for shift in range(k):
        maps.append(tuple(((c + shift) % k) + 1 for c in range(k)))
        maps.append(tuple(((shift - c) % k) + 1 for c in range(k)))
    return maps


def symmetry_orbit(inst: ConvexInstance):
    """Yield every color sequence in the instance's symmetry orbit.

    The group combines position rotations, position reflection, cyclic
    class relabeling, and class-order reversal; minimum crossing counts
    are invariant under all of them.  Duplicates may be yielded.
    """
    m = inst.size
    base = inst.colors
    reflected = tuple(reversed(base))
    maps = _label_maps(inst.k)
    for seq in (base, reflected):
        for r in range(m):
            rotated = seq[r:] + seq[:r]
            for lm in maps:
                yield tuple(lm[c - 1] for c in rotated)


def canonical_form(inst: ConvexInstance) -> ConvexInstance:
    """Lexicographically least color sequence over the symmetry orbit."""
    return inst.with_colors(min(symmetry_orbit(inst)))


def _extremal_colors(n: int, k: int = 3) -> tuple[int, ...]:
    return tuple(label for label in range(1, k + 1) for _ in range(n))


def extremal_instance(n: int) -> ConvexInstance:
    """The k=3 contiguous-block instance: n ones, n twos, n threes."""
    if n < 1:
        raise InputError(f"per-class size n={n} must be positive")
    return ConvexInstance.of(3, n, _extremal_colors(n))
