#!/usr/bin/env python3
"""Benchmark the compiled crossing kernels against the pure-Python fallback.

Times the raw pairwise-count kernel on random 2-factor edge arrays at
several sizes, then an end-to-end brute-force solve with each kernel
bound in place of the other.

Usage:
  python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import random
import time
from array import array

from convexcycles import ConvexInstance, kernels, min_crossings_bruteforce
from convexcycles import _kernels_py

try:
    from convexcycles import _kernels as compiled
except ImportError:
    compiled = None


def random_edge_arrays(rng, k, n):
    inst_colors = [c for c in range(1, k + 1) for _ in range(n)]
    rng.shuffle(inst_colors)
    by_class = [[] for _ in range(k)]
    for p, c in enumerate(inst_colors):
        by_class[c - 1].append(p)
    us, vs = array("i"), array("i")
    for i in range(k):
        dst = by_class[(i + 1) % k][:]
        rng.shuffle(dst)
        for a, b in zip(by_class[i], dst):
            us.append(min(a, b))
            vs.append(max(a, b))
    return us, vs


def bench_counts(impl, batches, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        total = 0
        for us, vs in batches:
            total += impl.count_crossings_arrays(us, vs)
        best = min(best, time.perf_counter() - start)
    return best, total


def bench_solver(impl, instances, repeats):
    saved = (kernels.count_crossings_arrays, kernels.edge_crossings)
    kernels.count_crossings_arrays = impl.count_crossings_arrays
    kernels.edge_crossings = impl.edge_crossings
    try:
        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            checksum = 0
            for inst in instances:
                checksum += min_crossings_bruteforce(inst).minimum
            best = min(best, time.perf_counter() - start)
        return best, checksum
    finally:
        kernels.count_crossings_arrays, kernels.edge_crossings = saved


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernels not available; showing pure-Python numbers only")
    rng = random.Random(0)

    print(f"{'kernel: count_crossings_arrays':<42}{'pure':>12}{'cython':>12}{'speedup':>9}")
    for k, n, count in [(3, 3, 2000), (3, 8, 2000), (4, 12, 1000), (3, 40, 200)]:
        batches = [random_edge_arrays(rng, k, n) for _ in range(count)]
        pure_t, pure_sum = bench_counts(_kernels_py, batches, args.repeats)
        row = f"{count} sets of {k * n} edges"
        if compiled is None:
            print(f"{row:<42}{pure_t * 1e3:>10.1f}ms{'-':>12}{'-':>9}")
            continue
        comp_t, comp_sum = bench_counts(compiled, batches, args.repeats)
        assert pure_sum == comp_sum
        print(
            f"{row:<42}{pure_t * 1e3:>10.1f}ms{comp_t * 1e3:>10.1f}ms"
            f"{pure_t / comp_t:>8.1f}x"
        )

    print()
    print(f"{'end-to-end: brute-force solve':<42}{'pure':>12}{'cython':>12}{'speedup':>9}")
    for k, n, count in [(3, 3, 50), (4, 3, 10), (3, 4, 5)]:
        instances = []
        for _ in range(count):
            colors = [c for c in range(1, k + 1) for _ in range(n)]
            rng.shuffle(colors)
            instances.append(ConvexInstance.of(k, n, colors))
        pure_t, pure_sum = bench_solver(_kernels_py, instances, args.repeats)
        row = f"{count} instances k={k} n={n}"
        if compiled is None:
            print(f"{row:<42}{pure_t * 1e3:>10.1f}ms{'-':>12}{'-':>9}")
            continue
        comp_t, comp_sum = bench_solver(compiled, instances, args.repeats)
        assert pure_sum == comp_sum
        print(
            f"{row:<42}{pure_t * 1e3:>10.1f}ms{comp_t * 1e3:>10.1f}ms"
            f"{pure_t / comp_t:>8.1f}x"
        )


if __name__ == "__main__":
    main()
