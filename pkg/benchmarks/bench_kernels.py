#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times each kernel on a representative workload under both backends and
prints a comparison table.  The numba column includes a warm-up call so
JIT compilation is not billed to the measurement.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

from disjunct import _kernels
from disjunct.constructions import affine_plane_matrix
from disjunct.group_testing import verify_identification
from disjunct.pairs import complete_graph_matchings, matching_numbers_all_graphs


def time_call(fn, repeats):
    fn()  # warm-up (JIT compile on the numba path)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def workloads():
    rng = np.random.default_rng(0)
    t, n = 4096, 2048
    words = rng.integers(0, 1 << 63, size=(n, t // 64), dtype=np.int64).astype(
        np.uint64
    )
    mask = words[0].copy()
    masks7, sizes7 = complete_graph_matchings(7)
    plane = affine_plane_matrix(5)

    return [
        ("column_weights 2048x4096", lambda: _kernels.column_weights(words)),
        ("subset_columns 2048x4096", lambda: _kernels.subset_columns(words, mask)),
        (
            "intersection_counts 2048x4096",
            lambda: _kernels.intersection_counts(words, mask),
        ),
        ("row_degrees 2048x4096", lambda: _kernels.row_degrees(words, t)),
        (
            "matching table k=7 (2^21 graphs)",
            lambda: _kernels.matching_numbers_table(21, masks7, sizes7),
        ),
        (
            "verify_identification AG(2,5) d=4",
            lambda: verify_identification(plane, 4),
        ),
        (
            "matching_numbers_all_graphs k=6",
            lambda: matching_numbers_all_graphs(6),
        ),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    results = {}
    for backend in backends:
        _kernels.set_backend(backend)
        for name, fn in workloads():
            results[(name, backend)] = time_call(fn, args.repeats)

    width = max(len(name) for name, _ in workloads())
    header = f"{'kernel':<{width}}  {'numpy':>10}"
    if "numba" in backends:
        header += f"  {'numba':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, _ in workloads():
        np_time = results[(name, "numpy")]
        line = f"{name:<{width}}  {np_time * 1e3:>8.2f}ms"
        if "numba" in backends:
            nb_time = results[(name, "numba")]
            line += f"  {nb_time * 1e3:>8.2f}ms  {np_time / nb_time:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
