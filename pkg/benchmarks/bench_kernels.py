#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallbacks.

Covers the two hot paths: the cosine scan behind the embedding expanders
(similarity of every vocabulary row against the seed vectors) and the
bootstrap resampling loops behind the confidence intervals. The sizes mirror
a production setting: a 25,000-word vocabulary with 300-dimensional vectors
and 10,000 bootstrap resamples.

Run `python benchmarks/bench_kernels.py`; pass --small for a quick check.
At runtime the package picks the numba path automatically; set
LEXKIT_NO_NUMBA=1 to force the numpy fallback.
"""

import argparse
import time

import numpy as np

from lexkit import _kernels


def timeit(fn, *args, repeat=5):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_cosine_scan(n_words, dim, n_seeds):
    print(f"\ncosine scan: {n_words} words x {dim} dims, {n_seeds} seeds")
    rng = np.random.default_rng(0)
    matrix = rng.normal(size=(n_words, dim))
    norms = np.linalg.norm(matrix, axis=1)
    queries = matrix[:n_seeds].copy()
    qnorms = norms[:n_seeds].copy()

    t_numpy, ref = timeit(_kernels._max_cosine_numpy, matrix, norms,
                          queries, qnorms)
    print(f"  numpy : {t_numpy * 1e3:8.2f} ms")
    if _kernels.HAS_NUMBA:
        _kernels._max_cosine_njit(matrix[:8], norms[:8], queries, qnorms)
        t_numba, got = timeit(_kernels._max_cosine_njit, matrix, norms,
                              queries, qnorms)
        agree = np.allclose(ref, got, atol=1e-10)
        print(f"  numba : {t_numba * 1e3:8.2f} ms "
              f"({t_numpy / t_numba:.2f}x vs numpy, agree={agree})")
    else:
        print("  numba : not available")


def bench_bootstrap(n_items, reps):
    print(f"\nbootstrap means: {n_items} items x {reps} resamples")
    rng = np.random.default_rng(1)
    values = rng.integers(0, 2, size=n_items).astype(np.float64)
    idx = rng.integers(0, n_items, size=(reps, n_items))

    t_numpy, ref = timeit(_kernels._bootstrap_means_numpy, values, idx)
    print(f"  numpy : {t_numpy * 1e3:8.2f} ms")
    if _kernels.HAS_NUMBA:
        _kernels._bootstrap_means_njit(values, idx[:8])
        t_numba, got = timeit(_kernels._bootstrap_means_njit, values, idx)
        agree = np.array_equal(ref, got)
        print(f"  numba : {t_numba * 1e3:8.2f} ms "
              f"({t_numpy / t_numba:.2f}x vs numpy, agree={agree})")
    else:
        print("  numba : not available")


def bench_bootstrap_pearson(n_docs, reps):
    print(f"\nbootstrap pearson: {n_docs} documents x {reps} resamples")
    rng = np.random.default_rng(2)
    a = rng.random(n_docs)
    b = 0.6 * a + 0.4 * rng.random(n_docs)
    idx = rng.integers(0, n_docs, size=(reps, n_docs))

    t_numpy, ref = timeit(_kernels._bootstrap_pearson_numpy, a, b, idx)
    print(f"  numpy : {t_numpy * 1e3:8.2f} ms")
    if _kernels.HAS_NUMBA:
        _kernels._bootstrap_pearson_njit(a, b, idx[:8])
        t_numba, got = timeit(_kernels._bootstrap_pearson_njit, a, b, idx)
        agree = np.allclose(ref, got, atol=1e-10, equal_nan=True)
        print(f"  numba : {t_numba * 1e3:8.2f} ms "
              f"({t_numpy / t_numba:.2f}x vs numpy, agree={agree})")
    else:
        print("  numba : not available")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--small", action="store_true",
                        help="reduced sizes for a quick smoke run")
    args = parser.parse_args()

    print(f"active backend: {_kernels.backend_name()}")
    if args.small:
        bench_cosine_scan(2_000, 50, 10)
        bench_bootstrap(300, 1_000)
        bench_bootstrap_pearson(500, 500)
    else:
        bench_cosine_scan(25_000, 300, 50)
        bench_bootstrap(600, 10_000)
        bench_bootstrap_pearson(5_000, 2_000)


if __name__ == "__main__":
    main()
