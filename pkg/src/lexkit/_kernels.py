"""Hot numeric kernels: cosine scans over the embedding matrix and bootstrap
resampling loops.

Each kernel has a numba ``@njit`` implementation and a pure-numpy variant.
Dispatch follows measurement (benchmarks/bench_kernels.py): the bootstrap
resampling loops run ~12-15x faster under numba and use it whenever it is
importable; the dense cosine scan is a matrix product that BLAS wins by ~6x,
so it stays on the numpy path and the njit variant is kept for comparison.
Set ``LEXKIT_NO_NUMBA=1`` to force pure numpy everywhere (platforms without
numba, or benchmarking the fallback).

Rows or queries with zero norm get similarity -2.0, below any true cosine,
so they can never clear a threshold. RNG never lives inside a kernel:
resample index matrices are drawn by the caller with numpy Generators, which
keeps results reproducible and identical across both paths.
"""

from __future__ import annotations

import os

import numpy as np

_ENV_FLAG = os.environ.get("LEXKIT_NO_NUMBA", "").strip().lower()
_NUMBA_DISABLED = _ENV_FLAG in {"1", "true", "yes", "on"}

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and not _NUMBA_DISABLED


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"


# -- pure numpy implementations -------------------------------------------

def _max_cosine_numpy(matrix, norms, queries, qnorms):
    sims = matrix @ queries.T
    denom = np.outer(norms, qnorms)
    with np.errstate(divide="ignore", invalid="ignore"):
        sims = np.where(denom > 0.0, sims / denom, -2.0)
    return sims.max(axis=1)


def _cosine_to_query_numpy(matrix, norms, query, qnorm):
    dots = matrix @ query
    denom = norms * qnorm
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(denom > 0.0, dots / denom, -2.0)


def _bootstrap_means_numpy(values, idx):
    return values[idx].mean(axis=1)


def _bootstrap_pearson_numpy(a, b, idx):
    xa = a[idx]
    xb = b[idx]
    xa = xa - xa.mean(axis=1, keepdims=True)
    xb = xb - xb.mean(axis=1, keepdims=True)
    num = (xa * xb).sum(axis=1)
    denom = np.sqrt((xa * xa).sum(axis=1) * (xb * xb).sum(axis=1))
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(denom > 0.0, num / denom, np.nan)


# -- numba implementations --------------------------------------------------

if HAS_NUMBA:

    @njit(cache=True)
    def _max_cosine_njit(matrix, norms, queries, qnorms):  # pragma: no cover
        n, d = matrix.shape
        q = queries.shape[0]
        out = np.empty(n)
        for i in range(n):
            best = -2.0
            if norms[i] > 0.0:
                for k in range(q):
                    if qnorms[k] > 0.0:
                        dot = 0.0
                        for j in range(d):
                            dot += matrix[i, j] * queries[k, j]
                        sim = dot / (norms[i] * qnorms[k])
                        if sim > best:
                            best = sim
            out[i] = best
        return out

    @njit(cache=True)
    def _cosine_to_query_njit(matrix, norms, query, qnorm):  # pragma: no cover
        n, d = matrix.shape
        out = np.empty(n)
        for i in range(n):
            if norms[i] > 0.0 and qnorm > 0.0:
                dot = 0.0
                for j in range(d):
                    dot += matrix[i, j] * query[j]
                out[i] = dot / (norms[i] * qnorm)
            else:
                out[i] = -2.0
        return out

    @njit(cache=True)
    def _bootstrap_means_njit(values, idx):  # pragma: no cover
        reps, n = idx.shape
        out = np.empty(reps)
        for r in range(reps):
            total = 0.0
            for j in range(n):
                total += values[idx[r, j]]
            out[r] = total / n
        return out

    @njit(cache=True)
    def _bootstrap_pearson_njit(a, b, idx):  # pragma: no cover
        reps, n = idx.shape
        out = np.empty(reps)
        for r in range(reps):
            ma = 0.0
            mb = 0.0
            for j in range(n):
                ma += a[idx[r, j]]
                mb += b[idx[r, j]]
            ma /= n
            mb /= n
            num = 0.0
            ssa = 0.0
            ssb = 0.0
            for j in range(n):
                da = a[idx[r, j]] - ma
                db = b[idx[r, j]] - mb
                num += da * db
                ssa += da * da
                ssb += db * db
            denom = np.sqrt(ssa * ssb)
            out[r] = num / denom if denom > 0.0 else np.nan
        return out


# -- dispatch ---------------------------------------------------------------

def max_cosine(matrix, norms, queries, qnorms):
    """Per row of ``matrix``: max cosine similarity to any query vector.

    Always the numpy path: the scan is one BLAS matrix product, which beats
    the scalar njit loop on every size we measured.
    """
    matrix = np.ascontiguousarray(matrix, dtype=np.float64)
    queries = np.ascontiguousarray(queries, dtype=np.float64)
    norms = np.asarray(norms, dtype=np.float64)
    qnorms = np.asarray(qnorms, dtype=np.float64)
    return _max_cosine_numpy(matrix, norms, queries, qnorms)


def cosine_to_query(matrix, norms, query, qnorm):
    """Per row of ``matrix``: cosine similarity to one query vector."""
    matrix = np.ascontiguousarray(matrix, dtype=np.float64)
    query = np.ascontiguousarray(query, dtype=np.float64)
    norms = np.asarray(norms, dtype=np.float64)
    return _cosine_to_query_numpy(matrix, norms, query, float(qnorm))


def bootstrap_means(values, idx):
    """Mean of ``values[idx[r]]`` for every resample row r."""
    values = np.asarray(values, dtype=np.float64)
    idx = np.ascontiguousarray(idx, dtype=np.int64)
    if USE_NUMBA:
        return _bootstrap_means_njit(values, idx)
    return _bootstrap_means_numpy(values, idx)


def bootstrap_pearson(a, b, idx):
    """Pearson r of the resampled pairs for every resample row; NaN when a
    resample is constant in either coordinate."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    idx = np.ascontiguousarray(idx, dtype=np.int64)
    if USE_NUMBA:
        return _bootstrap_pearson_njit(a, b, idx)
    return _bootstrap_pearson_numpy(a, b, idx)
