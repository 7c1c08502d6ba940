"""Array kernels with a numba path and a pure numpy fallback.

Set ``PARTIALSHIFT_DISABLE_NUMBA=1`` to force the numpy implementations.
Both paths return identical integer arrays.

Partial maps are int64 arrays over basis indices; negative entries are
markers (``ZERO`` for the zero vector, ``OUT`` for an image that left the
truncated basis) and propagate unchanged through composition.
"""
import os

import numpy as np

ZERO = -1
OUT = -2

_disabled = os.environ.get("PARTIALSHIFT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _disabled:
        raise ImportError
    from numba import njit
except ImportError:  # pragma: no cover - exercised via the env flag
    njit = None

BACKEND = "numba" if njit is not None else "numpy"


# composition of partial maps: (outer . inner)[i]

def compose_numpy(outer, inner):
    safe = np.where(inner >= 0, inner, 0)
    return np.where(inner >= 0, outer[safe], inner)


def _compose_loop(outer, inner):
    out = np.empty(inner.shape[0], dtype=np.int64)
    for i in range(inner.shape[0]):
        j = inner[i]
        out[i] = outer[j] if j >= 0 else j
    return out


# one step of path enumeration in a graph given in CSR form

def extend_numpy(last, ptr, succ):
    deg = ptr[last + 1] - ptr[last]
    total = int(deg.sum())
    parent = np.repeat(np.arange(last.shape[0], dtype=np.int64), deg)
    start = np.repeat(ptr[last], deg)
    firsts = np.repeat(np.cumsum(deg) - deg, deg)
    pos = np.arange(total, dtype=np.int64) - firsts
    return parent, succ[start + pos]


def _extend_loop(last, ptr, succ):
    total = 0
    for i in range(last.shape[0]):
        total += ptr[last[i] + 1] - ptr[last[i]]
    parent = np.empty(total, dtype=np.int64)
    child = np.empty(total, dtype=np.int64)
    k = 0
    for i in range(last.shape[0]):
        s = last[i]
        for e in range(ptr[s], ptr[s + 1]):
            parent[k] = i
            child[k] = succ[e]
            k += 1
    return parent, child


# path counts: counts[t] = number of walks with t edges starting in `start`

def walk_counts_numpy(adj, start, steps):
    counts = np.empty(steps + 1, dtype=np.int64)
    v = start.astype(np.int64)
    counts[0] = v.sum()
    for t in range(1, steps + 1):
        v = v @ adj
        counts[t] = v.sum()
    return counts


def _walk_counts_loop(adj, start, steps):
    n = adj.shape[0]
    counts = np.empty(steps + 1, dtype=np.int64)
    v = start.astype(np.int64).copy()
    counts[0] = v.sum()
    for t in range(1, steps + 1):
        w = np.zeros(n, dtype=np.int64)
        for i in range(n):
            if v[i] != 0:
                for j in range(n):
                    w[j] += v[i] * adj[i, j]
        v = w
        counts[t] = v.sum()
    return counts


if njit is not None:
    compose_numba = njit(cache=True)(_compose_loop)
    extend_numba = njit(cache=True)(_extend_loop)
    walk_counts_numba = njit(cache=True)(_walk_counts_loop)
    compose, extend, walk_counts = compose_numba, extend_numba, walk_counts_numba
else:
    compose_numba = extend_numba = walk_counts_numba = None
    compose, extend, walk_counts = compose_numpy, extend_numpy, walk_counts_numpy
