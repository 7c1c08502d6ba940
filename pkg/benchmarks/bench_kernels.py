"""Time the numba kernels against the numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json PATH]

Each kernel runs on the same inputs through both paths; outputs are
compared before timing so a speedup never hides a wrong answer.
"""
import argparse
import json
import sys
import timeit

import numpy as np

from partialshift import kernels as K


def _cases(rng):
    n = 200_000
    inner = rng.integers(-2, n, n).astype(np.int64)
    outer = rng.integers(-2, n, n).astype(np.int64)
    yield "compose", (outer, inner), K.compose_numpy, K.compose_numba

    states = 2_000
    deg = rng.integers(1, 4, states)
    ptr = np.concatenate([[0], np.cumsum(deg)]).astype(np.int64)
    succ = rng.integers(0, states, int(ptr[-1])).astype(np.int64)
    last = rng.integers(0, states, 100_000).astype(np.int64)
    yield "extend", (last, ptr, succ), K.extend_numpy, K.extend_numba

    m = 64
    adj = (rng.random((m, m)) < 0.05).astype(np.int64)
    start = (rng.random(m) < 0.5).astype(np.int64)
    yield "walk_counts", (adj, start, 24), K.walk_counts_numpy, K.walk_counts_numba


def _same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def run(repeat=5, seed=0):
    rng = np.random.default_rng(seed)
    rows = []
    for name, args, fn_np, fn_nb in _cases(rng):
        row = {"kernel": name}
        row["numpy_ms"] = min(timeit.repeat(lambda: fn_np(*args), number=1, repeat=repeat)) * 1e3
        if fn_nb is None:
            row["numba_ms"] = None
        else:
            fn_nb(*args)  # compile outside the timing
            if not _same(fn_np(*args), fn_nb(*args)):
                raise SystemExit(f"{name}: numba and numpy outputs differ")
            row["numba_ms"] = min(timeit.repeat(lambda: fn_nb(*args), number=1, repeat=repeat)) * 1e3
            row["speedup"] = row["numpy_ms"] / row["numba_ms"] if row["numba_ms"] else None
        rows.append(row)
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json")
    args = ap.parse_args(argv)
    rows = run(args.repeat, args.seed)
    print(f"backend in use: {K.BACKEND}")
    print(f"{'kernel':<12}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for r in rows:
        nb = "-" if r["numba_ms"] is None else f"{r['numba_ms']:.3f}"
        sp = "-" if r.get("speedup") is None else f"{r['speedup']:.1f}x"
        print(f"{r['kernel']:<12}{r['numpy_ms']:>12.3f}{nb:>12}{sp:>10}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"backend": K.BACKEND, "rows": rows}, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
