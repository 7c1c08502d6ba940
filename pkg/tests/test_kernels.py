import json
import os
import subprocess
import sys

import numpy as np
from hypothesis import given, settings, strategies as st

from partialshift import kernels as K

maps = st.integers(1, 40).flatmap(
    lambda n: st.tuples(st.lists(st.integers(-2, n - 1), min_size=n, max_size=n),
                        st.lists(st.integers(-2, n - 1), min_size=n, max_size=n)))


@settings(max_examples=100, deadline=None)
@given(maps)
def test_compose_paths_agree(pair):
    outer, inner = (np.array(x, dtype=np.int64) for x in pair)
    want = K.compose_numpy(outer, inner)
    assert np.array_equal(K._compose_loop(outer, inner), want)
    if K.compose_numba is not None:
        assert np.array_equal(K.compose_numba(outer, inner), want)
    # markers pass through untouched
    assert np.array_equal(want[inner < 0], inner[inner < 0])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**31), st.integers(1, 30))
def test_extend_paths_agree(states, seed, m):
    rng = np.random.default_rng(seed)
    deg = rng.integers(0, 4, states)
    ptr = np.concatenate([[0], np.cumsum(deg)]).astype(np.int64)
    succ = rng.integers(0, states, int(ptr[-1])).astype(np.int64)
    last = rng.integers(0, states, m).astype(np.int64)
    want = K.extend_numpy(last, ptr, succ)
    for fn in (K._extend_loop, K.extend_numba):
        if fn is None:
            continue
        got = fn(last, ptr, succ)
        assert all(np.array_equal(a, b) for a, b in zip(got, want))


def test_walk_counts_give_golden_mean_language():
    adj = np.array([[1, 1], [1, 0]], dtype=np.int64)
    start = np.ones(2, dtype=np.int64)
    want = [2, 3, 5, 8, 13, 21, 34, 55]
    assert K.walk_counts_numpy(adj, start, 7).tolist() == want
    assert K._walk_counts_loop(adj, start, 7).tolist() == want
    assert K.walk_counts(adj, start, 7).tolist() == want


def test_backend_default():
    expected = "numpy" if os.environ.get("PARTIALSHIFT_DISABLE_NUMBA") == "1" else "numba"
    assert K.BACKEND == expected


SCRIPT = """
import json
from partialshift import kernels
from partialshift.cli import preset_config, _suite
rep = _suite(preset_config("golden-mean"), "definition")
print(json.dumps({"backend": kernels.BACKEND, "verdict": rep.verdict, "coverage": rep.coverage}))
"""


def _run(flag):
    env = dict(os.environ, PARTIALSHIFT_DISABLE_NUMBA=flag)
    done = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True, check=True)
    return json.loads(done.stdout.strip().splitlines()[-1])


def test_env_flag_selects_backend():
    fast, slow = _run("0"), _run("1")
    assert (fast["backend"], slow["backend"]) == ("numba", "numpy")
    assert fast["verdict"] == slow["verdict"] == "pass"
    assert fast["coverage"] == slow["coverage"]
