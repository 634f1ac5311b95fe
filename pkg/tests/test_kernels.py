import os
import subprocess
import sys

import numpy as np
import pytest

from thompson_ore import _kernels
from thompson_ore.linalg import rank
from thompson_ore.field import GF

P = 2**31 - 1


def random_matrix(rng, r, c, density=0.4, p=P):
    a = rng.integers(0, p, size=(r, c), dtype=np.int64)
    a[rng.random((r, c)) > density] = 0
    return a


@pytest.mark.skipif(_kernels.njit is None, reason="numba not installed")
def test_backends_agree():
    rng = np.random.default_rng(5)
    for r, c in [(1, 1), (3, 5), (8, 8), (20, 13), (30, 40)]:
        a = random_matrix(rng, r, c)
        a[-1] = a[0]
        ra, pa = _kernels.rref_mod_p(a, P, "numpy")
        rb, pb = _kernels.rref_mod_p(a, P, "numba")
        assert np.array_equal(ra, rb) and np.array_equal(pa, pb)


def test_rank_matches_exact():
    rng = np.random.default_rng(9)
    f = GF(101)
    for _ in range(20):
        a = random_matrix(rng, 6, 7, 0.5, 101)
        a[3] = (2 * a[1] + a[2]) % 101
        rows = [{j: int(x) for j, x in enumerate(row) if x} for row in a]
        assert _kernels.rank_mod_p(a, 101) == rank(rows, f)


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.rref_mod_p(np.eye(2, dtype=np.int64), 7, "cuda")


def test_env_flag_selects_numpy():
    env = dict(os.environ, THOMPSON_ORE_NUMBA="0")
    out = subprocess.run(
        [sys.executable, "-c", "from thompson_ore import _kernels; print(_kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
