"""Time the mod-p row reduction backends on the chain-search matrices.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from thompson_ore import _kernels
from thompson_ore.field import GF
from thompson_ore.search import PREFILTER_PRIME, bounded_support, build_system, chain_lefts


def dense(m, d, j, p=PREFILTER_PRIME):
    sys = build_system(chain_lefts(m), [bounded_support(d, j)] * (m + 1))
    fp = GF(p)
    a = np.zeros((len(sys.rows), sys.ncols), dtype=np.int64)
    for r, row in enumerate(sys.rows):
        for c, v in row.items():
            a[r, c] = fp.coerce(v)
    return a


def best(fn, repeat):
    out = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        out = min(out, time.perf_counter() - t)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    cases = [(1, 3, 3), (1, 4, 4), (2, 3, 4), (2, 4, 5)]
    backends = ["numpy"] + (["numba"] if _kernels.njit is not None else [])
    if "numba" in backends:
        _kernels.rank_mod_p(np.eye(2, dtype=np.int64), 7, "numba")  # compile
    print(f"{'m':>2} {'deg':>3} {'idx':>3} {'shape':>12} " + " ".join(f"{b:>10}" for b in backends) + "  rank")
    for m, d, j in cases:
        a = dense(m, d, j)
        ranks = set()
        times = []
        for b in backends:
            times.append(best(lambda: ranks.add(_kernels.rank_mod_p(a, PREFILTER_PRIME, b)), args.repeat))
        assert len(ranks) == 1
        shape = f"{a.shape[0]}x{a.shape[1]}"
        print(f"{m:>2} {d:>3} {j:>3} {shape:>12} " + " ".join(f"{t:>9.4f}s" for t in times) + f"  {ranks.pop()}")


if __name__ == "__main__":
    main()
