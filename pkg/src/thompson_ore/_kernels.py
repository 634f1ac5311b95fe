"""Dense row reduction modulo a prime below 2^31.

Used as a rank prefilter by the search module: for an integer matrix the rank
mod p never exceeds the rank over Q, so a mod-p nullity of zero already proves
the rational nullspace is trivial.

Two backends with identical results: a numba kernel, and a numpy version.
Set THOMPSON_ORE_NUMBA=0 to force numpy (also used when numba is missing).
"""

from __future__ import annotations

import os

import numpy as np


def _numpy_rref(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r]) % p) % p
        pivots.append(c)
        r += 1
    return a, np.array(pivots, dtype=np.int64)


try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

if njit is not None:

    @njit(cache=True)
    def _inv_mod(x, p):
        t, nt, r, nr = 0, 1, p, x % p
        while nr:
            q = r // nr
            t, nt = nt, t - q * nt
            r, nr = nr, r - q * nr
        return t % p

    @njit(cache=True)
    def _jit_rref(a, p):
        rows, cols = a.shape
        for i in range(rows):
            for j in range(cols):
                a[i, j] %= p
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            k = -1
            for i in range(r, rows):
                if a[i, c] != 0:
                    k = i
                    break
            if k < 0:
                continue
            if k != r:
                for j in range(cols):
                    a[r, j], a[k, j] = a[k, j], a[r, j]
            inv = _inv_mod(a[r, c], p)
            for j in range(c, cols):
                a[r, j] = a[r, j] * inv % p
            for i in range(rows):
                f = a[i, c]
                if i != r and f != 0:
                    for j in range(c, cols):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
            pivots[r] = c
            r += 1
        return pivots[:r]


def _numba_rref(a, p: int) -> tuple[np.ndarray, np.ndarray]:
    a = np.array(a, dtype=np.int64)
    piv = _jit_rref(a, np.int64(p))
    return a, piv


def _select():
    if os.environ.get("THOMPSON_ORE_NUMBA", "1") == "0" or njit is None:
        return "numpy", _numpy_rref
    return "numba", _numba_rref


BACKEND, _rref = _select()


def rref_mod_p(a, p: int, backend: str | None = None) -> tuple[np.ndarray, np.ndarray]:
    """(reduced matrix, pivot columns) of ``a`` over F_p."""
    if backend is None:
        return _rref(a, p)
    if backend == "numpy":
        return _numpy_rref(a, p)
    if backend == "numba":
        if njit is None:
            raise RuntimeError("numba is not installed")
        return _numba_rref(a, p)
    raise ValueError(f"unknown backend {backend!r}")


def rank_mod_p(a, p: int, backend: str | None = None) -> int:
    return len(rref_mod_p(a, p, backend)[1])
