"""Dense row-reduction kernels over prime fields.

This is the hot inner loop of the package: every Tor table, ideal component,
and colon ideal over F_p funnels into `rref_modp`.  Two interchangeable
implementations are provided: a numba @njit kernel (default) and a
vectorized pure-numpy fallback.  Select with the environment variable
NCFILT_KERNEL=numba|numpy; numpy is also used automatically when numba is
unavailable.

Entries are int64 in 0..p-1 with p < 2^31, so products stay below 2^62 and
never overflow.
"""

from __future__ import annotations

import os

import numpy as np


def rref_modp_numpy(a: np.ndarray, p: int):
    """Reduced row echelon form mod p.  Returns (reduced_rows, pivot_cols).

    `a` is not modified; the result keeps only the nonzero rows.
    """
    a = np.array(a, dtype=np.int64) % p
    m, n = a.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        other = np.nonzero(a[:, c])[0]
        other = other[other != r]
        if other.size:
            a[other] = (a[other] - np.outer(a[other, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _build_numba_kernel():
    from numba import njit

    @njit(cache=True)
    def _inv_modp(a, p):
        # extended Euclid; a is nonzero mod p
        t, new_t = 0, 1
        r, new_r = p, a % p
        while new_r != 0:
            q = r // new_r
            t, new_t = new_t, t - q * new_t
            r, new_r = new_r, r - q * new_r
        return t % p

    @njit(cache=True)
    def _rref_modp_inplace(a, p):
        m, n = a.shape
        pivots = np.empty(min(m, n), dtype=np.int64)
        r = 0
        for c in range(n):
            if r == m:
                break
            pr = -1
            for i in range(r, m):
                if a[i, c] != 0:
                    pr = i
                    break
            if pr == -1:
                continue
            if pr != r:
                for j in range(n):
                    tmp = a[r, j]
                    a[r, j] = a[pr, j]
                    a[pr, j] = tmp
            inv = _inv_modp(a[r, c], p)
            for j in range(n):
                a[r, j] = (a[r, j] * inv) % p
            for i in range(m):
                if i != r and a[i, c] != 0:
                    f = a[i, c]
                    for j in range(n):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
            pivots[r] = c
            r += 1
        return pivots[:r]

    def rref_modp_numba(a, p):
        a = np.array(a, dtype=np.int64) % p
        if a.size == 0:
            return a[:0], []
        pivots = _rref_modp_inplace(a, p)
        r = len(pivots)
        return a[:r], [int(c) for c in pivots]

    return rref_modp_numba


def modp_matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """(a @ b) % p without int64 overflow.

    Entries are < p < 2^31, so products are < 2^62; the inner dimension is
    chunked whenever accumulating it could overflow."""
    if a.size == 0 or b.size == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    safe_terms = max(1, (1 << 62) // max(1, (p - 1) * (p - 1)))
    inner = a.shape[1]
    if inner <= safe_terms:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for start in range(0, inner, safe_terms):
        stop = min(inner, start + safe_terms)
        out = (out + a[:, start:stop] @ b[start:stop]) % p
    return out


def _select_backend():
    choice = os.environ.get("NCFILT_KERNEL", "numba").strip().lower()
    if choice not in ("numba", "numpy"):
        raise ValueError(f"NCFILT_KERNEL must be 'numba' or 'numpy', got {choice!r}")
    if choice == "numba":
        try:
            return _build_numba_kernel(), "numba"
        except ImportError:
            pass
    return rref_modp_numpy, "numpy"


rref_modp, KERNEL_BACKEND = _select_backend()
