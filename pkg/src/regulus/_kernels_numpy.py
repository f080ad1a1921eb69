"""Pure-numpy kernels for coefficient blocks over Z/m.

Blocks are int64 arrays with entries in [0, m).  Every routine here must
agree bit-exactly with ``_kernels_numba``; the test suite enforces parity.

Overflow discipline: m is capped at 2**31 - 1 by the series layer, so a
single product is < 2**62 and partial sums are reduced before they can
reach 2**63.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "numpy"

_SAFE_LIMIT = 1 << 62


def mul_mod(a: np.ndarray, b: np.ndarray, m: int, n_out: int) -> np.ndarray:
    """Truncated Cauchy product of two blocks, reduced mod m."""
    if n_out == 0:
        return np.zeros(0, np.int64)
    nza = int(np.count_nonzero(a[:n_out]))
    nzb = int(np.count_nonzero(b[:n_out]))
    if nzb < nza:
        a, b = b, a
        nza = nzb
    # Dense path: np.convolve is C-speed; safe whenever every output slot
    # accumulates fewer than _SAFE_LIMIT / (m-1)^2 products.
    terms = min(len(a), len(b), n_out)
    if nza * 8 >= n_out and terms * (m - 1) * (m - 1) < _SAFE_LIMIT:
        c = np.convolve(a[:n_out], b[:n_out])[:n_out] % m
        out = np.zeros(n_out, np.int64)
        out[: len(c)] = c
        return out
    # Sparse path: shifted axpy per nonzero of the sparser factor, with
    # periodic reduction to stay inside int64.
    idx = np.nonzero(a[:n_out])[0]
    val = a[idx]
    out = np.zeros(n_out, np.int64)
    budget = max(1, int(_SAFE_LIMIT // max(1, (m - 1) * (m - 1))))
    since = 0
    bb = b[:n_out]
    for i, v in zip(idx.tolist(), val.tolist()):
        seg = n_out - i
        out[i:] += v * bb[:seg]
        since += 1
        if since >= budget:
            out %= m
            since = 0
    out %= m
    return out


def divide_mod(num: np.ndarray, d_idx: np.ndarray, d_val: np.ndarray,
               d_lead_inv: int, m: int, n_out: int) -> np.ndarray:
    """Quotient g with g * d = num through n_out terms.

    Divisor given by sorted positive exponents d_idx / values d_val plus the
    modular inverse of its constant term.  Sequential recurrence; this is the
    slow path relative to the numba backend.
    """
    g = np.zeros(n_out, np.int64)
    nnz = len(d_idx)
    use_dot = nnz * (m - 1) * (m - 1) < _SAFE_LIMIT
    j_hi = 0
    ln = len(num)
    for n in range(n_out):
        while j_hi < nnz and d_idx[j_hi] <= n:
            j_hi += 1
        acc = int(num[n]) if n < ln else 0
        if j_hi:
            gathered = g[n - d_idx[:j_hi]]
            if use_dot:
                acc -= int(np.dot(d_val[:j_hi], gathered))
            else:
                acc -= int(((d_val[:j_hi] * gathered) % m).sum())
        g[n] = (acc % m) * d_lead_inv % m
    return g


def mul_one_minus_mod(f: np.ndarray, s: int, m: int) -> np.ndarray:
    """f * (1 - q^s) mod m, same length."""
    out = f.copy()
    if s < len(f):
        out[s:] = (f[s:] - f[:-s]) % m
    return out


def div_one_minus_mod(f: np.ndarray, s: int, m: int) -> np.ndarray:
    """f / (1 - q^s) mod m, same length.

    Ascending blocks of width s: each block adds the fully-updated previous
    block, which is exactly the geometric-series recurrence.
    """
    out = f.copy()
    P = len(out)
    for lo in range(s, P, s):
        hi = min(lo + s, P)
        out[lo:hi] = (out[lo:hi] + out[lo - s:lo - s + (hi - lo)]) % m
    return out
