"""Numba-jitted kernels for coefficient blocks over Z/m.

Same contract as ``_kernels_numpy`` (bit-exact agreement is enforced by the
test suite).  All jitted loops release the GIL so claim verification and
scanning can parallelize across threads.

Overflow discipline: m <= 2**31 - 1, so one product is < 2**62; accumulators
are reduced as soon as they pass 2**62 and therefore never wrap.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND_NAME = "numba"

_THRESH = np.int64(1) << 62


@njit(cache=True, nogil=True)
def _conv(a, b, m, n_out):
    out = np.zeros(n_out, np.int64)
    for i in range(min(a.size, n_out)):
        ai = a[i]
        if ai == 0:
            continue
        top = min(b.size, n_out - i)
        for j in range(top):
            acc = out[i + j] + ai * b[j]
            if acc >= _THRESH:
                acc %= m
            out[i + j] = acc
    for i in range(n_out):
        out[i] %= m
    return out


@njit(cache=True, nogil=True)
def _divide(num, d_idx, d_val, d_lead_inv, m, n_out):
    g = np.zeros(n_out, np.int64)
    nnz = d_idx.size
    ln = num.size
    for n in range(n_out):
        acc = num[n] if n < ln else 0
        for j in range(nnz):
            i = d_idx[j]
            if i > n:
                break
            acc -= d_val[j] * g[n - i]
            if acc <= -_THRESH:
                acc %= m
        g[n] = (acc % m) * d_lead_inv % m
    return g


@njit(cache=True, nogil=True)
def _mul_one_minus(f, s, m):
    out = f.copy()
    for k in range(f.size - 1, s - 1, -1):
        out[k] = (f[k] - f[k - s]) % m
    return out


@njit(cache=True, nogil=True)
def _div_one_minus(f, s, m):
    out = f.copy()
    for k in range(s, out.size):
        out[k] = (out[k] + out[k - s]) % m
    return out


def mul_mod(a: np.ndarray, b: np.ndarray, m: int, n_out: int) -> np.ndarray:
    if n_out == 0:
        return np.zeros(0, np.int64)
    # The jitted loop already skips zero rows, so just put the sparser
    # factor on the outside.
    if np.count_nonzero(b[:n_out]) < np.count_nonzero(a[:n_out]):
        a, b = b, a
    return _conv(a, b, np.int64(m), np.int64(n_out))


def divide_mod(num: np.ndarray, d_idx: np.ndarray, d_val: np.ndarray,
               d_lead_inv: int, m: int, n_out: int) -> np.ndarray:
    return _divide(num, d_idx.astype(np.int64), d_val.astype(np.int64),
                   np.int64(d_lead_inv), np.int64(m), np.int64(n_out))


def mul_one_minus_mod(f: np.ndarray, s: int, m: int) -> np.ndarray:
    return _mul_one_minus(f, np.int64(s), np.int64(m))


def div_one_minus_mod(f: np.ndarray, s: int, m: int) -> np.ndarray:
    return _div_one_minus(f, np.int64(s), np.int64(m))
