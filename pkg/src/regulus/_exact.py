"""Coefficient-block arithmetic over exact (arbitrary-precision) integers.

Blocks are plain Python lists of ints.  These routines mirror the modular
kernels in ``_kernels_numpy`` / ``_kernels_numba`` but never overflow, so the
exact ring is the correctness reference for both accelerated backends.
"""

from __future__ import annotations


def add_blocks(a: list, b: list, n_out: int) -> list:
    out = [0] * n_out
    for i, v in enumerate(a[:n_out]):
        out[i] = v
    for i, v in enumerate(b[:n_out]):
        out[i] += v
    return out


def mul(a: list, b: list, n_out: int) -> list:
    """Cauchy product truncated to n_out terms, iterating the sparser factor."""
    nza = sum(1 for v in a[:n_out] if v)
    nzb = sum(1 for v in b[:n_out] if v)
    if nzb < nza:
        a, b = b, a
    out = [0] * n_out
    for i, v in enumerate(a[:n_out]):
        if v == 0:
            continue
        lim = n_out - i
        for j, w in enumerate(b[:lim]):
            if w:
                out[i + j] += v * w
    return out


def divide(num: list, d_idx: list, d_val: list, d_lead: int, n_out: int) -> list:
    """Quotient g with g * d = num through n_out terms.

    The divisor is given by its strictly positive exponents ``d_idx`` (sorted
    ascending) with values ``d_val``, plus leading coefficient ``d_lead``
    which must be +1 or -1 so that the recurrence stays integral.
    """
    if d_lead not in (1, -1):
        raise ValueError("exact division requires leading coefficient +1 or -1")
    g = [0] * n_out
    nnz = len(d_idx)
    for n in range(n_out):
        acc = num[n] if n < len(num) else 0
        for j in range(nnz):
            i = d_idx[j]
            if i > n:
                break
            acc -= d_val[j] * g[n - i]
        g[n] = acc if d_lead == 1 else -acc
    return g


def mul_one_minus(f: list, s: int) -> list:
    """f * (1 - q^s), same length."""
    n = len(f)
    out = list(f)
    for k in range(n - 1, s - 1, -1):
        out[k] -= f[k - s]
    return out


def div_one_minus(f: list, s: int) -> list:
    """f / (1 - q^s), same length (multiplication by the geometric series in q^s)."""
    out = list(f)
    for k in range(s, len(out)):
        out[k] += out[k - s]
    return out
