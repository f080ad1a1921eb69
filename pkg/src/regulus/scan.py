"""Empirical search for zero progressions and self-similarities.

Zero progression: b_ell(A n + B) = 0 mod m on every checked index.
Self-similarity: sum_n b_ell(A n + B) q^n = c * q^j * B_ell(q^k) mod m.

Everything found here is a *candidate*, never a theorem: results carry the
number of coefficients checked, and similarity candidates are re-verified
against a freshly computed series at twice the requested range (failures are
kept, downgraded to refuted).  Output is deterministic for fixed inputs.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import EvidenceTooThinError
from .regular import b_ell_series
from .series import Zmod

#: A candidate must match at least this many coefficients by default.
DEFAULT_MIN_EVIDENCE = 50


@dataclass(frozen=True)
class SimilarityCandidate:
    ell: int
    A: int
    B: int
    c: int
    j: int
    k: int
    m: int
    verified_through: int   # count of matching coefficients
    status: str             # "candidate" or "refuted"

    def sort_key(self) -> tuple:
        return (self.A, self.B, self.k, self.j, self.c)

    def to_json_dict(self) -> dict:
        return {"type": "similarity", "ell": self.ell, "A": self.A, "B": self.B,
                "c": self.c, "j": self.j, "k": self.k, "m": self.m,
                "verified_through": self.verified_through, "status": self.status}


@dataclass(frozen=True)
class ZeroProgressionHit:
    ell: int
    A: int
    B: int
    m: int
    evidence: int           # number of indices checked

    def to_json_dict(self) -> dict:
        return {"type": "zero-progression", "ell": self.ell, "A": self.A,
                "B": self.B, "m": self.m, "evidence": self.evidence}


@dataclass
class ScanSummary:
    cells_scanned: int = 0
    hits: int = 0
    skipped: list = None
    duration_ms: float = 0.0

    def to_json_dict(self) -> dict:
        return {"type": "summary", "cells_scanned": self.cells_scanned,
                "hits": self.hits, "skipped": self.skipped or [],
                "duration_ms": round(self.duration_ms, 3)}


def _base_block(ell: int, m: int, n_max: int, cache_dir: Optional[str]) -> np.ndarray:
    series = b_ell_series(ell, n_max + 1, Zmod(m), cache_dir)
    return np.asarray(series._full_block(series.precision))


def scan_zero_progressions(ell: int, a_max: int, m: int, n_max: int,
                           min_evidence: int = DEFAULT_MIN_EVIDENCE,
                           exclude_zero_residue: bool = False,
                           cache_dir: Optional[str] = None) -> tuple:
    """All (A <= a_max, B < A) with b_ell(A n + B) = 0 mod m on every index.

    Cells with fewer than ``min_evidence`` checkable indices are skipped and
    noted.  With ``exclude_zero_residue`` the indices n = 0 mod A are omitted
    per cell, which is how the exception-style congruences surface.

    Returns (hits, summary).  Raises EvidenceTooThinError when no cell at all
    reaches the evidence threshold.
    """
    if a_max < 1 or m < 2 or n_max < 0:
        raise ValueError("need a_max >= 1, m >= 2, n_max >= 0")
    t0 = time.perf_counter()
    base = _base_block(ell, m, n_max, cache_dir)
    hits = []
    skipped = []
    cells = 0
    for A in range(1, a_max + 1):
        prog_len = (n_max) // A + 1  # indices n with A*n <= n_max (B=0 worst case)
        indices = np.arange(prog_len)
        usable = prog_len
        if exclude_zero_residue:
            usable = int(np.count_nonzero(indices % A != 0))
        if usable < min_evidence:
            skipped.append({"A": A, "reason":
                            f"only {usable} checkable indices (< {min_evidence})"})
            continue
        for B in range(A):
            cells += 1
            prog = base[B::A]
            keep = np.ones(len(prog), dtype=bool)
            if exclude_zero_residue:
                keep = np.arange(len(prog)) % A != 0
            checked = int(np.count_nonzero(keep))
            if checked < min_evidence:
                skipped.append({"A": A, "B": B, "reason":
                                f"only {checked} checkable indices"})
                continue
            if not prog[keep].any():
                hits.append(ZeroProgressionHit(ell, A, B, m, checked))
    if cells == 0:
        raise EvidenceTooThinError(
            f"no cell with A <= {a_max} reaches {min_evidence} indices at n_max {n_max}")
    summary = ScanSummary(cells_scanned=cells, hits=len(hits), skipped=skipped,
                          duration_ms=(time.perf_counter() - t0) * 1000.0)
    return hits, summary


def _match_similarity(prog: np.ndarray, base: np.ndarray, m: int, j: int,
                      k: int) -> Optional[int]:
    """The unique unit c with prog = c * q^j * B(q^k), or None.

    b(0) = 1 forces c = prog[j]; one vectorized comparison settles the rest.
    """
    L = len(prog)
    if j >= L:
        return None
    c = int(prog[j])
    if c == 0 or math.gcd(c, m) != 1:
        return None
    rhs = np.zeros(L, dtype=np.int64)
    idx = np.arange(j, L, k)
    rhs[idx] = (c * base[(idx - j) // k]) % m
    return c if np.array_equal(prog, rhs) else None


def scan_self_similarity(ell: int, a_max: int, k_max: int, m: int, n_max: int,
                         j_max: int = 3,
                         min_evidence: int = DEFAULT_MIN_EVIDENCE,
                         cache_dir: Optional[str] = None) -> tuple:
    """Similarity candidates over A <= a_max, k <= k_max, j <= j_max.

    First pass at ``n_max``; every candidate is then re-verified against a
    freshly computed series at 2 * n_max and downgraded to refuted on any
    mismatch.  Candidates are sorted by (A, B, k, j, c).
    """
    if a_max < 1 or k_max < 1 or m < 2 or j_max < 0:
        raise ValueError("need a_max >= 1, k_max >= 1, m >= 2, j_max >= 0")
    t0 = time.perf_counter()
    base = _base_block(ell, m, n_max, cache_dir)
    found = []
    cells = 0
    skipped = []
    for A in range(1, a_max + 1):
        for B in range(A):
            prog = base[B::A]
            if len(prog) < min_evidence:
                skipped.append({"A": A, "B": B, "reason":
                                f"only {len(prog)} coefficients"})
                continue
            cells += 1
            if not prog.any():
                continue  # zero progressions cannot match a unit multiple
            for k in range(1, k_max + 1):
                for j in range(0, j_max + 1):
                    c = _match_similarity(prog, base, m, j, k)
                    if c is not None:
                        found.append((A, B, c, j, k, len(prog)))
    if cells == 0:
        raise EvidenceTooThinError(
            f"no cell with A <= {a_max} reaches {min_evidence} coefficients")
    # soundness pass: recheck against an independent expansion at double range
    base2 = _base_block(ell, m, 2 * n_max, cache_dir)
    candidates = []
    for A, B, c, j, k, evidence in found:
        prog2 = base2[B::A]
        rhs = np.zeros(len(prog2), dtype=np.int64)
        idx = np.arange(j, len(prog2), k)
        rhs[idx] = (c * base2[(idx - j) // k]) % m
        ok = np.array_equal(prog2, rhs)
        candidates.append(SimilarityCandidate(
            ell=ell, A=A, B=B, c=c, j=j, k=k, m=m,
            verified_through=len(prog2) if ok else evidence,
            status="candidate" if ok else "refuted"))
    candidates.sort(key=SimilarityCandidate.sort_key)
    summary = ScanSummary(cells_scanned=cells, hits=len(candidates),
                          skipped=skipped,
                          duration_ms=(time.perf_counter() - t0) * 1000.0)
    return candidates, summary
