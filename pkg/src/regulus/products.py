"""Pochhammer products: the input language for generating functions.

A ``ProductSpec`` is a finite list of factors (q^a; q^b)^e with a <= b and
e != 0, each denoting the infinite product prod_{n>=0} (1 - q^(a+bn))^e.
``expand_product`` turns a spec into a truncated series over any ring, and
``euler_factor`` is the naive one-factor product that every fast path must
reproduce bit-exactly.

Text grammar (CLI and config files): whitespace-separated factors like

    (q;q)^-1 (q^9;q^9)

with ^1 omissible on the exponent and ^a omissible when a = 1.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from . import _exact, backend
from .errors import ProductSpecParseError
from .series import Ring, TruncSeries, ZZ


@dataclass(frozen=True)
class ProductSpec:
    """A formal product of Pochhammer factors (a, b, e) meaning (q^a;q^b)^e."""

    factors: tuple

    def __post_init__(self):
        factors = tuple((int(a), int(b), int(e)) for a, b, e in self.factors)
        for a, b, e in factors:
            if a < 1 or b < 1:
                raise ValueError(f"factor (q^{a};q^{b}) needs positive offsets")
            if a > b:
                raise ValueError(f"factor (q^{a};q^{b}) has a > b")
            if e == 0:
                raise ValueError("zero exponents are not stored")
        object.__setattr__(self, "factors", factors)

    def text(self) -> str:
        """Canonical text form (parseable by ``parse_product_spec``)."""
        parts = []
        for a, b, e in self.factors:
            qa = "q" if a == 1 else f"q^{a}"
            qb = "q" if b == 1 else f"q^{b}"
            body = f"({qa};{qb})"
            parts.append(body if e == 1 else f"{body}^{e}")
        return " ".join(parts)

    def __mul__(self, other: "ProductSpec") -> "ProductSpec":
        return ProductSpec(self.factors + other.factors)


def _scan_int(text: str, pos: int) -> tuple:
    start = pos
    if pos < len(text) and text[pos] == "-":
        pos += 1
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start or (text[start] == "-" and pos == start + 1):
        raise ProductSpecParseError("expected an integer", start)
    return int(text[start:pos]), pos


def _scan_q_power(text: str, pos: int) -> tuple:
    if pos >= len(text) or text[pos] != "q":
        raise ProductSpecParseError("expected 'q'", pos)
    pos += 1
    if pos < len(text) and text[pos] == "^":
        value, pos = _scan_int(text, pos + 1)
        return value, pos
    return 1, pos


def parse_product_spec(text: str) -> ProductSpec:
    """Parse the factor grammar; errors carry the byte offset of the problem."""
    factors = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        start = pos
        if text[pos] != "(":
            raise ProductSpecParseError("expected '(' to open a factor", pos)
        a, pos = _scan_q_power(text, pos + 1)
        if pos >= n or text[pos] != ";":
            raise ProductSpecParseError("expected ';' between q-powers", pos)
        b, pos = _scan_q_power(text, pos + 1)
        if pos >= n or text[pos] != ")":
            raise ProductSpecParseError("expected ')' to close the factor", pos)
        pos += 1
        e = 1
        if pos < n and text[pos] == "^":
            e, pos = _scan_int(text, pos + 1)
        if a < 1:
            raise ProductSpecParseError(f"offset {a} must be positive", start)
        if a > b:
            raise ProductSpecParseError(f"(q^{a};q^{b}) has a > b", start)
        if e == 0:
            raise ProductSpecParseError("exponent 0 is not allowed", start)
        if pos < n and not text[pos].isspace():
            raise ProductSpecParseError("factors must be separated by whitespace", pos)
        factors.append((a, b, e))
    return ProductSpec(tuple(factors))


# ---------------------------------------------------------------------------
# Single factors
# ---------------------------------------------------------------------------

def euler_factor(a: int, b: int, precision: int, ring: Ring = ZZ) -> TruncSeries:
    """The truncated product of (1 - q^(a+bn)) over all n with a+bn < precision.

    This is the naive product, multiplied out one binomial at a time; it is
    the reference that the pentagonal fast path must match bit-exactly.
    """
    if a < 1 or b < 1:
        raise ValueError("offsets must be positive")
    m = ring.modulus
    if m is None:
        data = [0] * precision
        if precision:
            data[0] = 1
        for s in range(a, precision, b):
            data = _exact.mul_one_minus(data, s)
    else:
        k = backend.kernels()
        data = np.zeros(precision, np.int64)
        if precision:
            data[0] = 1
        for s in range(a, precision, b):
            data = k.mul_one_minus_mod(data, s, m)
    return TruncSeries(data, ring, valuation=0, precision=precision)


def pentagonal_series(c: int, precision: int, ring: Ring = ZZ) -> TruncSeries:
    """(q^c;q^c)_inf via the pentagonal-number expansion.

    sum_j (-1)^j q^(c*j*(3j-1)/2) over all integers j; only O(sqrt(P/c))
    terms land below the truncation.  Agrees bit-exactly with
    ``euler_factor(c, c, precision)``.
    """
    if c < 1:
        raise ValueError("offset must be positive")
    data = [0] * precision
    if precision:
        data[0] = 1
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        g2 = j * (3 * j + 1) // 2
        sign = -1 if j % 2 else 1
        hit = False
        for g in (g1, g2):
            e = c * g
            if e < precision:
                data[e] += sign
                hit = True
        if not hit:
            break
        j += 1
    return TruncSeries(data, ring, valuation=0, precision=precision)


# ---------------------------------------------------------------------------
# Product expansion
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def _pentagonal_cached(c: int, precision: int, ring: Ring) -> TruncSeries:
    return pentagonal_series(c, precision, ring)


def _apply_shift_factor(series: TruncSeries, a: int, b: int, e: int) -> TruncSeries:
    """Multiply (e > 0) or divide (e < 0) by (q^a;q^b)^|e| one binomial at a time."""
    ring = series.ring
    P = series.precision
    m = ring.modulus
    data = series._full_block(P)
    if m is None:
        op = _exact.mul_one_minus if e > 0 else _exact.div_one_minus
        for _ in range(abs(e)):
            for s in range(a, P, b):
                data = op(data, s)
    else:
        k = backend.kernels()
        op = k.mul_one_minus_mod if e > 0 else k.div_one_minus_mod
        for _ in range(abs(e)):
            for s in range(a, P, b):
                data = op(data, s, m)
    return TruncSeries(data, ring, valuation=0, precision=P)


def expand_product(spec: ProductSpec, precision: int, ring: Ring = ZZ,
                   cache_dir: Optional[str] = None) -> TruncSeries:
    """Expand a Pochhammer product to the requested precision over ``ring``.

    Route per factor, all bit-exact with the naive product:

    * a == b, e > 0: pentagonal series raised by binary powering;
    * a == b, e < 0: repeated division by the (sparse) pentagonal series;
    * a != b: |e| passes of single-binomial multiplication or division.
    """
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    if cache_dir is not None:
        cached = _cache_load(cache_dir, spec, precision, ring)
        if cached is not None:
            return cached
    acc = TruncSeries.one(precision, ring) if precision else TruncSeries.zero(0, ring)
    for a, b, e in spec.factors:
        if precision == 0:
            break
        if a == b:
            base = _pentagonal_cached(a, precision, ring)
            if e > 0:
                acc = acc * base ** e
            else:
                for _ in range(-e):
                    acc = acc / base
        else:
            acc = _apply_shift_factor(acc, a, b, e)
    if cache_dir is not None:
        _cache_store(cache_dir, spec, precision, ring, acc)
    return acc


# ---------------------------------------------------------------------------
# Disk cache: (spec, ring, precision) -> coefficient block
# ---------------------------------------------------------------------------

def _cache_path(cache_dir: str, spec: ProductSpec, precision: int, ring: Ring) -> str:
    canon = " ".join(sorted(f"{a},{b},{e}" for a, b, e in spec.factors))
    key = f"{canon}|{ring}|{precision}"
    digest = hashlib.sha256(key.encode()).hexdigest()[:24]
    return os.path.join(cache_dir, f"series-{digest}.json")


def _cache_load(cache_dir: str, spec: ProductSpec, precision: int,
                ring: Ring) -> Optional[TruncSeries]:
    path = _cache_path(cache_dir, spec, precision, ring)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, ValueError):
        return None
    if doc.get("ring") != str(ring) or doc.get("precision") != precision:
        return None
    coeffs = [int(c) for c in doc["coeffs"]]
    return TruncSeries(coeffs, ring, valuation=int(doc["valuation"]),
                       precision=precision)


def _cache_store(cache_dir: str, spec: ProductSpec, precision: int,
                 ring: Ring, series: TruncSeries) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, spec, precision, ring)
    doc = {
        "spec": spec.text(),
        "ring": str(ring),
        "precision": precision,
        "valuation": series.valuation,
        "coeffs": [str(int(c)) for c in series._data],
    }
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
