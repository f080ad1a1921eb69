"""Eta quotients as modular-form candidates.

An eta quotient is a finite product prod_{delta | N} eta(delta z)^(r_delta).
This module checks the classical admissibility congruences (both weighted
exponent sums divisible by 24, even exponent total), derives the weight /
level / character data, computes q-expansions on the 1/24 exponent lattice,
applies Hecke operators T_p to q-expansions, and compares expansions through
the Sturm bound.

The fractional exponent prod q^(delta r_delta / 24) is carried as the integer
``lead24`` (in 1/24 units) alongside an ordinary integer-exponent series;
quotients are compared by aligning lead24 first.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    EtaTextParseError,
    FirstCongruenceError,
    HalfIntegralWeightError,
    InsufficientPrecisionError,
    RingMismatchError,
    SecondCongruenceError,
)
from .products import ProductSpec, expand_product
from .report import Status, VerificationReport
from .series import Ring, TruncSeries, ZZ


@dataclass(frozen=True)
class EtaQuotient:
    """Level N plus a map delta -> r_delta over divisors of N (r_delta != 0)."""

    level: int
    exponents: tuple  # ((delta, r), ...) sorted by delta

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be positive")
        pairs = tuple(sorted((int(d), int(r)) for d, r in dict(self.exponents).items()))
        for d, r in pairs:
            if d < 1 or self.level % d != 0:
                raise ValueError(f"delta {d} does not divide the level {self.level}")
            if r == 0:
                raise ValueError("zero exponents are not stored")
        object.__setattr__(self, "exponents", pairs)

    @property
    def lead24(self) -> int:
        """Leading q-exponent in 1/24 units: sum(delta * r_delta)."""
        return sum(d * r for d, r in self.exponents)

    def text(self) -> str:
        """Text form ``N: d1^r1 * d2^r2 * ...``."""
        body = " * ".join(f"{d}^{r}" for d, r in self.exponents)
        return f"{self.level}: {body}"

    def __mul__(self, other: "EtaQuotient") -> "EtaQuotient":
        merged = dict(self.exponents)
        for d, r in other.exponents:
            merged[d] = merged.get(d, 0) + r
            if merged[d] == 0:
                del merged[d]
        level = self.level * other.level // _gcd(self.level, other.level)
        return EtaQuotient(level, tuple(merged.items()))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def parse_eta_quotient(text: str) -> EtaQuotient:
    """Parse ``N: d^r * d^r * ...`` with byte offsets in errors."""
    colon = text.find(":")
    if colon < 0:
        raise EtaTextParseError("expected 'level:' prefix", 0)
    try:
        level = int(text[:colon].strip())
    except ValueError:
        raise EtaTextParseError("level must be an integer", 0) from None
    pairs = []
    pos = colon + 1
    for chunk in text[colon + 1:].split("*"):
        term = chunk.strip()
        offset = pos + chunk.index(term[0]) if term else pos
        if not term:
            raise EtaTextParseError("empty factor", pos)
        if "^" in term:
            d_text, _, r_text = term.partition("^")
        else:
            d_text, r_text = term, "1"
        try:
            d, r = int(d_text), int(r_text)
        except ValueError:
            raise EtaTextParseError(f"malformed factor {term!r}", offset) from None
        pairs.append((d, r))
        pos += len(chunk) + 1
    try:
        return EtaQuotient(level, tuple(pairs))
    except ValueError as exc:
        raise EtaTextParseError(str(exc), colon + 1) from None


@dataclass(frozen=True)
class ModFormMeta:
    """Weight, level and character seed attached to an admissible eta quotient.

    The character is d -> kronecker((-1)^weight * s, d) where s is the exact
    rational prod delta^(r_delta), stored as the pair char_s_num/char_s_den.
    Only the square class of s matters, so evaluation may multiply the two.
    """

    weight: int
    level: int
    char_s_num: int
    char_s_den: int

    def character(self, d: int) -> int:
        return character_value(self, d)


# ---------------------------------------------------------------------------
# Admissibility and metadata
# ---------------------------------------------------------------------------

def validate_eta_quotient(eq: EtaQuotient) -> ModFormMeta:
    """Check both weight-24 congruences and derive (weight, level, character).

    Raises FirstCongruenceError / SecondCongruenceError with the offending sum
    mod 24, or HalfIntegralWeightError when sum(r_delta) is odd.
    """
    s1 = sum(d * r for d, r in eq.exponents)
    if s1 % 24:
        raise FirstCongruenceError(s1 % 24)
    s2 = sum((eq.level // d) * r for d, r in eq.exponents)
    if s2 % 24:
        raise SecondCongruenceError(s2 % 24)
    r_sum = sum(r for _, r in eq.exponents)
    if r_sum % 2:
        raise HalfIntegralWeightError(r_sum)
    num = 1
    den = 1
    for d, r in eq.exponents:
        if r > 0:
            num *= d ** r
        else:
            den *= d ** (-r)
    return ModFormMeta(weight=r_sum // 2, level=eq.level,
                       char_s_num=num, char_s_den=den)


def raise_level(eq: EtaQuotient) -> EtaQuotient:
    """Smallest multiple N*t (t | 24, ascending) whose second congruence holds.

    The first congruence does not involve N, so only the second is rechecked.
    Raises ValueError if no divisor of 24 works.
    """
    for t in (1, 2, 3, 4, 6, 8, 12, 24):
        level = eq.level * t
        if sum((level // d) * r for d, r in eq.exponents) % 24 == 0:
            return EtaQuotient(level, eq.exponents)
    raise ValueError("no level multiple N*t with t | 24 satisfies the congruence")


def sturm_bound(weight: int, level: int) -> int:
    """floor( (weight/12) * level * prod_{p | level} (1 + 1/p) ), exactly.

    Evaluated with integer numerator/denominator arithmetic; no floats.
    """
    if weight < 0 or level < 1:
        raise ValueError("need weight >= 0 and level >= 1")
    num = weight * level
    den = 12
    n = level
    p = 2
    while p * p <= n:
        if n % p == 0:
            num *= p + 1
            den *= p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        num *= n + 1
        den *= n
    return num // den


def kronecker_symbol(a: int, n: int) -> int:
    """The Kronecker symbol (a|n), extending Jacobi/Legendre to all integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a, n = n % a, a
    return sign if n == 1 else 0


def character_value(meta: ModFormMeta, d: int) -> int:
    """kronecker((-1)^weight * s, d) with s the quotient's exact delta product.

    s and s * den^2 = num * den lie in the same square class, so the symbol is
    evaluated on the integer num * den (zero exactly when d shares a factor
    with the level, as it should be).
    """
    if d == 0:
        raise ValueError("character argument must be nonzero")
    s = meta.char_s_num * meta.char_s_den
    if meta.weight % 2:
        s = -s
    return kronecker_symbol(s, d)


def squarefree_core(meta: ModFormMeta) -> int:
    """The squarefree integer with the same symbol as (-1)^weight * s."""
    s = meta.char_s_num * meta.char_s_den
    core = -1 if (meta.weight % 2 and s > 0) or (meta.weight % 2 == 0 and s < 0) else 1
    s = abs(s)
    p = 2
    while p * p <= s:
        exp = 0
        while s % p == 0:
            s //= p
            exp += 1
        if exp % 2:
            core *= p
        p += 1
    return core * s


# ---------------------------------------------------------------------------
# Expansions and operators
# ---------------------------------------------------------------------------

def eta_expansion(eq: EtaQuotient, precision: int, ring: Ring = ZZ,
                  cache_dir: Optional[str] = None) -> tuple:
    """(lead24, series): the q-expansion split as q^(lead24/24) * series.

    ``series`` is the plain Pochhammer product prod (q^d;q^d)^r to the given
    precision; lead24 may be negative.  Two quotients are equal iff their
    lead24 agree and their series agree.
    """
    spec = ProductSpec(tuple((d, d, r) for d, r in eq.exponents))
    return eq.lead24, expand_product(spec, precision, ring, cache_dir=cache_dir)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def hecke_tp(f: TruncSeries, p: int, weight: int, chi_p: int) -> TruncSeries:
    """Apply T_p: coefficient n of the result is a(pn) + chi_p * p^(weight-1) * a(n/p).

    a(n/p) counts as 0 when p does not divide n (and a(0) when n = 0).  Output
    precision is floor(P/p).  Over Z/p with weight > 1 the second term is
    identically zero and is skipped.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if weight < 1:
        raise ValueError("weight must be >= 1")
    if chi_p not in (-1, 0, 1):
        raise ValueError("chi_p must be -1, 0 or 1")
    n_out = f.precision // p
    m = f.ring.modulus
    fast = m == p and weight > 1
    full = f._full_block(f.precision)
    if m is None:
        data = [full[p * n] for n in range(n_out)]
        if not fast and chi_p:
            c2 = chi_p * p ** (weight - 1)
            for t in range(0, (n_out - 1) // p + 1):
                data[p * t] += c2 * full[t]
    else:
        data = full[::p][:n_out].copy()
        if not fast and chi_p:
            c2 = (chi_p * pow(p, weight - 1, m)) % m
            t_max = (n_out - 1) // p + 1 if n_out else 0
            idx = np.arange(t_max)
            data[p * idx] = (data[p * idx] + c2 * full[idx]) % m
    return TruncSeries(data, f.ring, valuation=0, precision=n_out)


def sturm_compare(f: TruncSeries, g: TruncSeries, weight: int, level: int,
                  p: int) -> VerificationReport:
    """Check f = g mod p coefficientwise through the Sturm bound (inclusive).

    Purely numerical: the hypothesis that both inputs are weight/level forms
    is the caller's responsibility and is recorded as an assumption.
    """
    t0 = time.perf_counter()
    bound = sturm_bound(weight, level)
    if f.precision <= bound or g.precision <= bound:
        raise InsufficientPrecisionError(
            f"need precision > {bound}, have {f.precision} and {g.precision}")
    for s in (f, g):
        m = s.ring.modulus
        if m is not None and m % p != 0:
            raise RingMismatchError(f"series mod {m} cannot be compared mod {p}")
    counterexamples = []
    for n in range(bound + 1):
        d = (f.coefficient(n) - g.coefficient(n)) % p
        if d:
            counterexamples.append((n, d))
            break
    status = Status.FAIL if counterexamples else Status.PASS
    return VerificationReport(
        label=f"sturm-compare weight={weight} level={level} mod {p}",
        status=status,
        checked_through=bound,
        counterexamples=counterexamples,
        assumptions=[
            f"both inputs are modular forms of weight {weight} on level {level}"],
        duration_ms=(time.perf_counter() - t0) * 1000.0,
        details={"sturm_bound": bound, "prime": p},
    )
