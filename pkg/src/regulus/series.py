"""Truncated formal power series in q over Z or Z/m.

A series tracks exactly which coefficients it knows: the block covers
exponents [valuation, precision), terms at or above ``precision`` are
*unknown* (not zero), and every operation propagates the tightest precision
it can honestly claim.  Comparing two series beyond their shared precision
raises instead of silently passing; congruence arguments that hinge on "the
first k coefficients agree" depend on this.

Coefficients are arbitrary-precision Python ints in the exact ring and
canonical int64 residues in [0, m) in the modular rings.  Modular blocks are
numpy arrays and the heavy inner loops run on the backend selected by
REGULUS_BACKEND (see ``backend``).  Series are immutable after construction
and safe to share between threads.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Optional

import numpy as np

from . import _exact, backend
from .errors import (
    InsufficientPrecisionError,
    NotInvertibleError,
    RingMismatchError,
)

#: Largest supported modulus; keeps every product of two residues < 2**62 so
#: the int64 kernels cannot overflow.
MAX_MODULUS = 2**31 - 1


class Ring:
    """Coefficient ring tag: exact integers (modulus None) or integers mod m."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: Optional[int] = None):
        if modulus is not None:
            if modulus < 1:
                raise ValueError(f"modulus must be >= 1, got {modulus}")
            if modulus > MAX_MODULUS:
                raise ValueError(
                    f"modulus {modulus} exceeds the machine-word bound {MAX_MODULUS}")
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, *_):
        raise AttributeError("Ring is immutable")

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("Ring", self.modulus))

    def __repr__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


#: The exact-integer ring.
ZZ = Ring()


def Zmod(m: int) -> Ring:
    """The ring of integers modulo m."""
    return Ring(m)


def _check_same_ring(a: "TruncSeries", b: "TruncSeries", what: str) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"cannot {what} series over {a.ring} and {b.ring}")


class TruncSeries:
    """A truncated power series: known coefficients on [valuation, precision).

    ``TruncSeries(coeffs, ring, valuation)`` stores ``coeffs[i]`` as the
    coefficient of q^(valuation+i).  Leading zeros are trimmed into the
    valuation on construction; trailing zeros are kept (precision is data).
    Passing ``precision`` explicitly pads with known zeros (or truncates).
    """

    __slots__ = ("ring", "valuation", "precision", "_data")

    def __init__(self, coeffs: Iterable[int], ring: Ring = ZZ, valuation: int = 0,
                 precision: Optional[int] = None):
        if not isinstance(ring, Ring):
            raise TypeError("ring must be a Ring (ZZ or Zmod(m))")
        if valuation < 0:
            raise ValueError("valuation must be nonnegative")
        m = ring.modulus
        if m is None:
            data = [int(c) for c in coeffs]
        else:
            if isinstance(coeffs, np.ndarray):
                data = coeffs.astype(np.int64, copy=True) % m
            else:
                data = np.asarray(list(coeffs), dtype=np.int64) % m
        if precision is not None:
            want = precision - valuation
            if want < 0:
                raise ValueError("precision below valuation")
            if want <= len(data):
                data = data[:want]
            elif m is None:
                data = data + [0] * (want - len(data))
            else:
                data = np.concatenate([data, np.zeros(want - len(data), np.int64)])
        prec = valuation + len(data)
        # trim leading zeros into the valuation
        lead = 0
        if m is None:
            while lead < len(data) and data[lead] == 0:
                lead += 1
        else:
            nz = np.nonzero(data)[0]
            lead = int(nz[0]) if nz.size else len(data)
        if lead:
            valuation += lead
            data = data[lead:]
        if m is None:
            data = tuple(data)
        else:
            data = np.ascontiguousarray(data)
            data.flags.writeable = False
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "precision", prec)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, *_):
        raise AttributeError("TruncSeries is immutable")

    # ---------------- constructors ----------------

    @classmethod
    def zero(cls, precision: int, ring: Ring = ZZ) -> "TruncSeries":
        return cls((), ring, valuation=0, precision=precision)

    @classmethod
    def one(cls, precision: int, ring: Ring = ZZ) -> "TruncSeries":
        if precision < 1:
            raise ValueError("need precision >= 1 to represent 1")
        return cls((1,), ring, valuation=0, precision=precision)

    @classmethod
    def monomial(cls, coefficient: int, exponent: int, precision: int,
                 ring: Ring = ZZ) -> "TruncSeries":
        if not 0 <= exponent < precision:
            raise ValueError("exponent must lie in [0, precision)")
        return cls((coefficient,), ring, valuation=exponent, precision=precision)

    # ---------------- inspection ----------------

    def coefficient(self, n: int) -> int:
        """Coefficient of q^n.  Raises beyond the tracked precision."""
        if n < 0:
            raise ValueError("negative exponent")
        if n >= self.precision:
            raise InsufficientPrecisionError(
                f"coefficient of q^{n} requested but precision is {self.precision}")
        if n < self.valuation:
            return 0
        return int(self._data[n - self.valuation])

    def coefficients(self, start: int = 0, stop: Optional[int] = None) -> list:
        """Coefficients of q^start .. q^(stop-1) as Python ints."""
        if stop is None:
            stop = self.precision
        if stop > self.precision:
            raise InsufficientPrecisionError(
                f"coefficients through q^{stop - 1} requested but precision is {self.precision}")
        return [self.coefficient(n) for n in range(start, stop)]

    def nonzero_terms(self) -> Iterator[tuple]:
        """Yield (exponent, coefficient) for every stored nonzero term."""
        v = self.valuation
        if self.ring.is_exact:
            for i, c in enumerate(self._data):
                if c:
                    yield (v + i, c)
        else:
            for i in np.nonzero(self._data)[0]:
                yield (v + int(i), int(self._data[i]))

    def is_zero(self, through: Optional[int] = None) -> bool:
        """True if every known coefficient up to ``through`` (inclusive) is zero."""
        if through is None:
            through = self.precision - 1
        if through >= self.precision:
            raise InsufficientPrecisionError(
                f"zero test through q^{through} exceeds precision {self.precision}")
        if through < self.valuation:
            return True
        block = self._data[: through + 1 - self.valuation]
        if self.ring.is_exact:
            return not any(block)
        return not block.any()

    def _full_block(self, n_out: int):
        """Dense coefficients of q^0..q^(n_out-1); requires n_out <= precision."""
        v = self.valuation
        if self.ring.is_exact:
            out = [0] * n_out
            for i, c in enumerate(self._data[: max(0, n_out - v)]):
                out[v + i] = c
            return out
        out = np.zeros(n_out, np.int64)
        seg = self._data[: max(0, n_out - v)]
        out[v:v + len(seg)] = seg
        return out

    # ---------------- comparison ----------------

    def first_difference(self, other: "TruncSeries",
                         through: Optional[int] = None) -> Optional[int]:
        """Smallest exponent where the series differ, or None if they agree.

        Compares through min(P1, P2) - 1 by default; asking for more raises.
        """
        _check_same_ring(self, other, "compare")
        shared = min(self.precision, other.precision)
        if through is None:
            through = shared - 1
        if through >= shared:
            raise InsufficientPrecisionError(
                f"comparison through q^{through} exceeds shared precision {shared}")
        for n in range(through + 1):
            if self.coefficient(n) != other.coefficient(n):
                return n
        return None

    def agrees_with(self, other: "TruncSeries", through: Optional[int] = None) -> bool:
        return self.first_difference(other, through) is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if (self.ring != other.ring or self.valuation != other.valuation
                or self.precision != other.precision):
            return False
        if self.ring.is_exact:
            return self._data == other._data
        return np.array_equal(self._data, other._data)

    def __hash__(self) -> int:
        if self.ring.is_exact:
            key = self._data
        else:
            key = self._data.tobytes()
        return hash((self.ring, self.valuation, self.precision, key))

    # ---------------- arithmetic ----------------

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        _check_same_ring(self, other, "add")
        prec = min(self.precision, other.precision)
        val = min(self.valuation, other.valuation, prec)
        n = prec - val
        if self.ring.is_exact:
            a = [self.coefficient(k) for k in range(val, prec)]
            b = [other.coefficient(k) for k in range(val, prec)]
            data = [x + y for x, y in zip(a, b)]
        else:
            data = (self._full_block(prec)[val:] + other._full_block(prec)[val:]) % self.ring.modulus
        assert len(data) == n
        return TruncSeries(data, self.ring, valuation=val)

    def __neg__(self) -> "TruncSeries":
        if self.ring.is_exact:
            data = [-c for c in self._data]
        else:
            data = (-np.asarray(self._data)) % self.ring.modulus
        return TruncSeries(data, self.ring, valuation=self.valuation)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def scale(self, c: int) -> "TruncSeries":
        """Multiply every coefficient by the integer c."""
        if self.ring.is_exact:
            data = [c * v for v in self._data]
        else:
            data = (np.asarray(self._data) * (c % self.ring.modulus)) % self.ring.modulus
        return TruncSeries(data, self.ring, valuation=self.valuation)

    def shift(self, j: int) -> "TruncSeries":
        """Multiply by q^j (j >= 0).  The j new low-order zeros are known."""
        if j < 0:
            raise ValueError("negative shifts (Laurent tails) are unsupported")
        if j == 0:
            return self
        return TruncSeries(self._data, self.ring, valuation=self.valuation + j)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        _check_same_ring(self, other, "multiply")
        prec = min(self.precision + other.valuation, other.precision + self.valuation)
        n_out = min(len(self._data), len(other._data))
        if n_out == 0:
            return TruncSeries.zero(max(prec, 0), self.ring)
        val = self.valuation + other.valuation
        if self.ring.is_exact:
            data = _exact.mul(list(self._data), list(other._data), n_out)
        else:
            data = backend.kernels().mul_mod(self._data, other._data,
                                             self.ring.modulus, n_out)
        return TruncSeries(data, self.ring, valuation=val)

    def __pow__(self, e: int) -> "TruncSeries":
        if e < 0:
            return self.invert() ** (-e)
        if e == 0:
            return TruncSeries.one(self.precision, self.ring)
        acc = None
        base = self
        while e:
            if e & 1:
                acc = base if acc is None else acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    def _unit_lead(self) -> int:
        """Leading coefficient as a unit, or raise NotInvertibleError."""
        if len(self._data) == 0:
            raise NotInvertibleError("the zero series has no inverse")
        if self.valuation != 0:
            raise NotInvertibleError("constant term is 0; not a unit")
        c0 = int(self._data[0])
        m = self.ring.modulus
        if m is None:
            if c0 not in (1, -1):
                raise NotInvertibleError(f"constant term {c0} is not a unit over Z")
            return c0
        if math.gcd(c0, m) != 1:
            raise NotInvertibleError(f"constant term {c0} is not a unit mod {m}")
        return pow(c0, -1, m)

    def __truediv__(self, other: "TruncSeries") -> "TruncSeries":
        """Quotient; the divisor needs a unit constant term.

        Bit-exact with ``self * other.invert()`` but computed by the direct
        recurrence, which is much cheaper when the divisor is sparse.
        """
        _check_same_ring(self, other, "divide")
        lead = other._unit_lead()
        n_out = min(len(self._data), len(other._data))
        prec = min(self.precision, other.precision + self.valuation)
        if len(self._data) == 0:
            return TruncSeries.zero(prec, self.ring)
        val = self.valuation
        if self.ring.is_exact:
            d_idx = [i for i, c in enumerate(other._data) if i and c]
            d_val = [other._data[i] for i in d_idx]
            data = _exact.divide(list(self._data), d_idx, d_val, lead, n_out)
        else:
            idx = np.nonzero(other._data)[0]
            idx = idx[idx > 0]
            data = backend.kernels().divide_mod(self._data, idx, other._data[idx],
                                                lead, self.ring.modulus, n_out)
        return TruncSeries(data, self.ring, valuation=val)

    def invert(self) -> "TruncSeries":
        """Multiplicative inverse to the same precision."""
        return TruncSeries.one(self.precision, self.ring) / self

    # ---------------- structural operations ----------------

    def substitute_power(self, k: int) -> "TruncSeries":
        """Substitute q -> q^k.  Precision becomes k*(P-1)+1: the gaps are known zeros."""
        if k < 1:
            raise ValueError("substitution power must be >= 1")
        if k == 1:
            return self
        prec = k * (self.precision - 1) + 1 if self.precision >= 1 else 0
        n = len(self._data)
        if n == 0:
            return TruncSeries.zero(prec, self.ring)
        if self.ring.is_exact:
            data = [0] * (k * (n - 1) + 1)
            for i, c in enumerate(self._data):
                data[k * i] = c
        else:
            data = np.zeros(k * (n - 1) + 1, np.int64)
            data[::k] = self._data
        return TruncSeries(data, self.ring, valuation=k * self.valuation, precision=prec)

    def extract_progression(self, step: int, offset: int) -> "TruncSeries":
        """The series sum_n a(step*n + offset) q^n.  Requires 0 <= offset < step."""
        if step < 1:
            raise ValueError("step must be positive")
        if not 0 <= offset < step:
            raise ValueError(f"offset must satisfy 0 <= offset < step, got {offset} >= {step}")
        prec = max(0, -(-(self.precision - offset) // step))  # ceil((P-B)/A), clamped
        if prec == 0:
            return TruncSeries.zero(0, self.ring)
        full = self._full_block(self.precision)
        if self.ring.is_exact:
            data = full[offset::step][:prec]
        else:
            data = full[offset::step][:prec].copy()
        return TruncSeries(data, self.ring, valuation=0, precision=prec)

    def reduce_mod(self, m: int) -> "TruncSeries":
        """Reduce coefficients into Z/m.  From Z/m' this requires m | m'."""
        if m < 1:
            raise ValueError(f"modulus must be >= 1, got {m}")
        cur = self.ring.modulus
        if cur is not None and cur % m != 0:
            raise RingMismatchError(
                f"cannot reduce mod {m}: coefficients only known mod {cur}")
        if self.ring.is_exact:
            data = [c % m for c in self._data]
        else:
            data = np.asarray(self._data) % m
        return TruncSeries(data, Zmod(m), valuation=self.valuation,
                           precision=self.precision)

    # ---------------- display ----------------

    def __repr__(self) -> str:
        terms = []
        for n, c in self.nonzero_terms():
            if len(terms) == 6:
                terms.append("...")
                break
            if n == 0:
                terms.append(f"{c}")
            elif n == 1:
                terms.append(f"{c}*q" if c != 1 else "q")
            else:
                terms.append(f"{c}*q^{n}" if c != 1 else f"q^{n}")
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O(q^{self.precision}) over {self.ring}>"
