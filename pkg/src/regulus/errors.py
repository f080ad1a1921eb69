"""Exception types shared across the package."""


class RegulusError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatchError(RegulusError):
    """Two series with different coefficient rings were combined or compared."""


class InsufficientPrecisionError(RegulusError):
    """A coefficient or comparison was requested beyond the tracked precision."""


class NotInvertibleError(RegulusError):
    """Inversion of a series whose constant term is not a unit (or of the zero series)."""


class ProductSpecParseError(RegulusError):
    """Malformed Pochhammer-product text. Carries the byte offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class EtaTextParseError(RegulusError):
    """Malformed eta-quotient text. Carries the byte offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class EtaQuotientError(RegulusError):
    """An eta quotient failed an admissibility requirement."""


class FirstCongruenceError(EtaQuotientError):
    """sum(delta * r_delta) is not divisible by 24."""

    def __init__(self, residue: int):
        super().__init__(f"sum(delta * r_delta) = {residue} mod 24, expected 0")
        self.residue = residue


class SecondCongruenceError(EtaQuotientError):
    """sum((N/delta) * r_delta) is not divisible by 24."""

    def __init__(self, residue: int):
        super().__init__(f"sum((N/delta) * r_delta) = {residue} mod 24, expected 0")
        self.residue = residue


class HalfIntegralWeightError(EtaQuotientError):
    """sum(r_delta) is odd, so the weight would be half-integral (unsupported)."""

    def __init__(self, r_sum: int):
        super().__init__(f"sum(r_delta) = {r_sum} is odd; half-integral weight unsupported")
        self.r_sum = r_sum


class EvidenceTooThinError(RegulusError):
    """A scan was requested with too little data to meet the evidence threshold."""
