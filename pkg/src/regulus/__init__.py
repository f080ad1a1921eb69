"""regulus: truncated q-series arithmetic and congruence verification.

The package computes exact truncated expansions of Pochhammer products and
eta quotients over Z or Z/m, checks a catalog of congruences and dissection
identities for regular-partition counting functions, and scans for new
zero progressions and self-similarities.
"""

from .backend import active_backend
from .errors import (
    EtaQuotientError,
    EtaTextParseError,
    EvidenceTooThinError,
    FirstCongruenceError,
    HalfIntegralWeightError,
    InsufficientPrecisionError,
    NotInvertibleError,
    ProductSpecParseError,
    RegulusError,
    RingMismatchError,
    SecondCongruenceError,
)
from .etaquot import (
    EtaQuotient,
    ModFormMeta,
    character_value,
    eta_expansion,
    validate_eta_quotient,
    hecke_tp,
    kronecker_symbol,
    parse_eta_quotient,
    raise_level,
    squarefree_core,
    sturm_bound,
    sturm_compare,
)
from .products import (
    ProductSpec,
    euler_factor,
    expand_product,
    parse_product_spec,
    pentagonal_series,
)
from .regular import (
    ClaimFamily,
    CongruenceClaim,
    b_ell_oracle,
    b_ell_series,
    find_counterexample,
    make_claims,
    suite_checks,
    verify_b3_similarity,
    verify_claim,
    verify_dissection,
    verify_divisibility_strengthening,
    verify_eta_identity,
    verify_eta_metadata,
    verify_extension_fails,
    verify_five_dissection,
    verify_hecke_evenness,
    verify_mod3_unit_quotient,
    verify_self_similarity,
)
from .report import Status, VerificationReport
from .scan import (
    SimilarityCandidate,
    ZeroProgressionHit,
    scan_self_similarity,
    scan_zero_progressions,
)
from .series import MAX_MODULUS, Ring, TruncSeries, Zmod, ZZ

__version__ = "0.1.0"

__all__ = [
    "EtaQuotient", "ModFormMeta", "ProductSpec", "TruncSeries", "Ring",
    "ZZ", "Zmod", "MAX_MODULUS", "Status", "VerificationReport",
    "CongruenceClaim", "ClaimFamily", "SimilarityCandidate",
    "ZeroProgressionHit",
    "active_backend", "b_ell_oracle", "b_ell_series", "character_value",
    "eta_expansion", "euler_factor", "expand_product", "find_counterexample",
    "validate_eta_quotient", "hecke_tp", "kronecker_symbol", "make_claims",
    "parse_eta_quotient", "parse_product_spec", "pentagonal_series",
    "raise_level", "scan_self_similarity", "scan_zero_progressions",
    "squarefree_core", "sturm_bound", "sturm_compare", "suite_checks",
    "verify_b3_similarity", "verify_claim", "verify_dissection",
    "verify_divisibility_strengthening", "verify_eta_identity",
    "verify_eta_metadata", "verify_extension_fails", "verify_five_dissection",
    "verify_hecke_evenness", "verify_mod3_unit_quotient",
    "verify_self_similarity",
    "RegulusError", "RingMismatchError", "InsufficientPrecisionError",
    "NotInvertibleError", "ProductSpecParseError", "EtaTextParseError",
    "EtaQuotientError", "FirstCongruenceError", "SecondCongruenceError",
    "HalfIntegralWeightError", "EvidenceTooThinError",
]
