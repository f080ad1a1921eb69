"""Command-line front end.

Subcommands:

    expand   expand a Pochhammer product to coefficients
    verify   run a verification suite (or a JSON claim file) and emit a report
    scan     search for zero progressions / self-similarities, streaming JSONL
    eta      inspect an eta quotient: admissibility, weight/level, expansion

Exit codes: 0 success; 1 internal error or a deterministic check failing;
2 bad arguments, parse errors or insufficient precision; 3 only
conjecture-tier checks failing.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from . import backend
from .errors import (
    EtaQuotientError,
    EtaTextParseError,
    InsufficientPrecisionError,
    ProductSpecParseError,
    RegulusError,
)
from .etaquot import eta_expansion, validate_eta_quotient, parse_eta_quotient, squarefree_core
from .products import expand_product, parse_product_spec
from .regular import SUITES, CongruenceClaim, suite_checks, verify_claim
from .report import Status, VerificationReport, write_json_atomic
from .scan import scan_self_similarity, scan_zero_progressions
from .series import Zmod, ZZ

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_CONJECTURE = 3

CACHE_ENV_VAR = "REGULUS_CACHE_DIR"


def _resolve_cache_dir(flag_value: Optional[str]) -> Optional[str]:
    if flag_value:
        return flag_value
    return os.environ.get(CACHE_ENV_VAR) or None


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------

def _cmd_expand(args) -> int:
    try:
        spec = parse_product_spec(args.spec)
    except ProductSpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    ring = Zmod(args.mod) if args.mod else ZZ
    series = expand_product(spec, args.n, ring,
                            cache_dir=_resolve_cache_dir(args.cache_dir))
    coeffs = series.coefficients()
    if args.json:
        payload = json.dumps({"spec": spec.text(), "ring": str(ring),
                              "coefficients": [str(c) for c in coeffs]},
                             indent=2, sort_keys=True)
        text = payload
    else:
        text = "\n".join(str(c) for c in coeffs)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _run_check(pair) -> VerificationReport:
    label, thunk = pair
    try:
        return thunk()
    except InsufficientPrecisionError as exc:
        return VerificationReport(label=label, status=Status.INSUFFICIENT,
                                  checked_through=-1, assumptions=[str(exc)])


def _cmd_verify(args) -> int:
    cache_dir = _resolve_cache_dir(args.cache_dir)
    if args.claims:
        try:
            with open(args.claims, "r", encoding="utf-8") as fh:
                docs = json.load(fh)
            claims = [CongruenceClaim.from_json_dict(d) for d in docs]
        except (OSError, ValueError, KeyError) as exc:
            print(f"error: cannot read claim file: {exc}", file=sys.stderr)
            return EXIT_USAGE
        checks = [(c.label, (lambda cc=c: verify_claim(cc, args.n, cache_dir)))
                  for c in claims]
        suite_name = f"claims:{os.path.basename(args.claims)}"
    else:
        try:
            checks = suite_checks(args.suite, args.n, cache_dir)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        suite_name = args.suite

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            reports = list(pool.map(_run_check, checks))
    else:
        reports = [_run_check(pair) for pair in checks]

    for rep in reports:
        line = f"{rep.status.value.upper():12s} {rep.label}"
        if rep.status == Status.FAIL and rep.counterexamples:
            n, v = rep.counterexamples[0]
            line += f"  [first failure at n={n}, value={v}]"
        print(line, file=sys.stderr)

    failed_theorems = [r for r in reports
                       if r.status == Status.FAIL and r.tier == "theorem"]
    failed_conjectures = [r for r in reports
                          if r.status == Status.FAIL and r.tier == "conjecture"]
    insufficient = [r for r in reports if r.status == Status.INSUFFICIENT]
    if insufficient:
        code = EXIT_USAGE
    elif failed_theorems:
        code = EXIT_INTERNAL
    elif failed_conjectures:
        code = EXIT_CONJECTURE
    else:
        code = EXIT_OK

    document = {
        "suite": suite_name,
        "n": args.n,
        "backend": backend.active_backend(),
        "checks": [r.to_json_dict() for r in reports],
        "summary": {
            "total": len(reports),
            "passed": sum(r.status == Status.PASS for r in reports),
            "failed": len(failed_theorems) + len(failed_conjectures),
            "insufficient": len(insufficient),
            "conjecture_failures": len(failed_conjectures),
            "exit_code": code,
        },
    }
    if args.out:
        write_json_atomic(args.out, document)
    else:
        print(json.dumps(document, indent=2, sort_keys=True))
    return code


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def _cmd_scan(args) -> int:
    if args.ell < 2 or args.mod < 2 or args.amax < 1 or args.n < 1:
        print("error: need --ell >= 2, --mod >= 2, --amax >= 1, --n >= 1",
              file=sys.stderr)
        return EXIT_USAGE
    cache_dir = _resolve_cache_dir(args.cache_dir)
    sink = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        try:
            if args.similar:
                candidates, summary = scan_self_similarity(
                    args.ell, args.amax, args.kmax, args.mod, args.n,
                    j_max=args.jmax, min_evidence=args.min_evidence,
                    cache_dir=cache_dir)
                rows = [c.to_json_dict() for c in candidates]
            else:
                hits, summary = scan_zero_progressions(
                    args.ell, args.amax, args.mod, args.n,
                    min_evidence=args.min_evidence,
                    exclude_zero_residue=args.with_exceptions,
                    cache_dir=cache_dir)
                rows = [h.to_json_dict() for h in hits]
        except (ValueError, RegulusError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        for row in rows:
            sink.write(json.dumps(row, sort_keys=True) + "\n")
            sink.flush()
        sink.write(json.dumps(summary.to_json_dict(), sort_keys=True) + "\n")
    finally:
        if args.out:
            sink.close()
    return EXIT_OK


# ---------------------------------------------------------------------------
# eta
# ---------------------------------------------------------------------------

def _cmd_eta(args) -> int:
    try:
        eq = parse_eta_quotient(args.quotient)
    except EtaTextParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = {"quotient": eq.text(), "lead24": eq.lead24}
    try:
        meta = validate_eta_quotient(eq)
        doc.update({"admissible": True, "weight": meta.weight,
                    "level": meta.level,
                    "character_seed": [meta.char_s_num, meta.char_s_den],
                    "character_core": squarefree_core(meta)})
    except EtaQuotientError as exc:
        doc.update({"admissible": False, "reason": str(exc)})
    if args.n:
        ring = Zmod(args.mod) if args.mod else ZZ
        lead24, f = eta_expansion(eq, args.n, ring,
                                  cache_dir=_resolve_cache_dir(args.cache_dir))
        doc["series"] = {"ring": str(ring), "lead24": lead24,
                         "coefficients": [str(c) for c in f.coefficients()]}
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regulus",
        description="q-series expansion and congruence verification for "
                    "regular partitions")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand a Pochhammer product")
    p_expand.add_argument("spec", help="product text, e.g. '(q;q)^-1 (q^9;q^9)'")
    p_expand.add_argument("--n", type=int, default=32,
                          help="number of coefficients (default 32)")
    p_expand.add_argument("--mod", type=int, default=None,
                          help="reduce coefficients modulo this integer")
    p_expand.add_argument("--json", action="store_true", help="emit JSON")
    p_expand.add_argument("--out", default=None, help="write to a file")
    p_expand.add_argument("--cache-dir", default=None,
                          help=f"series cache directory (or ${CACHE_ENV_VAR})")
    p_expand.set_defaults(func=_cmd_expand)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=SUITES, default="paper-core")
    p_verify.add_argument("--claims", default=None,
                          help="JSON claim file overriding --suite")
    p_verify.add_argument("--n", type=int, default=20000,
                          help="verify arguments A*n+B up to this bound")
    p_verify.add_argument("--out", default=None, help="report JSON path")
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.add_argument("--cache-dir", default=None,
                          help=f"series cache directory (or ${CACHE_ENV_VAR})")
    p_verify.set_defaults(func=_cmd_verify)

    p_scan = sub.add_parser("scan", help="scan for congruence candidates")
    p_scan.add_argument("--ell", type=int, required=True)
    p_scan.add_argument("--mod", type=int, required=True)
    p_scan.add_argument("--amax", type=int, default=8)
    p_scan.add_argument("--n", type=int, default=20000)
    p_scan.add_argument("--similar", action="store_true",
                        help="search self-similarities instead of zero progressions")
    p_scan.add_argument("--kmax", type=int, default=8)
    p_scan.add_argument("--jmax", type=int, default=3)
    p_scan.add_argument("--min-evidence", type=int, default=50)
    p_scan.add_argument("--with-exceptions", action="store_true",
                        help="skip indices n = 0 mod A in zero-progression scans")
    p_scan.add_argument("--out", default=None, help="JSONL output path")
    p_scan.add_argument("--cache-dir", default=None,
                        help=f"series cache directory (or ${CACHE_ENV_VAR})")
    p_scan.set_defaults(func=_cmd_scan)

    p_eta = sub.add_parser("eta", help="inspect an eta quotient")
    p_eta.add_argument("quotient", help="text form, e.g. '27: 9^1 * 1^63'")
    p_eta.add_argument("--n", type=int, default=None,
                       help="also expand this many coefficients")
    p_eta.add_argument("--mod", type=int, default=None)
    p_eta.add_argument("--cache-dir", default=None)
    p_eta.set_defaults(func=_cmd_eta)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RegulusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
