"""Machine-readable verification outcomes."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INSUFFICIENT = "insufficient"


@dataclass
class VerificationReport:
    """Outcome of one check: what was asserted, how far, and what broke.

    Invariants: FAIL carries at least one counterexample, PASS carries none.
    ``tier`` is "theorem" for deterministic checks and "conjecture" for
    checks whose failure is reportable but not a defect.
    """

    label: str
    status: Status
    checked_through: int
    counterexamples: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)
    duration_ms: float = 0.0
    tier: str = "theorem"
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status == Status.FAIL and not self.counterexamples:
            raise ValueError("FAIL report requires at least one counterexample")
        if self.status == Status.PASS and self.counterexamples:
            raise ValueError("PASS report must not carry counterexamples")

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "status": self.status.value,
            "tier": self.tier,
            "checked_through": self.checked_through,
            "counterexamples": [[int(n), int(v)] for n, v in self.counterexamples],
            "assumptions": list(self.assumptions),
            "duration_ms": round(self.duration_ms, 3),
            "details": self.details,
        }


def write_json_atomic(path: str, obj, indent: Optional[int] = 2) -> None:
    """Serialize to a temp file in the target directory, then rename into place."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, indent=indent, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
