"""Verdict records shared by the criteria, oracle, compound, and pairwise modules.

A verdict is pure data: which order was tested, in which direction, what came
out, and where it broke if it broke. Keeping the type here means the kernel
criteria and the brute-force oracle share no computational code, only the
record they both emit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Mapping

ORDERS = ("lr", "lc", "st", "hr")
DIRECTIONS = ("up", "down")
STATUSES = ("holds", "fails", "inconclusive")
METHODS = (
    "kernel-criterion",
    "superlevel",
    "concave-endpoint",
    "unimodal-endpoint",
    "oracle",
    "pairwise-kernel",
    "compound-kernel",
    "path-kernel",
    "closed-form",
)


@dataclass(frozen=True)
class Witness:
    """Location of the first (or worst, for survival comparisons) violation.

    x: offending grid point (left point of the offending pair/triple).
    nu: scanned parameter value at the violation; None for two-law checks.
    margin: signed slack at the violation (negative beyond the tolerance).
    kind: which quantity was violated (first-difference, second-difference,
          tail-mean, survival, ratio-step, endpoint-score, shape-hypothesis).
    """

    x: float
    margin: float
    nu: float | None = None
    kind: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"x": self.x, "nu": self.nu, "margin": self.margin, "kind": self.kind}


@dataclass(frozen=True)
class OrderVerdict:
    """Outcome of one order check.

    direction "up" means P_nu1 <= P_nu2 for nu1 <= nu2 (or "first argument
    below second" for two-law checks); "down" is the reverse. margin is the
    worst signed slack observed over every scanned test point, so
    status == "holds" iff margin >= -tol and status == "fails" comes with a
    witness whose margin is < -tol. Inconclusive verdicts (hypothesis of a
    sufficient criterion unmet) carry a note instead of a witness margin claim.
    """

    order: str
    direction: str
    status: str
    method: str
    tolerances: Mapping[str, float]
    witness: Witness | None = None
    margin: float | None = None
    claim: str = ""
    note: str = ""

    def __post_init__(self) -> None:
        if self.order not in ORDERS:
            raise ValueError(f"unknown order {self.order!r}")
        if self.direction not in DIRECTIONS:
            raise ValueError(f"unknown direction {self.direction!r}")
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.status == "fails" and self.witness is None:
            raise ValueError("failing verdict requires a witness")

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def to_dict(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "direction": self.direction,
            "status": self.status,
            "method": self.method,
            "claim": self.claim,
            "margin": self.margin,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "tolerances": dict(self.tolerances),
            "note": self.note,
        }


def aggregate_margin(margins) -> float:
    """Worst slack over an iterable of per-point margins (inf when empty)."""
    worst = math.inf
    for m in margins:
        if m < worst:
            worst = m
    return worst


@dataclass(frozen=True)
class ScanOutcome:
    """Internal carrier for one monotone/shape scan: pass flag + evidence."""

    ok: bool
    margin: float
    witness: Witness | None = None
    note: str = ""
    extras: Mapping[str, Any] = field(default_factory=dict)
