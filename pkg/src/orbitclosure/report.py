"""Verification report records and their serializations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class ClaimRecord:
    id: str
    anchor: str
    status: str
    counterexample: object = None
    detail: str = ""

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIPPED):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == FAIL) != (self.counterexample is not None):
            raise ValueError(f"{self.id}: a counterexample must accompany exactly the failures")

    def as_dict(self) -> dict:
        out = {"id": self.id, "anchor": self.anchor, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationReport:
    suite: str
    claims: list[ClaimRecord] = field(default_factory=list)
    seed: int = 0
    primes: tuple[int, ...] = ()
    duration_ms: float | None = None
    notes: list[str] = field(default_factory=list)
    mutations: list[str] = field(default_factory=list)

    def add(self, id, anchor, ok, counterexample=None, detail="", skipped=False):
        if skipped:
            status = SKIPPED
            counterexample = None
        else:
            status = PASS if ok else FAIL
            if not ok and counterexample is None:
                counterexample = {"note": "no witness recorded"}
            if ok:
                counterexample = None
        rec = ClaimRecord(id, anchor, status, counterexample, detail)
        self.claims.append(rec)
        return rec

    def extend(self, other: "VerificationReport"):
        self.claims.extend(other.claims)
        self.notes.extend(n for n in other.notes if n not in self.notes)

    @property
    def totals(self) -> dict:
        t = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for c in self.claims:
            t[c.status] += 1
        t["total"] = len(self.claims)
        return t

    @property
    def passed(self) -> bool:
        return self.totals[FAIL] == 0

    def failures(self) -> list[ClaimRecord]:
        return [c for c in self.claims if c.status == FAIL]

    def by_id(self, claim_id: str) -> ClaimRecord:
        for c in self.claims:
            if c.id == claim_id:
                return c
        raise KeyError(claim_id)

    def as_dict(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "claims": [c.as_dict() for c in sorted(self.claims, key=lambda c: c.id)],
            "totals": self.totals,
            "passed": self.passed,
            "seed": self.seed,
            "primes": list(self.primes),
            "duration_ms": round(self.duration_ms, 1) if timing and self.duration_ms is not None else None,
            "notes": list(self.notes),
        }
        if self.mutations:
            out["mutations"] = list(self.mutations)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.as_dict(timing), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}   seed: {self.seed}   primes: {list(self.primes)}"]
        if self.mutations:
            lines.append("mutations: " + "; ".join(self.mutations))
        for c in sorted(self.claims, key=lambda c: c.id):
            lines.append(f"[{c.status.upper():7}] {c.id}  {c.anchor}")
            if c.detail:
                lines.append(f"          {c.detail}")
            if c.counterexample is not None:
                lines.append(f"          counterexample: {json.dumps(c.counterexample, sort_keys=True)}")
        t = self.totals
        lines.append(f"totals: {t['pass']} pass, {t['fail']} fail, {t['skipped']} skipped of {t['total']}")
        if self.duration_ms is not None:
            lines.append(f"duration: {self.duration_ms / 1000:.2f} s")
        for n in self.notes:
            lines.append("")
            lines.append(n)
        lines.append("OVERALL: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"
