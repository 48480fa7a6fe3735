"""Verification reports: per-witness records with exact values."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional


def _val(x) -> Any:
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    if isinstance(x, (list, tuple)):
        return [_val(v) for v in x]
    if isinstance(x, int):
        return str(x)
    return str(x)


@dataclass
class CheckRecord:
    witness: str
    lhs: Any
    rhs: Any
    passed: bool

    def to_dict(self) -> dict:
        return {"witness": self.witness, "lhs": _val(self.lhs), "rhs": _val(self.rhs), "pass": self.passed}

    @classmethod
    def from_dict(cls, d: dict) -> "CheckRecord":
        return cls(d["witness"], d["lhs"], d["rhs"], d["pass"])


@dataclass
class VerificationReport:
    suite: str
    instance: Dict[str, Any]
    records: List[CheckRecord] = field(default_factory=list)
    notes: Dict[str, Any] = field(default_factory=dict)
    wall_time: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def add(self, witness, lhs, rhs, passed=None):
        if passed is None:
            passed = lhs == rhs
        self.records.append(CheckRecord(str(witness), lhs, rhs, bool(passed)))

    def extend(self, other: "VerificationReport", prefix: str = ""):
        for r in other.records:
            self.records.append(CheckRecord(prefix + r.witness, r.lhs, r.rhs, r.passed))

    def first_failure(self) -> Optional[CheckRecord]:
        return next((r for r in self.records if not r.passed), None)

    def payload(self) -> dict:
        """Deterministic content, without timing."""
        return {"suite": self.suite, "instance": self.instance,
                "records": [r.to_dict() for r in self.records],
                "notes": self.notes, "pass": self.passed}

    def to_json(self, include_time: bool = False) -> str:
        d = self.payload()
        if include_time and self.wall_time is not None:
            d["wall_time"] = self.wall_time
        return json.dumps(d, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        d = json.loads(text)
        rep = cls(d["suite"], d["instance"], [CheckRecord.from_dict(r) for r in d["records"]],
                  d.get("notes", {}), d.get("wall_time"))
        return rep

    def to_text(self, max_rows: int = 40) -> str:
        lines = [f"suite: {self.suite}",
                 "instance: " + ", ".join(f"{k}={v}" for k, v in sorted(self.instance.items()))]
        for k, v in sorted(self.notes.items()):
            lines.append(f"{k}: {v}")
        rows = [(r.witness, json.dumps(_val(r.lhs)), json.dumps(_val(r.rhs)), "ok" if r.passed else "FAIL")
                for r in self.records]
        shown = rows[:max_rows]
        fail = self.first_failure()
        if fail is not None and fail.witness not in {r[0] for r in shown}:
            shown.append((fail.witness, json.dumps(_val(fail.lhs)), json.dumps(_val(fail.rhs)), "FAIL"))
        if shown:
            widths = [min(48, max(len(r[i]) for r in shown + [("witness", "lhs", "rhs", "")])) for i in range(4)]
            head = ("witness", "lhs", "rhs", "")
            lines.append("  ".join(h.ljust(w) for h, w in zip(head, widths)))
            for r in shown:
                lines.append("  ".join(c[:48].ljust(w) for c, w in zip(r, widths)))
        if len(rows) > len(shown):
            lines.append(f"... {len(rows) - len(shown)} more records")
        lines.append(f"records: {len(rows)}  result: {'PASS' if self.passed else 'FAIL'}")
        if fail is not None:
            lines.append(f"first discrepancy at {fail.witness}")
        return "\n".join(lines)
