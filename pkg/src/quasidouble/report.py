"""Verification reports: per-axiom pass/fail with a concrete witness."""

from __future__ import annotations

from dataclasses import dataclass, field as dfield


@dataclass
class Check:
    label: str
    passed: bool
    witness: tuple | None = None

    def to_dict(self):
        d = {"label": self.label, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        return d


@dataclass
class ValidationReport:
    stage: str
    checks: list = dfield(default_factory=list)

    def add(self, label: str, passed: bool, witness=None):
        self.checks.append(Check(label, bool(passed), witness))
        return passed

    def extend(self, other: "ValidationReport", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.label, c.passed, c.witness))

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def require(self, label: str):
        bad = self.failures()
        if bad:
            first = bad[0]
            raise VerificationFailed(
                f"{label}: {first.label} failed"
                + (f" at witness {first.witness}" if first.witness is not None else ""),
                report=self,
            )

    def to_dict(self):
        return {
            "stage": self.stage,
            "passed": self.all_passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def __str__(self):
        lines = [f"[{self.stage}] {'PASS' if self.all_passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            w = "" if c.witness is None else f"  witness={c.witness}"
            lines.append(f"  {mark} {c.label}{w}")
        return "\n".join(lines)


class VerificationFailed(Exception):
    def __init__(self, message, report: ValidationReport | None = None):
        super().__init__(message)
        self.report = report


def first_diff(a, b):
    """Witness index tuple where two TensorElements differ, or None if equal."""
    if a == b:
        return None
    keys = sorted(set(a.entries) | set(b.entries))
    for k in keys:
        if a.entries.get(k) != b.entries.get(k):
            return k
    return ()
