"""Uniform pass/fail report object used by every verification routine."""
from __future__ import annotations

from dataclasses import dataclass, field

_MAX_RECORDED = 25


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    suppressed: int = 0  # violations beyond the recording cap
    details: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.violations and not self.suppressed

    def add(self, message):
        if len(self.violations) < _MAX_RECORDED:
            self.violations.append(message)
        else:
            self.suppressed += 1

    def merge(self, other: "CheckReport"):
        self.checked += other.checked
        for v in other.violations:
            self.add(f"{other.name}: {v}")
        self.suppressed += other.suppressed

    def to_json(self):
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "violations": list(self.violations),
            "suppressed": self.suppressed,
            "details": self.details,
        }

    def __str__(self):
        status = "PASS" if self.ok else "FAIL"
        extra = "" if self.ok else f" ({len(self.violations) + self.suppressed} violations)"
        return f"{status} {self.name} [{self.checked} checks]{extra}"
