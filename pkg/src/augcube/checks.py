from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "pass": bool(self.passed)}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Certificate:
    """Named list of pass/fail checks plus free-form evidence."""

    name: str
    checks: list[Check] = field(default_factory=list)
    evidence: dict = field(default_factory=dict)

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "evidence": self.evidence,
        }
