"""Pass/fail bookkeeping for exhaustive identity checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass
class Check:
    axiom: str
    cases: int = 0
    counterexample: dict | None = None

    @property
    def status(self) -> str:
        return "pass" if self.counterexample is None else "fail"

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def case(self, ok: bool, **context: Any) -> bool:
        """Record one case; keep the first failing context."""
        self.cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = context
        return ok

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "status": self.status,
            "counterexample": self.counterexample,
            "cases": self.cases,
        }


@dataclass
class Report:
    subject: str
    checks: list[Check] = field(default_factory=list)

    def check(self, axiom: str) -> Check:
        c = Check(axiom)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, axiom: str) -> Check:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]


def merge(subject: str, reports: Iterable[Report]) -> Report:
    out = Report(subject)
    for r in reports:
        out.extend(r)
    return out
