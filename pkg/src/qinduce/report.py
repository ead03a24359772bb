"""Check results shared by the validators, axiom suites and induction checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

PASS = "PASS"
FAIL = "FAIL"
WARN = "WARN"
INFO = "INFO"


@dataclass(frozen=True)
class CheckResult:
    suite: str
    check: str
    monomial: str
    status: str
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    note: Optional[str] = None

    def record(self) -> dict:
        d = {"suite": self.suite, "check": self.check, "monomial": self.monomial, "status": self.status}
        if self.lhs is not None or self.rhs is not None:
            d["witness"] = {"lhs": self.lhs, "rhs": self.rhs}
        if self.note:
            d["note"] = self.note
        return d

    def line(self) -> str:
        s = f"[{self.status}] {self.suite}/{self.check} @ {self.monomial}"
        if self.note:
            s += f"  ({self.note})"
        if self.status == FAIL and (self.lhs is not None or self.rhs is not None):
            s += f"\n    lhs: {self.lhs}\n    rhs: {self.rhs}"
        return s


@dataclass
class AxiomReport:
    suite: str
    results: List[CheckResult] = field(default_factory=list)

    def add(self, check, monomial, ok, lhs=None, rhs=None, note=None, status=None) -> bool:
        if status is None:
            status = PASS if ok else FAIL
        keep = status != PASS
        self.results.append(
            CheckResult(
                self.suite,
                check,
                str(monomial),
                status,
                str(lhs) if keep and lhs is not None else None,
                str(rhs) if keep and rhs is not None else None,
                note,
            )
        )
        return status != FAIL

    def compare(self, check, monomial, lhs, rhs, note=None) -> bool:
        return self.add(check, monomial, lhs == rhs, lhs, rhs, note)

    def extend(self, other: "AxiomReport") -> "AxiomReport":
        self.results.extend(other.results)
        return self

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if r.status == FAIL]

    @property
    def warnings(self) -> List[CheckResult]:
        return [r for r in self.results if r.status == WARN]

    @property
    def ok(self) -> bool:
        return not self.failures

    def first_failure(self) -> Optional[CheckResult]:
        f = self.failures
        return f[0] if f else None

    def summary(self) -> str:
        n = len(self.results)
        return (
            f"{self.suite}: {n} checks, {n - len(self.failures) - len(self.warnings)} pass, "
            f"{len(self.warnings)} warn, {len(self.failures)} fail"
        )

    def text(self, verbose: bool = False) -> str:
        lines = [self.summary()]
        for r in self.results:
            if verbose or r.status != PASS:
                lines.append("  " + r.line())
        return "\n".join(lines)

    def records(self) -> Iterable[str]:
        for r in self.results:
            yield json.dumps(r.record(), sort_keys=False)

    def __bool__(self):
        return self.ok


def merge(suite: str, reports: Iterable[AxiomReport]) -> AxiomReport:
    out = AxiomReport(suite)
    for r in reports:
        out.extend(r)
    return out
