"""Structured pass/fail records shared by the verifier suites and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional


@dataclass
class CaseRecord:
    inputs: Dict[str, str]
    expected: str
    actual: str
    passed: bool
    witness: Optional[str] = None

    def to_dict(self) -> dict:
        d = {
            "inputs": dict(sorted(self.inputs.items())),
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class VerificationReport:
    suite: str
    seed: int
    cases: List[CaseRecord] = field(default_factory=list)
    config: Dict[str, str] = field(default_factory=dict)

    def add(
        self,
        inputs: Dict[str, str],
        expected: str,
        actual: str,
        witness: Optional[str] = None,
    ) -> CaseRecord:
        rec = CaseRecord(inputs, expected, actual, expected == actual, witness)
        self.cases.append(rec)
        return rec

    def add_case(self, rec: CaseRecord) -> CaseRecord:
        self.cases.append(rec)
        return rec

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def summary(self) -> dict:
        ok = sum(1 for c in self.cases if c.passed)
        return {"total": len(self.cases), "passed": ok, "failed": len(self.cases) - ok}

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "config": dict(sorted(self.config.items())),
            "cases": [c.to_dict() for c in self.cases],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)
