"""Verification reports shared by the library and the command line."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


class Timer:
    def __init__(self):
        self.t0 = time.perf_counter()

    def ms(self) -> float:
        return round((time.perf_counter() - self.t0) * 1000.0, 3)


@dataclass
class Report:
    suite: str
    verdict: str = PASS
    params: Dict[str, Any] = field(default_factory=dict)
    counterexamples: List[Any] = field(default_factory=list)
    coverage: Dict[str, float] = field(default_factory=dict)
    timings_ms: Dict[str, float] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)
    failures: int = 0
    inconclusive: bool = False
    coverage_floor: float = 0.0

    def finish(self) -> "Report":
        """Settle the verdict from failures, the coverage floor and flags."""
        low = {k: v for k, v in self.coverage.items() if v < self.coverage_floor}
        if self.failures or self.counterexamples:
            self.verdict = FAIL
        elif low:
            self.verdict = FAIL
            self.counterexamples.append({"coverage_below_floor": low, "floor": self.coverage_floor})
        elif self.inconclusive:
            self.verdict = INCONCLUSIVE
        else:
            self.verdict = PASS
        if self.verdict == FAIL and not self.counterexamples:
            raise AssertionError("a failing report must carry a counterexample")
        return self

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        self.counterexamples.extend(other.counterexamples)
        self.failures += other.failures
        self.inconclusive = self.inconclusive or other.inconclusive
        for k, v in other.coverage.items():
            self.coverage[prefix + k] = v
        for k, v in other.timings_ms.items():
            self.timings_ms[prefix + k] = v
        if other.details:
            self.details[prefix.rstrip(".:") or other.suite] = other.details
        if other.verdict == FAIL and not other.counterexamples:
            self.failures += 1
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "verdict": self.verdict,
            "params": self.params,
            "counterexamples": self.counterexamples,
            "coverage": self.coverage,
            "timings_ms": self.timings_ms,
            "details": self.details,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), default=str, **kw)
