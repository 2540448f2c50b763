"""Verdict records shared by the theorem checkers and the sweep runner."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

OK = "OK"
HYPOTHESIS_FAIL = "HYPOTHESIS_FAIL"
COUNTEREXAMPLE = "COUNTEREXAMPLE"
ERROR = "ERROR"


def fmt_rational(x) -> str:
    """Render exactly, "p/q" or a bare integer."""
    return str(Fraction(x))


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


@dataclass(frozen=True)
class VerificationRecord:
    """One graph's verdict for one check, serializable to a report line."""

    graph: str
    check: str
    params: dict
    verdict: str
    payload: dict = field(default_factory=dict)

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "graph": self.graph,
                "check": self.check,
                "params": self.params,
                "verdict": self.verdict,
                "payload": self.payload,
            },
            sort_keys=True,
            separators=(",", ":"),
        )
