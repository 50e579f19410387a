from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .poly import IntPolynomial, RationalFunction


def jsonable(x: Any) -> Any:
    """Convert report payloads to plain JSON types with a fixed key order."""
    if isinstance(x, (IntPolynomial, RationalFunction)):
        return x.to_json()
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(jsonable(v) for v in x)
    return x


@dataclass
class VerificationReport:
    identity: str
    hypotheses_ok: bool
    lhs: Any
    rhs: Any
    passed: bool
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "hypotheses_ok": self.hypotheses_ok,
            "lhs": jsonable(self.lhs),
            "rhs": jsonable(self.rhs),
            "pass": self.passed,
            "details": jsonable(self.details),
        }
