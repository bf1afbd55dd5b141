"""Pass/fail records shared by every checking routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .exact_linalg import Matrix, Scalar

__all__ = ["Outcome", "Report", "matrices_equal", "cases_equal", "expect", "all_passed", "render"]


def render(value):
    """Turn exact values into JSON-friendly strings, recursively."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, (Fraction, Scalar)):
        return str(value)
    if isinstance(value, Matrix):
        return [[str(x) for x in r] for r in value.to_rows()]
    if isinstance(value, Mapping):
        return {str(k): render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    return str(value)


@dataclass(frozen=True)
class Outcome:
    """One verified statement: a label, a verdict and its exact witness."""

    label: str
    passed: bool
    witness: Mapping = field(default_factory=dict)
    inputs: Mapping = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "verdict": "pass" if self.passed else "fail",
            "inputs": render(self.inputs),
            "witness": render(self.witness),
        }


Report = list


def all_passed(report: Iterable[Outcome]) -> bool:
    return all(o.passed for o in report)


def expect(label: str, passed: bool, inputs: Mapping | None = None, **witness) -> Outcome:
    return Outcome(label, bool(passed), witness, inputs or {})


def matrices_equal(label: str, lhs: Matrix, rhs: Matrix, inputs: Mapping | None = None) -> Outcome:
    """Exact equality with the squared Frobenius norm of the difference as witness."""
    if lhs.shape != rhs.shape:
        return Outcome(label, False, {"shape_lhs": list(lhs.shape), "shape_rhs": list(rhs.shape)}, inputs or {})
    residual = (lhs - rhs).frobenius2()
    return Outcome(label, residual == 0, {"shape": list(lhs.shape), "residual": residual}, inputs or {})


def cases_equal(label: str, cases: Iterable, inputs: Mapping | None = None) -> Outcome:
    """Aggregate many (case, lhs, rhs) matrix equalities into one outcome."""
    count = 0
    failures = []
    residual = Fraction(0)
    for case, lhs, rhs in cases:
        count += 1
        r = (lhs - rhs).frobenius2()
        if r:
            residual += r
            failures.append(case)
    witness = {"cases": count, "failures": len(failures), "residual": residual}
    if failures:
        witness["first_failure"] = failures[0]
    return Outcome(label, not failures and count > 0, witness, inputs or {})


def negated(outcome: Outcome, label: str | None = None) -> Outcome:
    """A negative control passes when the underlying statement fails."""
    return Outcome(label or outcome.label, not outcome.passed, outcome.witness, outcome.inputs)


def run_all(fns: Iterable[Callable[[], Outcome]]) -> Report:
    return [f() for f in fns]
