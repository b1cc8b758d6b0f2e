"""Sharkovsky-closure verification of period sets."""

from __future__ import annotations

from dataclasses import dataclass

from .order import precedes
from .plmap import SpectrumReport


def closure_violations(present, bound: int) -> list[tuple[int, int]]:
    """Pairs ``(m, n)`` with ``m`` present, ``m ≺ n <= bound`` and ``n`` absent."""
    present = set(present)
    return [
        (m, n)
        for m in sorted(present)
        for n in range(1, bound + 1)
        if n not in present and precedes(m, n)
    ]


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    bound: int
    present_periods: frozenset
    violations: tuple
    complete: bool = True

    @property
    def status(self) -> str:
        if not self.complete:
            return "incomplete"
        return "fail" if self.violations else "pass"

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def verify_spectrum(subject: str, report: SpectrumReport) -> VerificationReport:
    # a census cut short by a degenerate iterate cannot certify closure
    limit = report.complete_through
    present = report.present
    return VerificationReport(
        subject,
        report.bound,
        present,
        tuple(closure_violations(present, limit)),
        report.complete,
    )
