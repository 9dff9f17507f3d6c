"""Result records returned by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of one identity or model check.

    ``failures`` holds one entry per failing case; an empty list means pass.
    """

    name: str
    params: dict[str, Any] = field(default_factory=dict)
    checked: int = 0
    failures: list[Any] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, item: Any) -> None:
        self.failures.append(item)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        text = f"{status} {self.name}"
        if args:
            text += f" [{args}]"
        text += f" checked={self.checked}"
        if self.failures:
            shown = "; ".join(str(f) for f in self.failures[:5])
            more = "" if len(self.failures) <= 5 else f" (+{len(self.failures) - 5} more)"
            text += f" failures={len(self.failures)}: {shown}{more}"
        return text


GFReport = Report


@dataclass
class BijectionReport(Report):
    left_size: int = 0
    right_size: int = 0
    roundtrip_failures: list[Any] = field(default_factory=list)
    statistic_mismatches: list[Any] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (not self.failures and not self.roundtrip_failures
                and not self.statistic_mismatches and self.left_size == self.right_size)

    def line(self) -> str:
        # fold the bijection-specific lists into the generic failure summary
        merged = Report(self.name, self.params, self.checked,
                        list(self.failures) + list(self.roundtrip_failures)
                        + list(self.statistic_mismatches))
        if self.left_size != self.right_size:
            merged.failures.append(f"sizes {self.left_size} != {self.right_size}")
        return merged.line() + f" sizes={self.left_size}/{self.right_size}"
