"""Shared report structures: per-item checks aggregated into suites.

Reports never abort on first failure; aggregation into exit codes happens
at the CLI. Serialization keeps a stable field order so byte-identical
output is a matter of construction order only.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["CheckItem", "SuiteReport"]


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    items: tuple[CheckItem, ...]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    @property
    def counts(self) -> tuple[int, int]:
        good = sum(1 for item in self.items if item.passed)
        return good, len(self.items)

    def failures(self) -> tuple[CheckItem, ...]:
        return tuple(item for item in self.items if not item.passed)

    def to_dict(self) -> dict:
        good, total = self.counts
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checked": total,
            "failed": total - good,
            "items": [item.to_dict() for item in self.items],
        }
