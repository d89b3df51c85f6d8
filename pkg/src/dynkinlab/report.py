"""Verification reports: named lists of pass/fail checks."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Report:
    name: str
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def lines(self) -> list[str]:
        out = [f"[{'PASS' if self.passed else 'FAIL'}] {self.name}"]
        out += [f"  {'PASS' if ok else 'FAIL'}  {label}" for label, ok in self.checks]
        return out

    def render(self) -> str:
        return "\n".join(self.lines())


def merge(name: str, reports: list[Report]) -> Report:
    return Report(name, tuple((r.name, r.passed) for r in reports))
