from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Violation:
    check: str
    index: object
    detail: str = ""


@dataclass
class Report:
    """Outcome of a verification scan. Violations are collected, never raised."""

    name: str
    base: int
    checked: dict[str, int] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    notes: dict[str, object] = field(default_factory=dict)

    def tick(self, check: str, n: int = 1):
        self.checked[check] = self.checked.get(check, 0) + n

    def fail(self, check: str, index, detail: str = ""):
        self.violations.append(Violation(check, index, detail))

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def total_checked(self) -> int:
        return sum(self.checked.values())

    def by_check(self, check: str) -> list[Violation]:
        return [v for v in self.violations if v.check == check]

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"{status} {self.name} b={self.base}: "
                f"{self.total_checked} checks, {len(self.violations)} violations")

    def rows(self):
        """One CSV row per check name, in insertion order."""
        for check, count in self.checked.items():
            bad = self.by_check(check)
            first = "" if not bad else str(bad[0].index)
            yield [self.name, self.base, check, count, len(bad), first]
