from typing import Dict, Iterable, Tuple

from zreorder.schemas.base import FrozenSchema

class Violation(FrozenSchema):
    check: str
    witness: Tuple[int, ...]
    detail: str = ""

class VerificationReport(FrozenSchema):
    name: str
    window: Tuple[int, int]
    checks: Dict[str, int] = {}
    violations: Tuple[Violation, ...] = ()
    violation_count: int = 0

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def __hash__(self) -> int:
        return hash((self.name, self.window, self.violation_count))

    @classmethod
    def merge(cls, name: str, window: Tuple[int, int], reports: Iterable["VerificationReport"], cap: int) -> "VerificationReport":
        """Fusionne des rapports partiels par conjonction."""
        checks: Dict[str, int] = {}
        violations = []
        count = 0
        for report in reports:
            for check, n in report.checks.items():
                checks[check] = checks.get(check, 0) + n
            violations.extend(report.violations)
            count += report.violation_count
        return cls(
            name=name,
            window=window,
            checks=checks,
            violations=tuple(violations[:cap]),
            violation_count=count,
        )
