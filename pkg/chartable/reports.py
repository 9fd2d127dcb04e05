"""
Informes de verificación: una lista de comprobaciones {check, status, details}.
"""
from dataclasses import dataclass, field
from typing import Any

PASS    = 'pass'
FAIL    = 'fail'
SKIPPED = 'skipped'
STATUSES = (PASS, FAIL, SKIPPED)


@dataclass
class Check:
    check:   str
    status:  str
    details: Any = field(default_factory=dict)
    # informativa: se lista en el informe pero no hace fallar la verificación
    advisory: bool = False

    @property
    def failed(self) -> bool:
        return self.status == FAIL


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, check: str, ok: bool, details=None, advisory: bool = False) -> Check:
        entry = Check(check, PASS if ok else FAIL, details if details is not None else {}, advisory)
        self.checks.append(entry)
        return entry

    def skip(self, check: str, reason: str) -> Check:
        entry = Check(check, SKIPPED, {'reason': reason})
        self.checks.append(entry)
        return entry

    def extend(self, other: 'Report') -> 'Report':
        self.checks.extend(other.checks)
        return self

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.failed and not c.advisory]

    @property
    def findings(self) -> list[Check]:
        """Comprobaciones informativas que no se cumplen."""
        return [c for c in self.checks if c.failed and c.advisory]

    @property
    def passed(self) -> bool:
        return not self.failures

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.check == name:
                return c
        raise KeyError(name)
