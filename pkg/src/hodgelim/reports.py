"""Verification reports: named checks with pass/fail and details."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    ok: bool
    detail: dict[str, Any] = field(default_factory=dict)

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        if self.detail:
            items = ", ".join(f"{k}={v}" for k, v in sorted(self.detail.items()))
            return f"{tag} {self.name} ({items})"
        return f"{tag} {self.name}"


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, **detail) -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            name = f"{prefix}{c.name}" if prefix else c.name
            self.checks.append(Check(name, c.ok, c.detail))

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [{"name": c.name, "ok": c.ok,
                        "detail": {k: str(v) for k, v in c.detail.items()}}
                       for c in self.checks],
            "data": {k: str(v) if not isinstance(v, (int, bool, list, dict))
                     else v for k, v in self.data.items()},
        }

    def pretty(self) -> str:
        lines = [f"== {self.title}: {'PASS' if self.ok else 'FAIL'} =="]
        lines.extend(c.line() for c in self.checks)
        return "\n".join(lines)
