"""Strukturierte Ergebnisdaten der Verifikationssuiten."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field

from models.run_config import RunConfig


class CheckResult(BaseModel):
    """Ergebnis eines einzelnen Invariantenchecks."""

    suite: str
    name: str
    measured: float | None = Field(default=None, description="Gemessener Wert")
    threshold: float | None = Field(default=None, description="Schwelle")
    passed: bool
    detail: str = ""
    extra: dict[str, Any] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    """Gesamtbericht eines `verify`-Laufs inklusive aufgeloester Konfiguration."""

    suite: str
    config: RunConfig
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]


__all__ = ["CheckResult", "VerificationReport"]
