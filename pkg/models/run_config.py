"""Schema der Laufkonfiguration fuer CLI und Verifikationssuiten."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError

import config
from models.types import FDScheme, OutputFormat, QuadratureSpec, SampleCounts, Suite, Tolerances


class ConfigError(ValueError):
    """Ungueltige oder unlesbare Laufkonfiguration."""


class RunConfig(BaseModel):
    """Aufgeloeste Konfiguration eines CLI-Laufs.

    Unbekannte Schluessel werden abgelehnt, damit Tippfehler in Konfigurationsdateien
    nicht stillschweigend ignoriert werden.
    """

    model_config = ConfigDict(extra="forbid")

    n: int = Field(default=5, ge=2, le=10)
    m: int = Field(default=1, ge=0, le=10)
    harmonic_shift: float = 0.0
    a2_perturbation: float = 0.0
    tolerances: Tolerances = Field(default_factory=Tolerances)
    quadrature: QuadratureSpec = Field(default_factory=QuadratureSpec)
    fd: FDScheme = Field(default_factory=FDScheme)
    samples: SampleCounts = Field(default_factory=SampleCounts)
    seed: int = config.HYPR_SEED
    out: str | None = None
    format: OutputFormat = OutputFormat.CSV
    suite: Suite = Suite.ALL
    grid_points: int = Field(default=200, ge=2)
    p_min: float = Field(default=1.05, gt=1.0)
    p_max: float = Field(default=6.0, gt=1.0)
    p_step: float = Field(default=0.05, gt=0.0)


def load_run_config(path: str | Path | None, overrides: dict[str, Any]) -> RunConfig:
    """Liest eine JSON-Konfiguration und wendet CLI-Overrides an.

    Args:
        path: Optionaler Pfad zur JSON-Datei.
        overrides: Explizit gesetzte Flags (Werte `None` werden ignoriert).

    Raises:
        ConfigError: Datei unlesbar oder Schema verletzt.
    """

    data: dict[str, Any] = {}
    if path is not None:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"config file unreadable: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config file must contain a JSON object")
    data.update({key: value for key, value in overrides.items() if value is not None})
    try:
        return RunConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(str(exc)) from exc


__all__ = ["ConfigError", "RunConfig", "load_run_config"]
