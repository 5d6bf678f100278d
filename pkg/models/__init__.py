"""Modelldatentypen fuer gemeinsam genutzte Strukturen."""

from .types import FDOrder, FDScheme, OutputFormat, QuadratureSpec, SampleCounts, Suite, Tolerances
from .run_config import ConfigError, RunConfig, load_run_config
from .report_payload import CheckResult, VerificationReport

__all__ = [
    "CheckResult",
    "ConfigError",
    "FDOrder",
    "FDScheme",
    "OutputFormat",
    "QuadratureSpec",
    "RunConfig",
    "SampleCounts",
    "Suite",
    "Tolerances",
    "VerificationReport",
    "load_run_config",
]
