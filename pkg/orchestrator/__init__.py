"""Orchestrierung der Verifikationssuiten: Checks, Runner, Status und Berichte."""

from .report import render_markdown, write_report
from .runner import run_verification, run_verification_sync
from .status import all_statuses, get_status, reset_statuses, set_status
from .suites import SuiteContext, registered_checks

__all__ = [
    "SuiteContext",
    "all_statuses",
    "get_status",
    "registered_checks",
    "render_markdown",
    "reset_statuses",
    "run_verification",
    "run_verification_sync",
    "set_status",
    "write_report",
]
