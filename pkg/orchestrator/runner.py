"""Asynchrone Ausfuehrung der Verifikationssuiten in Worker-Threads."""

from __future__ import annotations

import asyncio
import logging
from functools import partial

import anyio
from anyio import CapacityLimiter

import config
from models.report_payload import CheckResult, VerificationReport
from models.run_config import RunConfig
from models.types import Suite
from orchestrator.status import set_status
from orchestrator.suites import RegisteredCheck, SuiteContext, registered_checks
from util.tracing import traced_check

_LOGGER = logging.getLogger(__name__)


async def _run_check(entry: RegisteredCheck, context: SuiteContext, limiter: CapacityLimiter) -> CheckResult:
    set_status(entry.key, "running")
    trace_context = {"n": context.n, "m": context.m, "seed": context.config.seed}
    try:
        result = await traced_check(
            entry.key,
            lambda: anyio.to_thread.run_sync(partial(entry.run, context), limiter=limiter),
            trace_context,
        )
    except Exception as error:  # Check-Fehler landen als fehlgeschlagener Check im Bericht
        _LOGGER.warning("check %s raised %s: %s", entry.key, type(error).__name__, error)
        set_status(entry.key, "error", f"{type(error).__name__}: {error}")
        return CheckResult(
            suite=entry.suite.value,
            name=entry.name,
            passed=False,
            detail=f"{type(error).__name__}: {error}",
        )
    set_status(
        entry.key,
        "passed" if result.passed else "failed",
        result.detail or None,
        payload={"measured": result.measured, "threshold": result.threshold},
    )
    return result


async def run_verification(run_config: RunConfig, suite: Suite | None = None) -> VerificationReport:
    """Fuehrt alle Checks der Suite nebenlaeufig aus (hoechstens HYPR_THREADS gleichzeitig).

    Die Reihenfolge im Bericht ist die Registrierungsreihenfolge.

    Raises:
        KernelSpecError: (n, m) der Konfiguration ist unzulaessig.
    """

    suite = suite or run_config.suite
    context = SuiteContext(run_config)
    entries = registered_checks(suite)
    for entry in entries:
        set_status(entry.key, "queued")
    limiter = CapacityLimiter(config.HYPR_THREADS)
    _LOGGER.info("suite %s: %d checks on %d threads", suite.value, len(entries), config.HYPR_THREADS)
    results = await asyncio.gather(*(_run_check(entry, context, limiter) for entry in entries))
    report = VerificationReport(suite=suite.value, config=run_config, checks=list(results))
    _LOGGER.info(
        "suite %s finished: %d passed, %d failed",
        suite.value,
        len(report.checks) - len(report.failed_checks),
        len(report.failed_checks),
    )
    return report


def run_verification_sync(run_config: RunConfig, suite: Suite | None = None) -> VerificationReport:
    return asyncio.run(run_verification(run_config, suite))
