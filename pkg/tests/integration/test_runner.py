"""Integrationstests fuer Runner, Statusspeicher und Berichtsausgabe."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

import config
from models.report_payload import CheckResult
from models.run_config import RunConfig
from models.types import SampleCounts, Suite
from orchestrator import suites
from orchestrator.report import render_markdown, write_report
from orchestrator.runner import run_verification, run_verification_sync
from orchestrator.status import all_statuses, get_status, reset_statuses, set_status
from orchestrator.suites import RegisteredCheck, SuiteContext


def _passing(ctx: SuiteContext) -> CheckResult:
    return suites.outcome(Suite.GEOMETRY, "fake_pass", 1e-14, 1e-12, n=ctx.n)


def _failing(ctx: SuiteContext) -> CheckResult:
    return suites.outcome(Suite.KERNEL, "fake_fail", 0.5, 1e-3, detail="residual too large")


def _raising(ctx: SuiteContext) -> CheckResult:
    raise ArithmeticError("series diverged")


FAKE_CHECKS = [
    RegisteredCheck(Suite.GEOMETRY, "fake_pass", _passing),
    RegisteredCheck(Suite.KERNEL, "fake_fail", _failing),
    RegisteredCheck(Suite.KERNEL, "fake_raise", _raising),
]


@pytest.fixture(autouse=True)
def _isolated(tmp_path: Path, monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(config, "LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setattr(config, "HYPR_TRACE_ENABLED", False)
    reset_statuses()
    yield
    reset_statuses()


@pytest.mark.asyncio
async def test_run_verification_collects_results(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(suites, "_REGISTRY", list(FAKE_CHECKS))

    report = await run_verification(RunConfig(), Suite.ALL)

    assert [entry.name for entry in report.checks] == ["fake_pass", "fake_fail", "fake_raise"]
    assert not report.passed
    assert [entry.name for entry in report.failed_checks] == ["fake_fail", "fake_raise"]
    assert report.checks[0].extra == {"n": 5}
    assert report.checks[2].detail == "ArithmeticError: series diverged"
    assert report.checks[2].suite == "kernel"

    assert get_status("geometry.fake_pass")["phase"] == "passed"
    assert get_status("geometry.fake_pass")["payload"] == {"measured": 1e-14, "threshold": 1e-12}
    assert get_status("kernel.fake_fail")["phase"] == "failed"
    assert get_status("kernel.fake_fail")["detail"] == "residual too large"
    assert get_status("kernel.fake_raise")["phase"] == "error"
    assert len(all_statuses()) == 3


@pytest.mark.asyncio
async def test_run_verification_filters_by_suite(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(suites, "_REGISTRY", list(FAKE_CHECKS))

    report = await run_verification(RunConfig(suite="geometry"))

    assert report.suite == "geometry"
    assert report.passed
    assert [entry.name for entry in report.checks] == ["fake_pass"]
    assert get_status("kernel.fake_fail")["phase"] == "unknown"


@pytest.mark.asyncio
async def test_traces_are_written_per_check(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(suites, "_REGISTRY", list(FAKE_CHECKS))
    monkeypatch.setattr(config, "HYPR_TRACE_ENABLED", True)

    await run_verification(RunConfig(seed=7))

    lines = (tmp_path / "logs" / "hypr.log").read_text(encoding="utf-8").splitlines()
    entries = {entry["call_name"]: entry for entry in map(json.loads, lines)}
    assert set(entries) == {"geometry.fake_pass", "kernel.fake_fail", "kernel.fake_raise"}
    assert entries["geometry.fake_pass"]["context"] == {"n": 5, "m": 1, "seed": 7}
    assert entries["kernel.fake_raise"]["error"] == "ArithmeticError: series diverged"


def test_status_store_rejects_unknown_phase() -> None:
    with pytest.raises(ValueError):
        set_status("geometry.cayley_roundtrip", "paused")
    assert get_status("geometry.cayley_roundtrip")["detail"] == "check was not scheduled"


def test_registry_covers_every_suite() -> None:
    registered = {entry.suite for entry in suites.registered_checks(Suite.ALL)}
    assert registered == {Suite.GEOMETRY, Suite.FORMS, Suite.KERNEL, Suite.OPERATORS, Suite.ESTIMATES}
    keys = [entry.key for entry in suites.registered_checks(Suite.ALL)]
    assert len(keys) == len(set(keys))
    assert "operators.inverse_identity" in keys


def test_context_rng_depends_only_on_seed_and_name() -> None:
    first = SuiteContext(RunConfig(seed=11))
    second = SuiteContext(RunConfig(seed=11))
    assert first.rng("forms.star_involution").normal() == second.rng("forms.star_involution").normal()
    assert first.rng("a").normal() != first.rng("b").normal()
    assert first.profiles() is first.profiles()


def test_geometry_suite_passes(tmp_path: Path) -> None:
    report = run_verification_sync(RunConfig(n=4, m=1), Suite.GEOMETRY)
    assert report.checks
    assert report.passed, [entry.detail for entry in report.failed_checks]
    assert all(get_status(f"geometry.{entry.name}")["phase"] == "passed" for entry in report.checks)


def test_report_rendering_and_files(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(suites, "_REGISTRY", list(FAKE_CHECKS))
    report = run_verification_sync(RunConfig(n=4, m=1))

    markdown = render_markdown(report)
    assert markdown.startswith("# Verifikationsbericht: Suite `all`")
    assert "n = 4" in markdown
    assert "fehlgeschlagen (1/3 Checks)" in markdown
    assert "FEHLER" in markdown and "ok" in markdown
    assert "## Fehlgeschlagene Checks" in markdown
    assert "- **kernel.fake_raise**: ArithmeticError: series diverged" in markdown

    json_path, markdown_path = write_report(report, tmp_path / "out" / "verify_report.json")
    assert markdown_path == tmp_path / "out" / "verify_report.md"
    assert markdown_path.read_text(encoding="utf-8") == markdown
    payload = json.loads(json_path.read_text(encoding="utf-8"))
    assert payload["suite"] == "all"
    assert [entry["passed"] for entry in payload["checks"]] == [True, False, False]


def _registered(key: str) -> RegisteredCheck:
    return next(entry for entry in suites.registered_checks(Suite.ALL) if entry.key == key)


def test_forms_suite_uses_configured_pair_count() -> None:
    report = run_verification_sync(RunConfig(n=4, m=1, samples=SampleCounts(pairs=30)), Suite.FORMS)
    assert report.passed, [entry.detail for entry in report.failed_checks]
    by_name = {entry.name: entry for entry in report.checks}
    assert by_name["gamma_star_identities"].extra["samples"] == 30
    assert by_name["double_invariance"].extra["samples"] == 30


def test_default_sample_counts_meet_the_acceptance_sizes() -> None:
    samples = RunConfig().samples
    assert samples.pairs >= 1000 and samples.points >= 1000
    assert samples.jet_points >= 10_000
    assert samples.potential_points == 5


def test_kernel_decay_checks_pass_for_the_generic_kernel() -> None:
    ctx = SuiteContext(RunConfig(n=5, m=1))
    decay = _registered("kernel.decay_exponents").run(ctx)
    assert decay.passed, decay.detail
    assert decay.extra["origin"] == pytest.approx(-3.0, abs=0.1)
    boundary = _registered("kernel.boundary_derivative_decay").run(ctx)
    assert boundary.passed, boundary.extra
    assert boundary.extra["expected"] == 3.0
    assert boundary.extra["codifferential"] == pytest.approx(3.0, abs=0.15)


def test_inverse_identity_check_on_held_out_form() -> None:
    ctx = SuiteContext(RunConfig(n=4, m=0, samples=SampleCounts(potential_points=5)))
    result = _registered("operators.inverse_identity").run(ctx)
    assert result.extra["points"] == 5
    assert result.passed, result.measured
    assert result.measured <= 1e-3
