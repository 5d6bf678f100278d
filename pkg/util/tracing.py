"""Tracing-Helfer fuer Verifikationschecks (JSON-Lines in `LOG_DIR/hypr.log`)."""

from __future__ import annotations

import json
import time
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Awaitable, Callable, TypeVar

import config

_T = TypeVar("_T")


def _ensure_log_dir() -> Path:
    """Stellt sicher, dass der Log-Ordner existiert."""

    log_dir = Path(config.LOG_DIR or "logs")
    log_dir.mkdir(parents=True, exist_ok=True)
    return log_dir


def _passed_flag(result: Any) -> bool | None:
    """Liest ein `passed`-Attribut aus, falls das Ergebnis eines besitzt."""

    value = getattr(result, "passed", None)
    return bool(value) if value is not None else None


async def traced_check(
    call_name: str,
    invoke: Callable[[], Awaitable[_T]],
    context: dict[str, Any] | None = None,
) -> _T:
    """Fuehrt einen Check aus und schreibt einen Trace-Eintrag.

    Args:
        call_name: Logischer Name des Checks (z. B. "kernel.harmonicity").
        invoke: Coroutine-Factory, die den eigentlichen Check ausfuehrt.
        context: Optionale Zusatzdaten (n, m, Seed, ...).

    Returns:
        Ergebnis des Checks (Originalobjekt).
    """

    if not config.HYPR_TRACE_ENABLED:
        return await invoke()

    start = time.perf_counter()
    try:
        result = await invoke()
    except Exception as exc:
        _write_trace(call_name, start, context, None, f"{type(exc).__name__}: {exc}")
        raise

    _write_trace(call_name, start, context, _passed_flag(result), None)
    return result


def _write_trace(
    call_name: str,
    start: float,
    context: dict[str, Any] | None,
    passed: bool | None,
    error_info: str | None,
) -> None:
    """Schreibt einen JSON-Trace-Eintrag in die Logdatei."""

    entry = {
        "ts": datetime.now(timezone.utc).isoformat(),
        "call_name": call_name,
        "duration_ms": round((time.perf_counter() - start) * 1000, 3),
        "context": context or {},
        "passed": passed,
        "error": error_info,
    }
    log_file = _ensure_log_dir() / "hypr.log"
    with log_file.open("a", encoding="utf-8") as file:
        file.write(json.dumps(entry, ensure_ascii=False, default=str) + "\n")
