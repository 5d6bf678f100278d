"""Threadsicherer In-Memory-Statusspeicher fuer laufende Verifikationschecks."""

from __future__ import annotations

from threading import Lock
from typing import Any, Dict, Optional

PHASES = ("queued", "running", "passed", "failed", "error")

_STATUSES: Dict[str, Dict[str, Any]] = {}
_LOCK = Lock()


def set_status(
    check_key: str,
    phase: str,
    detail: Optional[str] = None,
    payload: Optional[Dict[str, Any]] = None,
) -> None:
    """Speichert die aktuelle Phase eines Checks.

    Args:
        check_key: Kennung `<suite>.<check>`.
        phase: Eine der Phasen `queued`, `running`, `passed`, `failed`, `error`.
        detail: Freitext, z. B. Fehlermeldung.
        payload: Optionale Zusatzdaten (Messwert, Schwelle).

    Raises:
        ValueError: Unbekannte Phase.
    """

    if phase not in PHASES:
        raise ValueError(f"unknown phase {phase!r}")
    with _LOCK:
        _STATUSES[check_key] = {
            "check": check_key,
            "phase": phase,
            "detail": detail,
            "payload": payload,
        }


def get_status(check_key: str) -> Dict[str, Any]:
    """Liefert den zuletzt bekannten Status oder einen Platzhalter."""

    with _LOCK:
        return dict(
            _STATUSES.get(
                check_key,
                {
                    "check": check_key,
                    "phase": "unknown",
                    "detail": "check was not scheduled",
                    "payload": None,
                },
            )
        )


def all_statuses() -> list[Dict[str, Any]]:
    with _LOCK:
        return [dict(entry) for entry in _STATUSES.values()]


def reset_statuses() -> None:
    """Loescht saemtliche gespeicherten Statusinformationen (Test-Utility)."""

    with _LOCK:
        _STATUSES.clear()
