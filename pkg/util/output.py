"""Atomare CSV/JSON-Ausgabe mit bitstabiler Zahlenformatierung."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Iterable, Sequence


def format_value(value: Any) -> str:
    """Formatiert Floats mit 17 signifikanten Stellen, alles andere per `str`."""

    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    if hasattr(value, "dtype") and getattr(value, "shape", None) == ():
        return format_value(value.item())
    return str(value)


def _atomic_write(path: Path, text: str) -> None:
    """Schreibt in eine temporaere Datei im Zielordner und ersetzt dann atomar."""

    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(format_value(value) for value in row) for row in rows)
    return "\n".join(lines) + "\n"


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    """Schreibt eine CSV-Datei (Kopfzeile + Datenzeilen) atomar.

    Returns:
        Der geschriebene Pfad.
    """

    target = Path(path)
    _atomic_write(target, render_csv(header, rows))
    return target


def write_json(path: str | Path, payload: Any) -> Path:
    """Schreibt JSON (sortierte Schluessel, Einrueckung 2) atomar."""

    if hasattr(payload, "model_dump"):
        payload = payload.model_dump(mode="json")
    target = Path(path)
    _atomic_write(target, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return target


def write_text(path: str | Path, text: str) -> Path:
    target = Path(path)
    _atomic_write(target, text)
    return target
