"""Liest Konfigurationswerte aus der .env-Datei und stellt sie zentral bereit.

Das Modul nutzt `python-dotenv`, damit CLI, Verifikationssuiten und Tests mit
identischen numerischen Defaults arbeiten. Alle Konstanten werden beim Import
berechnet; Flags der CLI und Felder einer RunConfig-Datei ueberschreiben sie."""

from __future__ import annotations

import os
from pathlib import Path

from dotenv import load_dotenv  # type: ignore[import]

CONFIG_DIR = Path(__file__).resolve().parent
ROOT_ENV_FILE = CONFIG_DIR.parent / ".env"
EXAMPLE_ENV_FILE = CONFIG_DIR / ".env.example"

# Prioritaet: Projektweite .env > Beispieldatei (nur als Fallback).
if ROOT_ENV_FILE.exists():
    load_dotenv(ROOT_ENV_FILE)
elif EXAMPLE_ENV_FILE.exists():
    load_dotenv(EXAMPLE_ENV_FILE)


def _as_bool(value: str | None, default: bool = False) -> bool:
    """Interpretation einer Umgebungsvariable als boolescher Wert."""

    if value is None:
        return default
    return str(value).lower() in {"1", "true", "yes", "on"}


# --- Laufzeit / Parallelitaet ---
HYPR_THREADS = max(1, int(os.getenv("HYPR_THREADS", "4")))
HYPR_SEED = int(os.getenv("HYPR_SEED", "20240607"))

# --- Logging / Tracing ---
LOG_DIR = os.getenv("LOG_DIR", "logs")
HYPR_LOG_LEVEL = os.getenv("HYPR_LOG_LEVEL", "INFO").upper()
HYPR_TRACE_ENABLED = _as_bool(os.getenv("HYPR_TRACE_ENABLED", "false"))

# --- Finite Differenzen ---
HYPR_FD_STEP = float(os.getenv("HYPR_FD_STEP", "1e-4"))

# --- Quadratur Riesz-Potential ---
HYPR_RADIAL_NODES = int(os.getenv("HYPR_RADIAL_NODES", "8"))
HYPR_RADIAL_PANELS = int(os.getenv("HYPR_RADIAL_PANELS", "4"))
HYPR_POLAR_NODES = int(os.getenv("HYPR_POLAR_NODES", "16"))
HYPR_TRANSVERSE_NODES = int(os.getenv("HYPR_TRANSVERSE_NODES", "3"))
HYPR_AZIMUTH_NODES = int(os.getenv("HYPR_AZIMUTH_NODES", "6"))
HYPR_INNER_CUTOFF = float(os.getenv("HYPR_INNER_CUTOFF", "1e-3"))

# --- Tabellierung der Radialprofile ---
HYPR_GRADING_RATIO = float(os.getenv("HYPR_GRADING_RATIO", "0.5"))
HYPR_GRADED_PANELS = int(os.getenv("HYPR_GRADED_PANELS", "60"))
HYPR_PANEL_NODES = int(os.getenv("HYPR_PANEL_NODES", "16"))

# --- Samplegroessen der Verifikationssuiten ---
HYPR_SAMPLE_POINTS = int(os.getenv("HYPR_SAMPLE_POINTS", "1000"))
HYPR_SAMPLE_PAIRS = int(os.getenv("HYPR_SAMPLE_PAIRS", "1000"))
HYPR_JET_POINTS = int(os.getenv("HYPR_JET_POINTS", "10000"))
HYPR_POTENTIAL_POINTS = int(os.getenv("HYPR_POTENTIAL_POINTS", "5"))
