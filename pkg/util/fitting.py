"""Log-Log-Ausgleichsrechnung fuer Potenzgesetz-Exponenten."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class FitError(ValueError):
    """Zu wenige oder ungueltige Stuetzstellen fuer einen Exponentenfit."""


@dataclass(frozen=True)
class PowerLawFit:
    """Ergebnis von |y| ~ prefactor * t^exponent.

    `residual` ist die RMS-Abweichung der Residuen in natuerlichem Logarithmus.
    """

    exponent: float
    prefactor: float
    residual: float
    samples: int


def fit_power_law(t: np.ndarray, values: np.ndarray) -> PowerLawFit:
    """Kleinste-Quadrate-Gerade durch (log t, log |values|).

    Raises:
        FitError: Weniger als drei Punkte, nichtpositive t oder verschwindende Werte.
    """

    t = np.asarray(t, dtype=float).ravel()
    y = np.abs(np.asarray(values, dtype=float).ravel())
    if t.size != y.size or t.size < 3:
        raise FitError("power-law fit needs at least three matching samples")
    if np.any(t <= 0.0) or np.any(~np.isfinite(y)) or np.any(y <= 0.0):
        raise FitError("power-law fit needs positive abscissae and non-zero finite values")
    log_t = np.log(t)
    log_y = np.log(y)
    slope, intercept = np.polyfit(log_t, log_y, 1)
    residual = float(np.sqrt(np.mean((log_y - (slope * log_t + intercept)) ** 2)))
    return PowerLawFit(
        exponent=float(slope),
        prefactor=float(np.exp(intercept)),
        residual=residual,
        samples=int(t.size),
    )


def log_window(lo: float, hi: float, count: int = 24) -> np.ndarray:
    """Logarithmisch aequidistante Stuetzstellen in [lo, hi]."""

    return np.geomspace(lo, hi, count)
