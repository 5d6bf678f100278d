"""Schur-Test des Randkerns (1 - r^2)^(n-m-1) mit der Gewichtsfunktion h(y) = y_n^alpha.

Nach Integration in y' und Skalierung y_n = x_n t bleibt

    int_0^inf t^(s-m-1) (1+t)^(2m+1-n) dt,   s = alpha q (bzw. alpha p),

endlich genau fuer m < s < n-1-m; der Wert ist B(s-m, n-1-m-s)."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import beta

from estimates.errors import CriticalRangeError

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SchurTestResult:
    """Integralwerte fuer s = alpha q und s = alpha p; math.inf bei Divergenz."""

    schur_alpha: float
    integral_q: float
    integral_p: float

    @property
    def finite(self) -> bool:
        return math.isfinite(self.integral_q) and math.isfinite(self.integral_p)


@dataclass(frozen=True)
class SchurScanRow:
    p: float
    feasible: bool
    alpha_low: float
    alpha_high: float


def conjugate(p: float) -> float:
    if p <= 1.0:
        raise CriticalRangeError(f"Lebesgue exponent must exceed 1, got {p}")
    return math.inf if math.isinf(p) else p / (p - 1.0)


def weight_integral(n: int, m: int, s: float) -> float:
    """int_0^inf t^(s-m-1) (1+t)^(2m+1-n) dt per Quadratur; math.inf bei Divergenz.

    [0, 1] und die nach t = 1/u gespiegelte Restmenge werden mit algebraischem
    Endpunktgewicht integriert.
    """

    a = s - m
    b = n - 1 - m - s
    if a <= 0.0 or b <= 0.0:
        return math.inf
    total = a + b

    def head(t: float) -> float:
        return (1.0 + t) ** (-total)

    near, _ = quad(head, 0.0, 1.0, weight="alg", wvar=(a - 1.0, 0.0), epsabs=0.0, epsrel=1e-12, limit=200)
    far, _ = quad(head, 0.0, 1.0, weight="alg", wvar=(b - 1.0, 0.0), epsabs=0.0, epsrel=1e-12, limit=200)
    return near + far


def weight_integral_exact(n: int, m: int, s: float) -> float:
    a = s - m
    b = n - 1 - m - s
    if a <= 0.0 or b <= 0.0:
        return math.inf
    return float(beta(a, b))


def schur_weight_test(n: int, m: int, p: float, schur_alpha: float) -> SchurTestResult:
    """Beide Schur-Bedingungen fuer h = y_n^alpha; divergente Integrale als math.inf.

    Raises:
        CriticalRangeError: 2m >= n - 1 oder p <= 1.
    """

    if 2 * m >= n - 1:
        raise CriticalRangeError(f"the weight test needs 2m < n - 1, got (n, m) = ({n}, {m})")
    q = conjugate(p)
    return SchurTestResult(
        schur_alpha=schur_alpha,
        integral_q=weight_integral(n, m, schur_alpha * q),
        integral_p=weight_integral(n, m, schur_alpha * p),
    )


def feasible_alpha_interval(n: int, m: int, p: float) -> tuple[float, float]:
    """(m max(1/p, 1/q), (n-1-m) min(1/p, 1/q)); leer, wenn low >= high."""

    inv_p = 1.0 / p
    inv_q = 1.0 - inv_p
    return m * max(inv_p, inv_q), (n - 1 - m) * min(inv_p, inv_q)


def schur_scan(n: int, m: int, p_values: np.ndarray) -> list[SchurScanRow]:
    """Machbarkeit von alpha je p; die Mitte des Intervalls wird per Quadratur bestaetigt."""

    rows: list[SchurScanRow] = []
    for p in np.asarray(p_values, dtype=float):
        low, high = feasible_alpha_interval(n, m, float(p))
        feasible = low < high
        if feasible:
            feasible = schur_weight_test(n, m, float(p), 0.5 * (low + high)).finite
        rows.append(SchurScanRow(float(p), feasible, low, high))
    count = sum(row.feasible for row in rows)
    _LOGGER.info("schur scan (n, m) = (%d, %d): %d of %d p values feasible", n, m, count, len(rows))
    return rows
