"""Gaussche hypergeometrische Funktion F(a, b; c; x) fuer reelle x in [0, 1).

Abbrechende Reihen werden als Polynom exakt summiert. Sonst gilt: Reihe fuer
x <= 1/2, darueber Verbindungsformeln in 1 - x. Ist c - a - b ganzzahlig, wird
die logarithmische Reihe summiert (negative Differenzen vorher per Euler-Transformation
gespiegelt). Oberhalb von 1/2 gehen nur die Abstaende 1 - x ein; die Auswertung
bleibt daher genau, auch wenn x in double bereits auf 1 rundet."""

from __future__ import annotations

import logging
from functools import lru_cache
from math import factorial, isclose

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator
from scipy.special import digamma, gamma, rgamma

_LOGGER = logging.getLogger(__name__)

SERIES_LIMIT = 0.5
MAX_SERIES_TERMS = 4000
SERIES_EPS = 1e-17
INTEGER_GAP_TOL = 1e-12


class HypergeometricError(ArithmeticError):
    """Basisfehler der 2F1-Auswertung."""


class ParameterPoleError(HypergeometricError):
    """c ist eine nichtpositive ganze Zahl, die vor dem Abbruch der Reihe erreicht wird."""


class AccuracyLossError(HypergeometricError):
    """Eine Reihe konvergierte nicht innerhalb von MAX_SERIES_TERMS Termen."""


class Hyp2F1Params(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    c: float
    x: float

    @field_validator("x")
    @classmethod
    def _validate_x(cls, value: float) -> float:
        if not 0.0 <= value < 1.0:
            raise ValueError("x must lie in [0, 1)")
        return value


def _nonpositive_integer(value: float) -> int | None:
    rounded = round(value)
    if rounded <= 0 and isclose(value, rounded, abs_tol=1e-12):
        return -int(rounded)
    return None


def termination_degree(a: float, b: float) -> int | None:
    degrees = [d for d in (_nonpositive_integer(a), _nonpositive_integer(b)) if d is not None]
    return min(degrees) if degrees else None


def _check_pole(a: float, b: float, c: float) -> int | None:
    degree = termination_degree(a, b)
    pole = _nonpositive_integer(c)
    if pole is not None and (degree is None or pole < degree):
        raise ParameterPoleError(f"c = {c:g} is a pole before the series F({a:g}, {b:g}; {c:g}; x) terminates")
    return degree


@lru_cache(maxsize=512)
def terminating_coefficients(a: float, b: float, c: float) -> tuple[float, ...]:
    """Koeffizienten t_0..t_N des abbrechenden Polynoms (aufsteigend)."""

    degree = _check_pole(a, b, c)
    if degree is None:
        raise HypergeometricError(f"F({a:g}, {b:g}; {c:g}; x) does not terminate")
    coeffs = [1.0]
    for k in range(degree):
        coeffs.append(coeffs[-1] * (a + k) * (b + k) / ((c + k) * (k + 1)))
    return tuple(coeffs)


def _converged(term: np.ndarray, total: np.ndarray) -> bool:
    return bool(np.all(np.abs(term) <= SERIES_EPS * np.maximum(np.abs(total), 1e-300)))


def _series(a: float, b: float, c: float, x: np.ndarray) -> np.ndarray:
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(MAX_SERIES_TERMS):
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        total = total + term
        if _converged(term, total):
            return total
    raise AccuracyLossError(f"series for F({a:g}, {b:g}; {c:g}; x) did not converge")


def _integer_gap(a: float, b: float, c: float) -> int | None:
    gap = c - a - b
    rounded = round(gap)
    return int(rounded) if isclose(gap, rounded, abs_tol=INTEGER_GAP_TOL) else None


def _log_connection(a: float, b: float, gap: int, tail: np.ndarray) -> np.ndarray:
    """F(a, b; a + b + gap; 1 - tail) fuer ganzzahliges gap >= 0, tail <= 1/2."""

    c = a + b + gap
    total = np.zeros_like(tail)
    prefactor = gamma(gap) * gamma(c) * rgamma(a + gap) * rgamma(b + gap) if gap > 0 else 0.0
    if prefactor != 0.0:
        coeff = 1.0
        power = np.ones_like(tail)
        for k in range(gap):
            total = total + coeff * power
            if k + 1 < gap:
                coeff *= (a + k) * (b + k) / ((k + 1) * (1 - gap + k))
                power = power * tail
        total = prefactor * total
    weight = gamma(c) * rgamma(a) * rgamma(b)
    if weight == 0.0:
        return total
    log_tail = np.log(tail)
    coeff = 1.0 / factorial(gap)
    power = (-tail) ** gap
    series = np.zeros_like(tail)
    for k in range(MAX_SERIES_TERMS):
        bracket = log_tail - digamma(k + 1.0) - digamma(k + gap + 1.0) + digamma(a + k + gap) + digamma(b + k + gap)
        term = coeff * power * bracket
        series = series + term
        if k > 0 and _converged(term, series):
            return total - weight * series
        coeff *= (a + gap + k) * (b + gap + k) / ((k + 1.0) * (k + gap + 1.0))
        power = power * tail
    raise AccuracyLossError(f"logarithmic series for F({a:g}, {b:g}; {c:g}; x) did not converge")


def _connection(a: float, b: float, c: float, tail: np.ndarray) -> np.ndarray:
    """F(a, b; c; 1 - tail) fuer tail <= 1/2, ausschliesslich ueber tail."""

    gap = _integer_gap(a, b, c)
    if gap is not None and gap < 0:
        return tail**gap * _connection(c - a, c - b, c, tail)
    if gap is not None:
        return _log_connection(a, b, gap, tail)
    d = c - a - b
    regular = gamma(c) * gamma(d) * rgamma(c - a) * rgamma(c - b) * _series(a, b, 1.0 - d, tail)
    singular = gamma(c) * gamma(-d) * rgamma(a) * rgamma(b) * tail**d * _series(c - a, c - b, 1.0 + d, tail)
    return regular + singular


def _pochhammer_ratio(a: float, b: float, c: float, order: int) -> float:
    factor = 1.0
    for k in range(order):
        factor *= (a + k) * (b + k) / (c + k)
    return factor


def hyp2f1_values(
    a: float,
    b: float,
    c: float,
    x: np.ndarray | float,
    one_minus_x: np.ndarray | float | None = None,
    derivative: int = 0,
) -> np.ndarray:
    """Vektorisierte Auswertung von F bzw. seiner `derivative`-ten Ableitung.

    Args:
        a: Zaehlerparameter.
        b: Zaehlerparameter.
        c: Nennerparameter.
        x: Argumente in [0, 1).
        one_minus_x: Optional 1 - x mit voller Genauigkeit (fuer x nahe 1).
        derivative: Ableitungsordnung (0, 1, 2, ...).

    Raises:
        ParameterPoleError: c erreicht einen Pol vor dem Abbruch.
        AccuracyLossError: Eine der Reihen konvergiert nicht.
    """

    x = np.asarray(x, dtype=float)
    shape = x.shape
    x = x.reshape(-1)
    tail = 1.0 - x if one_minus_x is None else np.broadcast_to(np.asarray(one_minus_x, dtype=float), shape).reshape(-1)
    if np.any(x < 0.0) or np.any(tail <= 0.0):
        raise HypergeometricError("x must lie in [0, 1)")
    degree = _check_pole(a, b, c)
    if degree is not None:
        poly = np.polynomial.Polynomial(terminating_coefficients(a, b, c))
        values = poly.deriv(derivative)(x) if derivative else poly(x)
        return values.reshape(shape)
    if derivative:
        factor = _pochhammer_ratio(a, b, c, derivative)
        shifted = hyp2f1_values(a + derivative, b + derivative, c + derivative, x, tail, 0)
        return factor * shifted.reshape(shape)
    out = np.empty_like(x)
    low = tail >= 1.0 - SERIES_LIMIT
    if np.any(low):
        out[low] = _series(a, b, c, x[low])
    if np.any(~low):
        out[~low] = _connection(a, b, c, tail[~low])
    if not np.all(np.isfinite(out)):
        _LOGGER.warning("non-finite values in F(%g, %g; %g; x)", a, b, c)
    return out.reshape(shape)


def hyp2f1(params: Hyp2F1Params) -> float:
    return float(hyp2f1_values(params.a, params.b, params.c, np.array([params.x]))[0])
