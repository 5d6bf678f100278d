"""Fundamentalsysteme der beiden hypergeometrischen Gleichungen fuer H und G.

    H:  x(1-x)H'' + [n/2 + 1 - (3n/2 + 1 - 2m)x]H' - (n/2 - m)(n - m)H = 0
    G:  x(1-x)G'' + [n/2 + 1 - (2m + 1 - n/2)x]G' - m(m - n/2)G = (1/2)(1+x)(1-x)^(n-2m-2) H

u1, u2 loesen die H-Gleichung, u3, u4 die homogene G-Gleichung."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from special_functions.hypergeometric import HypergeometricError, hyp2f1_values


@dataclass(frozen=True)
class FundamentalSolutions:
    """Werte, erste und zweite Ableitungen von u1..u4 (je Array wie x)."""

    x: np.ndarray
    u1: np.ndarray
    u2: np.ndarray
    u3: np.ndarray
    u4: np.ndarray
    du1: np.ndarray
    du2: np.ndarray
    du3: np.ndarray
    du4: np.ndarray
    d2u1: np.ndarray
    d2u2: np.ndarray
    d2u3: np.ndarray
    d2u4: np.ndarray


@dataclass(frozen=True)
class WronskianValues:
    direct: np.ndarray
    liouville: np.ndarray
    c_mn: float


def _check(n: int, m: int) -> None:
    if not 0 < m < n / 2:
        raise HypergeometricError(f"fundamental solutions need 0 < m < n/2, got (n, m) = ({n}, {m})")


def _hyp_with_derivatives(a: float, b: float, c: float, x: np.ndarray, tail: np.ndarray) -> tuple[np.ndarray, ...]:
    return tuple(hyp2f1_values(a, b, c, x, tail, derivative=k) for k in range(3))


def _times_power(exponent: float, x: np.ndarray, f: np.ndarray, df: np.ndarray, d2f: np.ndarray):
    """x^e * f samt Ableitungen."""

    xe = x**exponent
    value = xe * f
    first = xe * (exponent * f / x + df)
    second = xe * (exponent * (exponent - 1.0) * f / x**2 + 2.0 * exponent * df / x + d2f)
    return value, first, second


def _times_tail_power(exponent: float, tail: np.ndarray, f: np.ndarray, df: np.ndarray, d2f: np.ndarray):
    """(1-x)^e * f samt Ableitungen (tail = 1 - x)."""

    w = tail**exponent
    dw = -exponent * tail ** (exponent - 1.0)
    d2w = exponent * (exponent - 1.0) * tail ** (exponent - 2.0)
    return w * f, dw * f + w * df, d2w * f + 2.0 * dw * df + w * d2f


def fundamental_solutions(
    n: int, m: int, x: np.ndarray | float, one_minus_x: np.ndarray | float | None = None
) -> FundamentalSolutions:
    """u1..u4 mit ersten und zweiten Ableitungen.

    u3 wird in der faktorisierten Form x^(-n/2)(1-x)^(n+1-2m) F(n/2+1-m, 1-m; 1-n/2; x)
    ausgewertet; sie ist auch fuer gerades n eindeutig.

    Raises:
        HypergeometricError: (n, m) ausserhalb 0 < m < n/2 oder Fehler der 2F1-Auswertung.
    """

    _check(n, m)
    x = np.asarray(x, dtype=float)
    tail = 1.0 - x if one_minus_x is None else np.asarray(one_minus_x, dtype=float) * np.ones_like(x)
    if np.any(x <= 0.0) or np.any(tail <= 0.0):
        raise HypergeometricError("fundamental solutions need x in (0, 1)")
    half = n / 2.0
    u1 = _times_power(-half, x, *_hyp_with_derivatives(-m, half - m, 1.0 - half, x, tail))
    u2 = _hyp_with_derivatives(half - m, n - m, half + 1.0, x, tail)
    u3_parts = _hyp_with_derivatives(half + 1.0 - m, 1.0 - m, 1.0 - half, x, tail)
    factored = _times_tail_power(n + 1.0 - 2 * m, tail, *u3_parts)
    u3 = _times_power(-half, x, *factored)
    u4 = _hyp_with_derivatives(m, m - half, 1.0 + half, x, tail)
    return FundamentalSolutions(
        x, u1[0], u2[0], u3[0], u4[0], u1[1], u2[1], u3[1], u4[1], u1[2], u2[2], u3[2], u4[2]
    )


def u3_direct(n: int, m: int, x: np.ndarray | float) -> np.ndarray:
    """x^(-n/2) F(m-n, m-n/2; 1-n/2; x); nur fuer ungerades n eindeutig."""

    _check(n, m)
    if n % 2 == 0:
        raise HypergeometricError("the direct form of u3 is degenerate for even n; use the factored form")
    x = np.asarray(x, dtype=float)
    return x ** (-n / 2.0) * hyp2f1_values(m - n, m - n / 2.0, 1.0 - n / 2.0, x)


def h_operator(n: int, m: int, x: np.ndarray, value: np.ndarray, first: np.ndarray, second: np.ndarray) -> np.ndarray:
    half = n / 2.0
    return x * (1.0 - x) * second + (half + 1.0 - (1.5 * n + 1.0 - 2 * m) * x) * first - (half - m) * (n - m) * value


def g_operator(n: int, m: int, x: np.ndarray, value: np.ndarray, first: np.ndarray, second: np.ndarray) -> np.ndarray:
    half = n / 2.0
    return x * (1.0 - x) * second + (half + 1.0 - (2 * m + 1.0 - half) * x) * first - m * (m - half) * value


def g_source(n: int, m: int, x: np.ndarray, h: np.ndarray, one_minus_x: np.ndarray | None = None) -> np.ndarray:
    """Rechte Seite f(x) = (1/2)(1+x)(1-x)^(n-2m-2) H(x) der G-Gleichung."""

    tail = 1.0 - x if one_minus_x is None else one_minus_x
    return 0.5 * (1.0 + x) * tail ** (n - 2 * m - 2) * h


def liouville_constant(n: int, m: int) -> tuple[float, float]:
    """(c_mn kalibriert bei x = 1/2, exakter Grenzwert -n/2)."""

    _check(n, m)
    sol = fundamental_solutions(n, m, np.array([0.5]))
    direct = float(sol.du3[0] * sol.u4[0] - sol.u3[0] * sol.du4[0])
    calibrated = direct * 0.5 ** (n / 2.0 + 1.0) * 0.5 ** (2 * m - n)
    return calibrated, -n / 2.0


def wronskian(n: int, m: int, x: np.ndarray | float) -> WronskianValues:
    """W = u3' u4 - u3 u4' direkt und nach Liouville c_mn x^(-n/2-1)(1-x)^(n-2m)."""

    x = np.asarray(x, dtype=float)
    sol = fundamental_solutions(n, m, x)
    c_mn, _ = liouville_constant(n, m)
    direct = sol.du3 * sol.u4 - sol.u3 * sol.du4
    closed = c_mn * x ** (-n / 2.0 - 1.0) * (1.0 - x) ** (n - 2 * m)
    return WronskianValues(direct, closed, c_mn)
