"""Halbe Dimension m = n/2: beide homogenen Gleichungen fallen zusammen.

    H = a x^(-n/2) + b,
    G = c x^(-n/2) + d + (1/2) int_{1/2}^x t^(-n/2-1) I(t) dt,
    I(t) = int_0^t s^(n/2) (1+s) (1-s)^(-3) (a s^(-n/2) + b) ds.

Das innere Integral ist geschlossen: der a-Anteil ist t/(1-t)^2, der b-Anteil
wird nach Potenzen von u = 1 - s entwickelt."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb

import numpy as np

from riesz_kernel.kernel_spec import KernelCase, KernelSpec, KernelSpecError
from riesz_kernel.profiles import RadialProfiles, XValues
from riesz_kernel.quadrature import GradedTable
from util.quadrature import gauss_legendre

_LOGGER = logging.getLogger(__name__)


def _power_coefficients(k: int) -> np.ndarray:
    """Koeffizienten p_j von (1-u)^k (2-u) in u."""

    base = np.array([comb(k, j) * (-1.0) ** j for j in range(k + 1)])
    out = np.zeros(k + 2)
    out[:-1] += 2.0 * base
    out[1:] -= base
    return out


def _b_integral(k: int, t: np.ndarray, tail: np.ndarray) -> np.ndarray:
    """J(t) = int_0^t s^k (1+s)(1-s)^(-3) ds."""

    out = np.empty_like(t)
    low = t <= 0.5
    if np.any(low):
        xi, w = gauss_legendre(16)
        nodes = 0.5 * t[low, None] * (xi + 1.0)
        values = nodes**k * (1.0 + nodes) * (1.0 - nodes) ** -3.0
        out[low] = 0.5 * t[low] * (values @ w)
    if np.any(~low):
        u = tail[~low]
        total = np.zeros_like(u)
        for j, coefficient in enumerate(_power_coefficients(k)):
            if j == 2:
                total += coefficient * -np.log(u)
            else:
                total += coefficient * (1.0 - u ** (j - 2.0)) / (j - 2.0)
        out[~low] = total
    return out


@dataclass(frozen=True)
class HalfDimProfiles(RadialProfiles):
    """Profile fuer gerades n und m = n/2; a = spec.normalization, b = -a als Vorgabe.

    Attributes:
        b: Konstanter Anteil von H (None bedeutet -a).
        c: Koeffizient von x^(-n/2) in G.
        d: Konstanter Anteil von G.
    """

    b: float | None = None
    c: float = 0.0
    d: float = 0.0
    _outer: GradedTable = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.spec.case is not KernelCase.HALF_DIM:
            raise KernelSpecError("half-dimension profiles need 2m = n")
        object.__setattr__(self, "_outer", GradedTable(self._outer_integrand, anchor=0.5))
        _LOGGER.info(
            "constructed half-dimension profiles for n = %d (a=%g, b=%g, c=%g, d=%g)",
            self.spec.n,
            self.a,
            self.b_value,
            self.c,
            self.d,
        )

    @property
    def a(self) -> float:
        return self.a0

    @property
    def b_value(self) -> float:
        return -self.a if self.b is None else self.b

    def renormalized(self, a0: float) -> "HalfDimProfiles":
        factor = a0 / self.a if self.a != 0.0 else 0.0
        b = None if self.b is None else factor * self.b
        return HalfDimProfiles(self.spec.with_normalization(a0), b, factor * self.c, factor * self.d)

    def inner_integral(self, t: np.ndarray, tail: np.ndarray) -> np.ndarray:
        k = self.spec.n // 2
        return self.a * t / tail**2 + self.b_value * _b_integral(k, t, tail)

    def _outer_integrand(self, t: np.ndarray, tail: np.ndarray) -> np.ndarray:
        return 0.5 * t ** (-self.spec.n / 2.0 - 1.0) * self.inner_integral(t, tail)

    def x_values(self, x: np.ndarray, one_minus_x: np.ndarray | None = None) -> XValues:
        x = np.asarray(x, dtype=float)
        tail = 1.0 - x if one_minus_x is None else np.asarray(one_minus_x, dtype=float)
        half = self.spec.n / 2.0
        k = self.spec.n // 2
        a, b, c, d = self.a, self.b_value, self.c, self.d
        inner = self.inner_integral(x, tail)
        d_inner = (1.0 + x) * tail**-3.0 * (a + b * x**k)
        h = a * x**-half + b
        dh = -half * a * x ** (-half - 1.0)
        d2h = half * (half + 1.0) * a * x ** (-half - 2.0)
        g = c * x**-half + d + self._outer(x, tail)
        dg = -half * c * x ** (-half - 1.0) + 0.5 * x ** (-half - 1.0) * inner
        d2g = half * (half + 1.0) * c * x ** (-half - 2.0) + 0.5 * (
            -(half + 1.0) * x ** (-half - 2.0) * inner + x ** (-half - 1.0) * d_inner
        )
        return XValues(x, tail, g, dg, d2g, h, dh, d2h)


def half_dim_profiles(n: int, a: float, b: float, c: float, d: float) -> HalfDimProfiles:
    """Profile zu frei gewaehlten Konstanten (a, b, c, d).

    Raises:
        KernelSpecError: n ungerade.
    """

    if n % 2:
        raise KernelSpecError("the half-dimension case needs even n")
    return HalfDimProfiles(KernelSpec(n=n, m=n // 2, a0=a), b, c, d)
