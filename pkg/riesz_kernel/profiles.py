"""Radiale Profile A1..A4 des Riesz-Kerns und ihre Konstruktion im generischen Fall.

In der Variablen x = r^2 gilt A1(r) = G(x), A3(r) = H(x) und
A2(r) = 2G'(x) - (1-x)^(n-2m-2) H(x). A4 ist ueber T = m A1 + r^2 A2 definiert:

    A4 = (1-r^2)^2 / r * [T' + 2(n-2m) r T / (1-r^2) + (n-m) r A2].

Im generischen Fall (0 < m, n - 2m > 1) ist H = a0 u1 und G = c u3 + d u4 mit
c(0) = 0, d(1) = 0 (Variation der Konstanten)."""

from __future__ import annotations

import copy
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np

from models.types import FDScheme
from riesz_kernel.kernel_spec import KernelCase, KernelSpec, KernelSpecError
from riesz_kernel.quadrature import GradedTable, ProfileConstructionError
from special_functions.fundamental import fundamental_solutions, liouville_constant
from util.finite_differences import directional_first

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class XValues:
    """G, H mit Ableitungen bis Ordnung 2 in x sowie c, d (generischer Fall)."""

    x: np.ndarray
    tail: np.ndarray
    g: np.ndarray
    dg: np.ndarray
    d2g: np.ndarray
    h: np.ndarray
    dh: np.ndarray
    d2h: np.ndarray
    c: np.ndarray | None = None
    d: np.ndarray | None = None
    dc: np.ndarray | None = None
    dd: np.ndarray | None = None


@dataclass(frozen=True)
class ProfileValues:
    r: np.ndarray
    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray
    a4: np.ndarray
    da1: np.ndarray
    da2: np.ndarray
    da3: np.ndarray


def _radius_tail(r: np.ndarray) -> np.ndarray:
    return (1.0 - r) * (1.0 + r)


@dataclass(frozen=True)
class RadialProfiles(ABC):
    """Gemeinsame Auswertung der A-Profile aus G und H.

    Attributes:
        spec: Kernparameter; `spec.normalization` ist der lineare Vorfaktor a0.
    """

    spec: KernelSpec

    @property
    def a0(self) -> float:
        return self.spec.normalization

    @abstractmethod
    def x_values(self, x: np.ndarray, one_minus_x: np.ndarray | None = None) -> XValues:
        """G, H und Ableitungen an x = r^2."""

    def renormalized(self, a0: float) -> "RadialProfiles":
        """Dieselben Tabellen mit neuer Normierung (alle Profile sind linear in a0)."""

        clone = copy.copy(self)
        object.__setattr__(clone, "spec", self.spec.with_normalization(a0))
        return clone

    def evaluate(self, r: np.ndarray | float) -> ProfileValues:
        """A1..A4 und Ableitungen von A1..A3 nach r.

        Raises:
            ProfileConstructionError: r ausserhalb (0, 1).
        """

        r = np.asarray(r, dtype=float)
        if np.any(r <= 0.0) or np.any(r >= 1.0):
            raise ProfileConstructionError("profiles are defined for r in (0, 1)")
        n, m, e = self.spec.n, self.spec.m, self.spec.exponent_gap
        tail = _radius_tail(r)
        xv = self.x_values(r * r, tail)
        a1 = xv.g
        da1 = 2.0 * r * xv.dg
        a3 = xv.h
        da3 = 2.0 * r * xv.dh
        scale = 1.0 + self.spec.a2_perturbation
        a2 = scale * (2.0 * xv.dg - tail ** (e - 2) * xv.h)
        da2 = scale * 2.0 * r * (2.0 * xv.d2g + (e - 2) * tail ** (e - 3) * xv.h - tail ** (e - 2) * xv.dh)
        t_val = m * a1 + r * r * a2
        dt_val = m * da1 + 2.0 * r * a2 + r * r * da2
        a4 = tail**2 / r * (dt_val + 2.0 * e * r * t_val / tail + (n - m) * r * a2)
        return ProfileValues(r, a1, a2, a3, a4, da1, da2, da3)

    def a1(self, r: np.ndarray | float) -> np.ndarray:
        return self.evaluate(r).a1

    def a2(self, r: np.ndarray | float) -> np.ndarray:
        return self.evaluate(r).a2

    def a3(self, r: np.ndarray | float) -> np.ndarray:
        return self.evaluate(r).a3

    def a4(self, r: np.ndarray | float) -> np.ndarray:
        return self.evaluate(r).a4

    def a4_derivative(self, r: np.ndarray | float, scheme: FDScheme | None = None) -> np.ndarray:
        """A4'(r) durch zentrale Differenzen (Richardson)."""

        scheme = scheme or FDScheme(step=1e-4, richardson=True)
        r = np.atleast_1d(np.asarray(r, dtype=float))

        def field_fn(points: np.ndarray) -> np.ndarray:
            return self.evaluate(points[:, 0]).a4

        return np.array([directional_first(field_fn, np.array([value]), np.eye(1), scheme)[0] for value in r])


@dataclass(frozen=True)
class GenericProfiles(RadialProfiles):
    """Bester-Abfall-Kern fuer 0 < m, n - 2m > 1 (b = 0, c(0) = 0, d(1) = 0)."""

    c_mn: float = field(init=False)
    _c_table: GradedTable = field(init=False, repr=False)
    _d_table: GradedTable = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.spec.case is not KernelCase.GENERIC:
            raise KernelSpecError(f"generic profiles need 0 < m and n - 2m > 1, got {self.spec.case.value}")
        n, m = self.spec.n, self.spec.m
        c_mn, _ = liouville_constant(n, m)
        object.__setattr__(self, "c_mn", c_mn)
        factor = 0.5 / c_mn
        half = n / 2.0

        def source(t: np.ndarray, tail: np.ndarray, which: str) -> np.ndarray:
            sol = fundamental_solutions(n, m, t, tail)
            base = sol.u1 * t**half * (1.0 + t) * tail**-3.0
            return factor * base * (sol.u4 if which == "c" else sol.u3)

        # Tabellen mit a0 = 1; die Normierung wird bei der Auswertung multipliziert.
        object.__setattr__(self, "_c_table", GradedTable(lambda t, tail: source(t, tail, "c"), anchor=0.0))
        object.__setattr__(self, "_d_table", GradedTable(lambda t, tail: source(t, tail, "d"), anchor=1.0))
        _LOGGER.info("constructed generic profiles for (n, m) = (%d, %d), c_mn = %.12g", n, m, c_mn)

    def x_values(self, x: np.ndarray, one_minus_x: np.ndarray | None = None) -> XValues:
        n, m = self.spec.n, self.spec.m
        x = np.asarray(x, dtype=float)
        tail = 1.0 - x if one_minus_x is None else np.asarray(one_minus_x, dtype=float)
        sol = fundamental_solutions(n, m, x, tail)
        a0 = self.a0
        shift = self.spec.harmonic_shift
        h, dh, d2h = a0 * sol.u1, a0 * sol.du1, a0 * sol.d2u1
        weight = 0.5 / self.c_mn * h * (1.0 + x) * x ** (n / 2.0) * tail**-3.0
        c = a0 * self._c_table(x, tail)
        d = -a0 * self._d_table(x, tail)
        dc = weight * sol.u4
        dd = -weight * sol.u3
        g = c * sol.u3 + (d + shift) * sol.u4
        dg = c * sol.du3 + (d + shift) * sol.du4
        d2g = c * sol.d2u3 + (d + shift) * sol.d2u4 + dc * sol.du3 + dd * sol.du4
        if not (np.all(np.isfinite(g)) and np.all(np.isfinite(dg))):
            raise ProfileConstructionError("non-finite G while evaluating generic profiles")
        return XValues(x, tail, g, dg, d2g, h, dh, d2h, c, d, dc, dd)


def radial_profiles(spec: KernelSpec) -> RadialProfiles:
    """Profile passend zu `spec.case` (generisch, skalar oder halbe Dimension)."""

    if spec.case is KernelCase.GENERIC:
        return GenericProfiles(spec)
    if spec.case is KernelCase.SCALAR:
        from riesz_kernel.scalar import ScalarProfiles

        return ScalarProfiles(spec)
    from riesz_kernel.half_dim import HalfDimProfiles

    return HalfDimProfiles(spec)
