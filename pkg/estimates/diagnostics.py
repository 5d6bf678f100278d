"""Punktweise Diagnosen zum Beweis der L^p-Schranken fuer CZ-Kerne (Kugelmodell).

A = (1-|x|^2)(1-|y|^2) + |x-y|^2,  z = phi_x(y) = ((x-y)(1-|x|^2) + x |x-y|^2) / A,  A r^2 = |x-y|^2."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import quad

from geometry.isometries import phi
from geometry.points import HyperbolicModel, require_interior
from geometry.sphere import sphere_area, sphere_rule
from util.quadrature import composite_rule, graded_knots

_LOGGER = logging.getLogger(__name__)

SphereFunction = Callable[[np.ndarray], np.ndarray]
EuclideanFunction = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class AQuantityCheck:
    """Maximaler relativer Defekt von A r^2 = |x-y|^2 und minimale Reserven der Ungleichungen."""

    identity_defect: float
    product_slack: float
    root_slack: float

    def holds(self, tolerance: float = 1e-12) -> bool:
        return self.identity_defect <= tolerance and self.product_slack >= -tolerance and self.root_slack >= -tolerance


@dataclass(frozen=True)
class CZDiagnostics:
    """Suprema der drei Verhaeltnisse der K1/K2/K3-Aufspaltung."""

    direction_ratio: float
    expansion_ratio: float
    k2_ratio: float


@dataclass(frozen=True)
class K3WeightResult:
    radii: tuple[float, ...]
    values: tuple[float, ...]

    @property
    def growth(self) -> float:
        return max(self.values) / min(self.values)


def a_quantity(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return (1.0 - np.sum(x * x, axis=-1)) * (1.0 - np.sum(y * y, axis=-1)) + np.sum((x - y) ** 2, axis=-1)


def a_quantity_identities(x: np.ndarray, y: np.ndarray) -> AQuantityCheck:
    """Prueft (1-|x|^2)(1-|y|^2) <= A, A r^2 = |x-y|^2 und (1-|x|^2) <= A^(1/2)."""

    x = require_interior(np.atleast_2d(x), HyperbolicModel.BALL)
    y = require_interior(np.atleast_2d(y), HyperbolicModel.BALL)
    a = a_quantity(x, y)
    dist2 = np.sum((x - y) ** 2, axis=-1)
    r2 = np.sum(phi(x, y) ** 2, axis=-1)
    identity = np.abs(a * r2 - dist2) / np.maximum(dist2, 1e-300)
    wx = 1.0 - np.sum(x * x, axis=-1)
    wy = 1.0 - np.sum(y * y, axis=-1)
    return AQuantityCheck(
        identity_defect=float(np.max(identity)),
        product_slack=float(np.min((a - wx * wy) / a)),
        root_slack=float(np.min((np.sqrt(a) - wx) / np.sqrt(a))),
    )


def cz_diagnostics(
    omega: SphereFunction, n: int, m: int, p: float, x: np.ndarray, y: np.ndarray
) -> CZDiagnostics:
    """Werte die Beweisschritte fuer b = Omega(w) r^(-n) (1-r^2)^(n-m-1) punktweise aus.

    - |Omega(z/r) - Omega((x-y)/|x-y|)| / r
    - |A^(n/2) - (1-|x|^2)^(n/p) (1-|y|^2)^(n/q)| / (|x-y| A^((n-1)/2))
    - |K2| / (r^2 |x-y|^(-n) (1-|x|^2)^(n/p) (1-|y|^2)^(n/q))
    """

    x = np.atleast_2d(x)
    y = np.atleast_2d(y)
    q = p / (p - 1.0)
    a = a_quantity(x, y)
    diff = x - y
    dist = np.linalg.norm(diff, axis=-1)
    z = phi(x, y)
    r = np.linalg.norm(z, axis=-1)
    direction = np.abs(omega(z / r[:, None]) - omega(diff / dist[:, None])) / r
    wx = 1.0 - np.sum(x * x, axis=-1)
    wy = 1.0 - np.sum(y * y, axis=-1)
    weights = wx ** (n / p) * wy ** (n / q)
    expansion = np.abs(a ** (n / 2.0) - weights) / (dist * a ** ((n - 1) / 2.0))
    base = np.abs(omega(diff / dist[:, None])) * weights / dist**n
    k2 = np.abs((1.0 - r * r) ** (n - m - 1) - 1.0) * base
    k2_ratio = k2 / (r * r * weights / dist**n)
    return CZDiagnostics(float(np.max(direction)), float(np.max(expansion)), float(np.max(k2_ratio)))


def k3_weight_test(n: int, p: float, radii: np.ndarray) -> K3WeightResult:
    """int_B K3(x, y) h(y)^q dV(y) / h(x)^q fuer K3 = (1-|x|+|x-y|)^(-n), h = (1-|y|^2)^(-1/(pq)), Lebesgue-Mass.

    Polarkoordinaten um x; die Randsingularitaet (1-|y|^2)^(-1/p) wird mit
    algebraischem Gewicht integriert, der Winkel um die Achse x per adaptiver Quadratur.
    """

    q = p / (p - 1.0)
    values = []
    for rho in np.asarray(radii, dtype=float):
        gap = 1.0 - rho

        def radial(theta: float) -> float:
            c = rho * math.cos(theta)
            root = math.sqrt(c * c + 1.0 - rho * rho)
            s_max = -c + root
            s_other = c + root

            def integrand(s: float) -> float:
                return (gap + s) ** (-n) * s ** (n - 1) * (s + s_other) ** (-1.0 / p)

            value, _ = quad(integrand, 0.0, s_max, weight="alg", wvar=(0.0, -1.0 / p), limit=200)
            return value * math.sin(theta) ** (n - 2)

        angular, _ = quad(radial, 0.0, math.pi, limit=200, epsrel=1e-8)
        integral = sphere_area(n - 1) * angular
        values.append(integral * (1.0 - rho * rho) ** (1.0 / p))
    return K3WeightResult(tuple(float(r) for r in radii), tuple(values))


def truncated_kernel_bound(n: int) -> tuple[float, float]:
    """omega_{n-1} 2^n int_0^(1/2) (1-r^2)^(-n) dr und derselbe Wert in geodaetischen Polarkoordinaten."""

    closed, _ = quad(lambda r: (1.0 - r * r) ** (-n), 0.0, 0.5, epsrel=1e-12)
    closed *= sphere_area(n) * 2.0**n
    reach = 2.0 * math.atanh(0.5)
    geodesic, _ = quad(
        lambda d: math.tanh(0.5 * d) ** (1 - n) * math.sinh(d) ** (n - 1), 0.0, reach, epsrel=1e-12
    )
    return closed, sphere_area(n) * geodesic


def cz_cutoff_sensitivity(
    omega: SphereFunction,
    f: EuclideanFunction,
    x: np.ndarray,
    eps_list: tuple[float, ...] | list[float],
    reach: float,
    radial_panels: int = 24,
    radial_nodes: int = 8,
    sphere_nodes: int = 8,
    azimuth: int = 16,
) -> tuple[float, ...]:
    """int_{eps < |x-y| < reach} |x-y|^(-n) Omega((x-y)/|x-y|) f(y) dy fuer jede Abschneidung eps.

    `reach` muss den Traeger von f (von x aus gesehen) ueberdecken.
    """

    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    dirs, weights = sphere_rule(n, sphere_nodes, azimuth)
    angular = omega(dirs) * weights
    results = []
    for eps in eps_list:
        knots = graded_knots(eps, reach, radial_panels, 0.6, toward="left")
        s, ws = composite_rule(knots, radial_nodes)
        points = x[None, None, :] - s[:, None, None] * dirs[None, :, :]
        values = f(points.reshape(-1, n)).reshape(s.size, dirs.shape[0])
        results.append(float(np.sum(ws[:, None] / s[:, None] * angular[None, :] * values)))
    _LOGGER.debug("truncated singular integral values %s", results)
    return tuple(results)
