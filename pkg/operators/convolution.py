"""Skalare Faltungen mit glatten, abgeschnittenen Kernen und der Tausch X_i C_a = C_{X_i a}."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from geometry.frames import domain_check
from geometry.points import HyperbolicModel, Point
from models.types import FDScheme, QuadratureSpec
from operators.bump import bump_profile
from operators.potential import Density, KernelFunction, convolve_once
from riesz_kernel.assembly import relative_radius
from util.finite_differences import axis_derivatives, directional_first


@dataclass(frozen=True)
class ExchangeResult:
    lhs: float
    rhs: float

    @property
    def relative_defect(self) -> float:
        return abs(self.lhs - self.rhs) / max(abs(self.lhs), abs(self.rhs), 1e-14)


def truncated_test_kernel(n: int, radius: float = 0.6) -> tuple[KernelFunction, float]:
    """Nicht-radialer glatter Kern a(z) = beta(r(z, e)/radius) (1 + z_1 + z_n^2).

    Returns:
        (Kern, geodaetischer Traegerradius um e).
    """

    def kernel(z: np.ndarray) -> np.ndarray:
        z = np.atleast_2d(z)
        return bump_profile(relative_radius(z) / radius) * (1.0 + z[:, 0] + z[:, -1] ** 2)

    return kernel, 2.0 * float(np.arctanh(radius))


def frame_derivative_kernel(kernel_fn: KernelFunction, i: int, scheme: FDScheme) -> KernelFunction:
    """(X_i a)(z) = z_n d_i a(z) per Differenzen."""

    valid = domain_check(HyperbolicModel.HALF_SPACE)

    def derived(z: np.ndarray) -> np.ndarray:
        z = np.atleast_2d(z)
        _, first, _ = axis_derivatives(kernel_fn, z, scheme, valid)
        return z[:, -1] * first[:, i]

    return derived


def convolution_derivative_exchange(
    kernel_fn: KernelFunction,
    kernel_radius: float,
    density: Density,
    x: Point,
    i: int,
    q: QuadratureSpec,
    scheme: FDScheme,
) -> ExchangeResult:
    """Vergleicht X_i (C_a u)(x) (Differenzen in x) mit (C_{X_i a} u)(x).

    Der Integrationsbereich ist die feste Kugel vom Radius `kernel_radius` um e, die
    Quadratur haengt also glatt von x ab.
    """

    x.require(HyperbolicModel.HALF_SPACE)

    def convolved(points: np.ndarray) -> np.ndarray:
        return np.array(
            [convolve_once(kernel_fn, density, p, None, q, kernel_radius)[0] for p in np.atleast_2d(points)]
        )

    direction = np.zeros(x.n)
    direction[i] = 1.0
    lhs = x.coords[-1] * float(
        directional_first(convolved, x.coords, direction, scheme, domain_check(HyperbolicModel.HALF_SPACE))[0]
    )
    derivative_kernel = frame_derivative_kernel(kernel_fn, i, scheme)
    rhs = float(convolve_once(derivative_kernel, density, x.coords, None, q, kernel_radius)[0])
    return ExchangeResult(lhs, rhs)
