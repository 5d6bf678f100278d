"""Zerlegung von Z_j Z_i a fuer a(z) = psi(r) Q(z) in zulaessige Anteile und den Restkern.

    Z_j Z_i a = psi'' Z_i r Z_j r Q + psi' Z_j Z_i r Q + psi' Z_i r Z_j Q + psi' Z_j r Z_i Q + psi Z_j Z_i Q.

Die letzten drei Terme sind m-zulaessig. In den ersten beiden wird Q durch Q(e),
psi durch phi = c0 r^(2-n) (1-r^2)^(n-m-1) und schliesslich phi', phi'' durch
(r^(2-n))', (r^(2-n))'' (1-r^2)^(n-m-1) ersetzt; jede Ersetzung kostet einen
zulaessigen Kern. Uebrig bleibt

    c0 Q(e) (1-r^2)^(n-m-1) Z_j Z_i (r^(2-n)),

der im Kugelmodell mit Y_j = (1-r^2) d_j in einen (m-1)-CZ-Kern und einen
(m-1)-zulaessigen Kern zerfaellt."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from double_forms.generators import gamma_coefficients, gamma_power_coefficients
from estimates.auxiliary import auxiliary_derivatives, invariant_jet
from estimates.errors import CriticalRangeError, KernelClassError
from estimates.kernel_classes import (
    KernelClass,
    calderon_zygmund_class,
    classify_kernel,
    ray_points,
    sample_kernel,
)
from geometry.isometries import cayley_to_ball
from models.types import FDOrder, FDScheme, Tolerances
from riesz_kernel.assembly import relative_radius
from riesz_kernel.kernel_spec import KernelSpec
from riesz_kernel.profiles import RadialProfiles, radial_profiles

_LOGGER = logging.getLogger(__name__)

Kernel = Callable[[np.ndarray], np.ndarray]

JET_SCHEME = FDScheme(step=1e-3, order=FDOrder.CENTRAL4)
LEADING_RADIUS = 1e-5


@dataclass(frozen=True)
class ProfileJet:
    psi: np.ndarray
    dpsi: np.ndarray
    d2psi: np.ndarray


def profile_jet(profiles: RadialProfiles, r: np.ndarray) -> ProfileJet:
    """psi = A1 = G(r^2) mit psi' = 2r G', psi'' = 2G' + 4 r^2 G''."""

    r = np.asarray(r, dtype=float)
    values = profiles.x_values(r * r, (1.0 - r) * (1.0 + r))
    return ProfileJet(values.g, 2.0 * r * values.dg, 2.0 * values.dg + 4.0 * r * r * values.d2g)


def leading_coefficient(profiles: RadialProfiles, radius: float = LEADING_RADIUS) -> float:
    """c0 mit psi(r) ~ c0 r^(2-n) fuer r -> 0."""

    n = profiles.spec.n
    return float(profile_jet(profiles, np.array([radius])).psi[0] * radius ** (n - 2))


def coefficient_factor(n: int, m: int, row: int = 0, col: int = 0) -> Kernel:
    """Beschraenkter Faktor Q(z) = (gamma^m)_{IJ}(z); Q = 1 fuer m = 0."""

    def factor(z: np.ndarray) -> np.ndarray:
        z = np.atleast_2d(z)
        if m == 0:
            return np.ones(z.shape[0])
        return gamma_power_coefficients(gamma_coefficients(z), m)[:, row, col]

    return factor


def _power_jet(n: int, r: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """r^(2-n) mit erster und zweiter Ableitung."""

    return r ** (2 - n), (2 - n) * r ** (1 - n), (2 - n) * (1 - n) * r ** (-n)


def _weight_jet(k: int, r: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(1 - r^2)^k mit erster und zweiter Ableitung."""

    tail = (1.0 - r) * (1.0 + r)
    value = tail**k
    first = -2.0 * k * r * tail ** (k - 1)
    second = -2.0 * k * tail ** (k - 1) + 4.0 * k * (k - 1) * r * r * tail ** (k - 2)
    return value, first, second


@dataclass(frozen=True)
class BallResidualSplit:
    """(1-r^2)^(n-m-1) Y_j Y_i |z|^(2-n) = CZ-Anteil + zulaessiger Anteil (Kugelkoordinaten)."""

    n: int
    m: int
    i: int
    j: int

    def _derivatives(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        z = np.atleast_2d(z)
        r = np.linalg.norm(z, axis=-1)
        first = (2 - self.n) * z[:, self.i] * r ** (-self.n)
        delta = 1.0 if self.i == self.j else 0.0
        second = (2 - self.n) * r ** (-self.n) * (delta - self.n * z[:, self.i] * z[:, self.j] / r**2)
        return z, r, first, second

    def omega(self, w: np.ndarray) -> np.ndarray:
        """Omega(w) = (2-n)(delta_ij - n w_i w_j) = r^n d_i d_j |z|^(2-n)."""

        delta = 1.0 if self.i == self.j else 0.0
        return (2 - self.n) * (delta - self.n * w[..., self.i] * w[..., self.j])

    def total(self, z: np.ndarray) -> np.ndarray:
        z, r, first, second = self._derivatives(z)
        tail = (1.0 - r) * (1.0 + r)
        y_second = tail**2 * second - 2.0 * z[:, self.j] * tail * first
        return tail ** (self.n - self.m - 1) * y_second

    def singular_part(self, z: np.ndarray) -> np.ndarray:
        z = np.atleast_2d(z)
        r = np.linalg.norm(z, axis=-1)
        tail = (1.0 - r) * (1.0 + r)
        return self.omega(z / r[:, None]) * r ** (-self.n) * tail ** (self.n - self.m)

    def admissible_part(self, z: np.ndarray) -> np.ndarray:
        return self.total(z) - self.singular_part(z)

    def gain_ratio(self, z: np.ndarray) -> float:
        """sup |Y_j Y_i |z|^(2-n)| r^n / (1 - r^2): der Faktor (1 - r^2) des Y-Wegs."""

        z, r, first, second = self._derivatives(z)
        tail = (1.0 - r) * (1.0 + r)
        y_second = tail**2 * second - 2.0 * z[:, self.j] * tail * first
        return float(np.max(np.abs(y_second) * r**self.n / tail))


@dataclass(frozen=True)
class SecondDerivativeDecomposition:
    """Anteile von Z_j Z_i a mit ihren Klassen."""

    profiles: RadialProfiles
    i: int
    j: int
    factor: Kernel
    scheme: FDScheme
    c0: float
    q_at_e: float
    parts: dict[str, Kernel] = field(default_factory=dict)
    classes: dict[str, KernelClass] = field(default_factory=dict)
    residual_split: BallResidualSplit | None = None
    residual_classes: dict[str, KernelClass] = field(default_factory=dict)

    def kernel(self, z: np.ndarray) -> np.ndarray:
        """a(z) = psi(r) Q(z)."""

        z = np.atleast_2d(z)
        return profile_jet(self.profiles, relative_radius(z)).psi * self.factor(z)

    def oracle(self, z: np.ndarray) -> np.ndarray:
        """Z_j Z_i a per invarianter Differenzen."""

        _, _, second = invariant_jet(self.kernel, np.atleast_2d(z), self.scheme)
        return second[:, self.j, self.i]

    def reassembled(self, z: np.ndarray) -> np.ndarray:
        return sum(part(z) for part in self.parts.values())


def _build_parts(
    profiles: RadialProfiles, i: int, j: int, factor: Kernel, scheme: FDScheme, c0: float, q_at_e: float
) -> dict[str, Kernel]:
    n, m = profiles.spec.n, profiles.spec.m
    k = n - m - 1

    def pieces(z: np.ndarray):
        z = np.atleast_2d(z)
        aux = auxiliary_derivatives(z)
        jet = profile_jet(profiles, aux.r)
        q_values, q_first, q_second = invariant_jet(factor, z, scheme)
        return aux, jet, q_values, q_first, q_second

    def radial_pair(aux) -> tuple[np.ndarray, np.ndarray]:
        return aux.first[:, i] * aux.first[:, j], aux.second[:, j, i]

    constant_factor = m == 0

    def q_derivative_i(z: np.ndarray) -> np.ndarray:
        if constant_factor:
            return np.zeros(np.atleast_2d(z).shape[0])
        aux, jet, _, q_first, _ = pieces(z)
        return jet.dpsi * aux.first[:, i] * q_first[:, j]

    def q_derivative_j(z: np.ndarray) -> np.ndarray:
        if constant_factor:
            return np.zeros(np.atleast_2d(z).shape[0])
        aux, jet, _, q_first, _ = pieces(z)
        return jet.dpsi * aux.first[:, j] * q_first[:, i]

    def q_second(z: np.ndarray) -> np.ndarray:
        if constant_factor:
            return np.zeros(np.atleast_2d(z).shape[0])
        _, jet, _, _, q_second_values = pieces(z)
        return jet.psi * q_second_values[:, j, i]

    def q_oscillation(z: np.ndarray) -> np.ndarray:
        aux, jet, q_values, _, _ = pieces(z)
        product, mixed = radial_pair(aux)
        return (jet.d2psi * product + jet.dpsi * mixed) * (q_values - q_at_e)

    def model_jet(r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        power, dpower, d2power = _power_jet(n, r)
        weight, dweight, d2weight = _weight_jet(k, r)
        second = c0 * (d2power * weight + 2.0 * dpower * dweight + power * d2weight)
        return second, c0 * (dpower * weight + power * dweight)

    def profile_remainder(z: np.ndarray) -> np.ndarray:
        aux = auxiliary_derivatives(np.atleast_2d(z))
        jet = profile_jet(profiles, aux.r)
        product, mixed = radial_pair(aux)
        d2phi, dphi = model_jet(aux.r)
        return q_at_e * ((jet.d2psi - d2phi) * product + (jet.dpsi - dphi) * mixed)

    def weight_commutator(z: np.ndarray) -> np.ndarray:
        aux = auxiliary_derivatives(np.atleast_2d(z))
        product, mixed = radial_pair(aux)
        power, dpower, _ = _power_jet(n, aux.r)
        weight, dweight, d2weight = _weight_jet(k, aux.r)
        return q_at_e * c0 * ((2.0 * dpower * dweight + power * d2weight) * product + power * dweight * mixed)

    def residual(z: np.ndarray) -> np.ndarray:
        aux = auxiliary_derivatives(np.atleast_2d(z))
        product, mixed = radial_pair(aux)
        _, dpower, d2power = _power_jet(n, aux.r)
        weight, _, _ = _weight_jet(k, aux.r)
        return q_at_e * c0 * weight * (d2power * product + dpower * mixed)

    return {
        "q_derivative_i": q_derivative_i,
        "q_derivative_j": q_derivative_j,
        "q_second": q_second,
        "q_oscillation": q_oscillation,
        "profile_remainder": profile_remainder,
        "weight_commutator": weight_commutator,
        "residual": residual,
    }


ADMISSIBLE_PARTS = (
    "q_derivative_i",
    "q_derivative_j",
    "q_second",
    "q_oscillation",
    "profile_remainder",
    "weight_commutator",
)


def decompose_second_derivative(
    n: int,
    m: int,
    i: int,
    j: int,
    profiles: RadialProfiles | None = None,
    row: int = 0,
    col: int = 0,
    scheme: FDScheme = JET_SCHEME,
    tolerances: Tolerances | None = None,
    samples: int = 10,
) -> SecondDerivativeDecomposition:
    """Zerlegt Z_j Z_i a (0-basierte Indizes, j < n-1) und klassifiziert jeden Anteil.

    Raises:
        CriticalRangeError: |n - 2m| <= 1 oder n < 3.
        KernelClassError: Ein Anteil verletzt seine Klasse.
    """

    if abs(n - 2 * m) <= 1 or n < 3:
        raise CriticalRangeError(f"decomposition needs |n - 2m| > 1 and n >= 3, got (n, m) = ({n}, {m})")
    if not 0 <= j < n - 1 or not 0 <= i < n:
        raise KernelClassError(f"indices must satisfy 0 <= i < n and 0 <= j < n - 1, got ({i}, {j})")
    profiles = profiles or radial_profiles(KernelSpec(n=n, m=m))
    tolerances = tolerances or Tolerances()
    factor = coefficient_factor(n, m, row, col)
    c0 = leading_coefficient(profiles)
    e = np.zeros((1, n))
    e[0, -1] = 1.0
    q_at_e = float(factor(e)[0])
    parts = _build_parts(profiles, i, j, factor, scheme, c0, q_at_e)

    classes: dict[str, KernelClass] = {}
    for name in ADMISSIBLE_PARTS:
        verdict = classify_kernel(sample_kernel(parts[name], n, tolerances, count=samples), m, n, tolerances)
        if not verdict.admissible:
            raise KernelClassError(
                f"part {name!r} is not {m}-admissible (origin {verdict.origin_exponent:.3f}, "
                f"boundary {verdict.boundary_exponent:.3f})"
            )
        classes[name] = verdict

    split = BallResidualSplit(n, m, i, j)
    remainder = classify_kernel(
        sample_kernel(lambda z: split.admissible_part(cayley_to_ball(z)), n, tolerances, count=samples),
        m - 1,
        n,
        tolerances,
    )
    if not remainder.admissible:
        raise KernelClassError("the smooth part of the residual kernel is not (m-1)-admissible")
    residual_classes = {
        "calderon_zygmund": calderon_zygmund_class(split.omega, n, m - 1),
        "admissible": remainder,
    }
    _LOGGER.info(
        "decomposed Z_%d Z_%d a for (n, m) = (%d, %d): %d admissible parts, c0 = %.6g",
        j + 1,
        i + 1,
        n,
        m,
        len(classes),
        c0,
    )
    return SecondDerivativeDecomposition(
        profiles=profiles,
        i=i,
        j=j,
        factor=factor,
        scheme=scheme,
        c0=c0,
        q_at_e=q_at_e,
        parts=parts,
        classes=classes,
        residual_split=split,
        residual_classes=residual_classes,
    )


def lipschitz_ratio(factor: Kernel, n: int, r: np.ndarray) -> float:
    """sup |Q(z) - Q(e)| / r entlang eines Strahls."""

    e = np.zeros((1, n))
    e[0, -1] = 1.0
    r = np.asarray(r, dtype=float)
    return float(np.max(np.abs(factor(ray_points(n, r)) - factor(e)[0]) / r))
