"""Punktweise Auswertung k_m(x, y) = A1 gamma^m + A2 tau ^ gamma^(m-1) im Rahmen w^ij."""

from __future__ import annotations

from math import factorial

import numpy as np

from double_forms.double_form import DoubleForm
from double_forms.generators import (
    alpha_beta,
    gamma_coefficients,
    gamma_power_coefficients,
    relative_point,
    tau_gamma_power_coefficients,
)
from geometry.isometries import pseudo_distance_half_space
from geometry.points import Point
from riesz_kernel.kernel_spec import KernelSpec, KernelSpecError
from riesz_kernel.profiles import RadialProfiles

SINGULARITY_RADIUS = 1e-7


class KernelSingularityError(ArithmeticError):
    """Auswertung zu nahe an der Diagonale x = y."""


def relative_radius(z: np.ndarray) -> np.ndarray:
    """r(z, e) im Halbraum."""

    z = np.asarray(z, dtype=float)
    base = np.zeros(z.shape[-1])
    base[-1] = 1.0
    return pseudo_distance_half_space(z, base)


def _require_off_diagonal(r: np.ndarray) -> None:
    if np.any(r < SINGULARITY_RADIUS):
        raise KernelSingularityError(
            f"kernel evaluated within r < {SINGULARITY_RADIUS:g} of the diagonal; split the integral instead"
        )


def kernel_coefficients(profiles: RadialProfiles, z: np.ndarray) -> np.ndarray:
    """Koeffizienten (..., C(n,m), C(n,m)) von k_m an z = S_y x.

    Raises:
        KernelSingularityError: r(z, e) < 1e-7.
    """

    z = np.asarray(z, dtype=float)
    m = profiles.spec.m
    r = relative_radius(z)
    _require_off_diagonal(r)
    values = profiles.evaluate(r)
    if m == 0:
        return values.a1[..., None, None]
    first, second = kernel_parts(z, m)
    return values.a1[..., None, None] * first + values.a2[..., None, None] * second


def kernel_parts(z: np.ndarray, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Koeffizienten von gamma^m und tau ^ gamma^(m-1) an z, ohne Profile.

    Fuer m = 0 ist der erste Teil 1 und der zweite 0 (jeweils 1 x 1).
    """

    z = np.asarray(z, dtype=float)
    if m == 0:
        shape = (*z.shape[:-1], 1, 1)
        return np.ones(shape), np.zeros(shape)
    gamma = gamma_coefficients(z)
    alpha, beta = alpha_beta(z)
    return gamma_power_coefficients(gamma, m), tau_gamma_power_coefficients(alpha, beta, gamma, m)


def _check_profiles(spec: KernelSpec, profiles: RadialProfiles) -> None:
    if (spec.n, spec.m) != (profiles.spec.n, profiles.spec.m):
        raise KernelSpecError("kernel spec and profiles disagree on (n, m)")


def kernel_eval(spec: KernelSpec, profiles: RadialProfiles, x: Point, y: Point) -> DoubleForm:
    """k_m(x, y) als Doppelform vom Bigrad (m, m); fuer m = 0 der Skalar A(r)."""

    _check_profiles(spec, profiles)
    coeffs = kernel_coefficients(profiles, relative_point(x, y))
    return DoubleForm(spec.n, spec.m, spec.m, coeffs, (x, y))


def star_dual_coefficients(profiles: RadialProfiles, z: np.ndarray) -> np.ndarray:
    """*_x *_y k_m an z, ausgedrueckt durch gamma^(n-m) und tau ^ gamma^(n-m-1).

    Mit c = (1 - r^2)/4:
        ((m-1)! c^(2m-n) / (n-m)!) [(m A1 + r^2 A2) gamma^(n-m) - (n-m) A2 tau ^ gamma^(n-m-1)],
    fuer m = 0: A c^(-n) / n! gamma^n.
    """

    z = np.asarray(z, dtype=float)
    n, m = profiles.spec.n, profiles.spec.m
    r = relative_radius(z)
    _require_off_diagonal(r)
    values = profiles.evaluate(r)
    c = 0.25 * (1.0 - r) * (1.0 + r)
    gamma = gamma_coefficients(z)
    if m == 0:
        scale = values.a1 * c ** (-n) / factorial(n)
        return scale[..., None, None] * gamma_power_coefficients(gamma, n)
    alpha, beta = alpha_beta(z)
    prefactor = factorial(m - 1) * c ** (2 * m - n) / factorial(n - m)
    combined = (m * values.a1 + r * r * values.a2)[..., None, None] * gamma_power_coefficients(gamma, n - m)
    if n - m >= 1:
        combined = combined - ((n - m) * values.a2)[..., None, None] * tau_gamma_power_coefficients(
            alpha, beta, gamma, n - m
        )
    return prefactor[..., None, None] * combined


def star_dual_kernel(spec: KernelSpec, profiles: RadialProfiles, x: Point, y: Point) -> DoubleForm:
    """Abgeleiteter Auswerter fuer den Grad n - m (Sterndualitaet)."""

    _check_profiles(spec, profiles)
    coeffs = star_dual_coefficients(profiles, relative_point(x, y))
    return DoubleForm(spec.n, spec.n - spec.m, spec.n - spec.m, coeffs, (x, y))
