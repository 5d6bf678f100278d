"""Operative Normierung: a0 so skalieren, dass L(Delta eta)(x0) = eta(x0).

L ist linear in a0. Fuer eine Referenz-Bumpform liefert der Quotient
eta(x0) / L(Delta eta)(x0) den Korrekturfaktor; eine zweite Referenzform prueft,
dass der Faktor nicht von der Testform abhaengt."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from double_forms.multi_index import dimension
from geometry.points import Point
from geometry.sphere import geodesic_polar_points
from models.types import FDScheme, QuadratureSpec, Tolerances
from riesz_kernel.kernel_spec import KernelSpec
from riesz_kernel.profiles import RadialProfiles, radial_profiles

_LOGGER = logging.getLogger(__name__)

CALIBRATION_SCHEME = FDScheme(step=1e-3, richardson=True)


class CalibrationError(ArithmeticError):
    """Kalibrierungsquotienten zweier Referenzformen weichen zu stark ab."""


@dataclass(frozen=True)
class ReferenceBump:
    """Bumpform um den Punkt in geodaetischem Abstand `offset` von e (Richtung e_1)."""

    offset: float
    radius: float
    seed: int

    def center(self, n: int) -> Point:
        direction = np.zeros(n)
        direction[0] = 1.0
        return Point(geodesic_polar_points(np.array(self.offset), direction))

    def coefficients(self, n: int, m: int) -> np.ndarray:
        rng = np.random.default_rng(self.seed)
        vector = rng.uniform(0.5, 1.5, size=dimension(n, m))
        return vector / np.linalg.norm(vector)


REFERENCE_BUMPS = (ReferenceBump(0.0, 0.5, 11), ReferenceBump(0.3, 0.6, 23))
HELD_OUT_BUMP = ReferenceBump(0.2, 0.55, 37)


@dataclass(frozen=True)
class CalibrationResult:
    a0: float
    ratios: tuple[float, ...]
    spread: float
    profiles: RadialProfiles


def inverse_ratio(
    spec: KernelSpec,
    profiles: RadialProfiles,
    bump: ReferenceBump,
    q: QuadratureSpec,
    scheme: FDScheme = CALIBRATION_SCHEME,
) -> float:
    """Kleinste-Quadrate-Faktor mit eta(e) ~ ratio * L(Delta eta)(e)."""

    from operators.bump import bump_form
    from operators.laplacian import laplacian_field
    from operators.potential import riesz_potential

    n, m = spec.n, spec.m
    form = bump_form(n, m, bump.center(n), bump.radius, bump.coefficients(n, m))
    x0 = Point.base(n)
    eta = form.at(x0).coeffs
    image = riesz_potential(laplacian_field(form, scheme), spec, profiles, x0, q).coeffs
    denominator = float(np.dot(image, image))
    if denominator == 0.0:
        raise CalibrationError("L(Delta eta) vanishes at the reference point")
    return float(np.dot(eta, image)) / denominator


def calibrate(
    spec: KernelSpec,
    profiles: RadialProfiles | None = None,
    q: QuadratureSpec | None = None,
    tolerances: Tolerances | None = None,
    scheme: FDScheme = CALIBRATION_SCHEME,
) -> CalibrationResult:
    """Kalibriert a0 an zwei Referenzformen und liefert die renormierten Profile.

    Raises:
        CalibrationError: Relative Abweichung der beiden Quotienten ueber
            `tolerances.calibration_spread`.
    """

    profiles = profiles or radial_profiles(spec)
    q = q or QuadratureSpec()
    tolerances = tolerances or Tolerances()
    ratios = tuple(inverse_ratio(spec, profiles, bump, q, scheme) for bump in REFERENCE_BUMPS)
    mean = float(np.mean(ratios))
    spread = float(np.ptp(ratios)) / abs(mean)
    if spread > tolerances.calibration_spread:
        _LOGGER.warning("calibration ratios %s disagree (spread %.3e)", ratios, spread)
        raise CalibrationError(
            f"calibration ratios {ratios} differ by {spread:.3e} > {tolerances.calibration_spread:g}"
        )
    a0 = profiles.a0 * mean
    _LOGGER.info(
        "calibrated (n, m) = (%d, %d): a0 %.12g -> %.12g (spread %.2e)", spec.n, spec.m, profiles.a0, a0, spread
    )
    return CalibrationResult(a0, ratios, spread, profiles.renormalized(a0))


def calibrate_normalization(spec: KernelSpec, q: QuadratureSpec | None = None) -> float:
    """a0 (bzw. c_n fuer m = 0) mit L(Delta eta)(x0) = eta(x0)."""

    return calibrate(spec, q=q).a0
