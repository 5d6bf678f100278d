"""Asymptotik der Profile: Exponenten, Harmonizitaetsresiduen, Ausloeschung in A2."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from models.types import FDScheme, Tolerances
from riesz_kernel.kernel_spec import KernelCase
from riesz_kernel.profiles import RadialProfiles
from riesz_kernel.quadrature import ProfileConstructionError
from util.fitting import PowerLawFit, fit_power_law, log_window

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecayExponents:
    """Fits von |A1|, |A2| gegen r (Ursprung) und gegen 1 - r^2 (Rand).

    Im skalaren Fall ist der zweite Eintrag jeweils None.
    """

    near_origin: tuple[PowerLawFit, PowerLawFit | None]
    near_boundary: tuple[PowerLawFit, PowerLawFit | None]

    @staticmethod
    def expected_boundary(n: int, m: int) -> float:
        return abs(n - 2 * m) - 1.0

    @staticmethod
    def expected_a2_origin(n: int) -> float | None:
        """Exponent von |A2| an r = 0 im generischen Fall.

        Die Ordnungen r^(-n) und r^(2-n) von 2G' und (1-x)^(n-2m-2) H heben sich
        exakt auf, es bleibt r^(4-n). Fuer n = 4 ist diese Ordnung logarithmisch (None).
        """

        return 4.0 - n if n > 4 else None


def _fit_pair(
    t: np.ndarray, first: np.ndarray, second: np.ndarray, scalar: bool
) -> tuple[PowerLawFit, PowerLawFit | None]:
    return fit_power_law(t, first), None if scalar else fit_power_law(t, second)


def decay_exponents(profiles: RadialProfiles, tolerances: Tolerances | None = None) -> DecayExponents:
    """Log-Log-Exponenten der Profile an beiden Enden.

    Raises:
        ProfileConstructionError: Fit-Residuum ueber `tolerances.fit_residual_max`.
    """

    tolerances = tolerances or Tolerances()
    scalar = profiles.spec.case is KernelCase.SCALAR
    r_origin = log_window(*tolerances.origin_window)
    origin_values = profiles.evaluate(r_origin)
    near_origin = _fit_pair(r_origin, origin_values.a1, origin_values.a2, scalar)
    q = log_window(*tolerances.boundary_window)
    boundary_values = profiles.evaluate(np.sqrt(1.0 - q))
    near_boundary = _fit_pair(q, boundary_values.a1, boundary_values.a2, scalar)
    for fit in (*near_origin, *near_boundary):
        if fit is not None and fit.residual > tolerances.fit_residual_max:
            raise ProfileConstructionError(
                f"power-law fit residual {fit.residual:.3f} exceeds {tolerances.fit_residual_max:g}"
            )
    _LOGGER.info(
        "decay exponents (n, m) = (%d, %d): origin %.3f, boundary %.3f",
        profiles.spec.n,
        profiles.spec.m,
        near_origin[0].exponent,
        near_boundary[0].exponent,
    )
    return DecayExponents(near_origin, near_boundary)


def b_residuals(
    profiles: RadialProfiles, r: np.ndarray | float, scheme: FDScheme | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Relative Residuen der Koeffizientenfunktionen B1, B2 von Delta_y k_m(0, y).

        B1 = -A4 - (1-r^2)^(n-2m) ((n-m) A3 + r A3')
        B2 = (-A4' + m (1-r^2)^(n-2m) A3') / r

    Jedes Residuum ist durch den groessten Betrag seiner Summanden geteilt.
    """

    r = np.atleast_1d(np.asarray(r, dtype=float))
    n, m, e = profiles.spec.n, profiles.spec.m, profiles.spec.exponent_gap
    values = profiles.evaluate(r)
    weight = ((1.0 - r) * (1.0 + r)) ** e
    a3_term = weight * ((n - m) * values.a3 + r * values.da3)
    b1 = -values.a4 - a3_term
    da4 = profiles.a4_derivative(r, scheme)
    slope_term = m * weight * values.da3
    b2 = (-da4 + slope_term) / r
    scale1 = np.maximum(np.abs(values.a4), np.abs(a3_term))
    scale2 = np.maximum(np.abs(da4), np.abs(slope_term)) / r
    return b1 / np.maximum(scale1, 1e-300), b2 / np.maximum(scale2, 1e-300)


def a2_cancellation_ratio(profiles: RadialProfiles, x: np.ndarray | float) -> np.ndarray:
    """|A2| / max(|2G'|, |(1-x)^(n-2m-2) H|) an x = r^2."""

    x = np.asarray(x, dtype=float)
    e = profiles.spec.exponent_gap
    xv = profiles.x_values(x)
    first = 2.0 * xv.dg
    second = (1.0 - x) ** (e - 2) * xv.h
    a2 = (1.0 + profiles.spec.a2_perturbation) * (first - second)
    return np.abs(a2) / np.maximum(np.maximum(np.abs(first), np.abs(second)), 1e-300)
