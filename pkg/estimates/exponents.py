"""Exponententabelle des Kerns k_m und seiner invarianten Ableitungen Z_i, Z_j Z_i."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from estimates.auxiliary import invariant_jet
from estimates.kernel_classes import ray_points
from models.types import FDOrder, FDScheme, Tolerances
from riesz_kernel.assembly import kernel_coefficients
from riesz_kernel.kernel_spec import KernelSpec
from riesz_kernel.profiles import RadialProfiles, radial_profiles
from util.fitting import fit_power_law, log_window

_LOGGER = logging.getLogger(__name__)

QUANTITIES = ("a", "Z a", "Z Z a")


@dataclass(frozen=True)
class ExponentRow:
    quantity: str
    origin: float
    boundary: float
    expected_origin: float
    expected_boundary: float
    origin_residual: float
    boundary_residual: float

    def within(self, tolerance: float) -> bool:
        return (
            abs(self.origin - self.expected_origin) <= tolerance
            and abs(self.boundary - self.expected_boundary) <= tolerance
        )


def jet_step(r: float) -> float:
    """FD-Schritt um e, klein gegen den Abstand r zur Singularitaet."""

    return max(1e-6, min(1e-4, 0.02 * r))


def _jet_norms(profiles: RadialProfiles, points: np.ndarray, radii: np.ndarray) -> np.ndarray:
    def field(z: np.ndarray) -> np.ndarray:
        return kernel_coefficients(profiles, z).reshape(z.shape[0], -1)

    norms = np.zeros((3, points.shape[0]))
    for k, (point, r) in enumerate(zip(points, radii)):
        scheme = FDScheme(step=jet_step(float(r)), order=FDOrder.CENTRAL4)
        values, first, second = invariant_jet(field, point[None, :], scheme)
        norms[:, k] = [np.linalg.norm(values), np.linalg.norm(first), np.linalg.norm(second)]
    return norms


def exponent_table(
    spec: KernelSpec,
    profiles: RadialProfiles | None = None,
    tolerances: Tolerances | None = None,
    count: int = 10,
) -> tuple[ExponentRow, ...]:
    """Fit der Exponenten von |a|, |Z a|, |Z Z a| gegen r (Ursprung) und 1 - r^2 (Rand).

    Erwartet werden 2-n, 1-n, -n am Ursprung und n-m-1 am Rand.
    """

    profiles = profiles or radial_profiles(spec)
    tolerances = tolerances or Tolerances()
    n, m = spec.n, spec.m
    r = log_window(*tolerances.origin_window, count=count)
    t = log_window(*tolerances.boundary_window, count=count)
    rb = np.sqrt(1.0 - t)
    near = _jet_norms(profiles, ray_points(n, r), r)
    far = _jet_norms(profiles, ray_points(n, rb), rb)
    rows = []
    for k, name in enumerate(QUANTITIES):
        origin = fit_power_law(r, near[k])
        boundary = fit_power_law(t, far[k])
        rows.append(
            ExponentRow(
                quantity=name,
                origin=origin.exponent,
                boundary=boundary.exponent,
                expected_origin=float(2 - n - k),
                expected_boundary=float(n - m - 1),
                origin_residual=origin.residual,
                boundary_residual=boundary.residual,
            )
        )
        _LOGGER.debug("%s: origin %.3f, boundary %.3f", name, origin.exponent, boundary.exponent)
    return tuple(rows)
