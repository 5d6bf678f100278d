"""Harmonizitaet des Kerns in y: Delta_y k_m(x, .) per Frame-Laplace."""

from __future__ import annotations

import logging

import numpy as np

from double_forms.forms import FormField
from geometry.isometries import translate_inverse
from geometry.points import Frame, HyperbolicModel, Point, same_model
from models.types import FDScheme
from operators.laplacian import laplacian_coefficients
from riesz_kernel.assembly import kernel_coefficients, relative_radius
from riesz_kernel.kernel_spec import KernelSpec, KernelSpecError
from riesz_kernel.profiles import RadialProfiles

_LOGGER = logging.getLogger(__name__)

RADIUS_WINDOW = (0.05, 0.95)


def kernel_row_field(profiles: RadialProfiles, x: Point, row: int) -> FormField:
    """Zeile I von k_m(x, y) als m-Form in y (w-Rahmen)."""

    n, m = profiles.spec.n, profiles.spec.m
    origin = x.coords

    def coefficients(points: np.ndarray) -> np.ndarray:
        return kernel_coefficients(profiles, translate_inverse(points, origin))[:, row, :]

    return FormField(n, m, Frame.INVARIANT_W, coefficients)


def harmonicity_residual(
    spec: KernelSpec,
    profiles: RadialProfiles,
    x: Point,
    y: Point,
    scheme: FDScheme,
) -> float:
    """max |Delta_y k_m(x, .)(y)| / max |k_m(x, y)|.

    Raises:
        KernelSpecError: r(x, y) ausserhalb [0.05, 0.95] oder Profile passen nicht zur Spec.
    """

    same_model(x, y)
    x.require(HyperbolicModel.HALF_SPACE)
    if (spec.n, spec.m) != (profiles.spec.n, profiles.spec.m):
        raise KernelSpecError("kernel spec and profiles disagree on (n, m)")
    r = float(relative_radius(translate_inverse(y.coords, x.coords)))
    low, high = RADIUS_WINDOW
    if not low <= r <= high:
        raise KernelSpecError(f"harmonicity residual needs r(x, y) in [{low}, {high}], got {r:.4f}")
    kernel = kernel_coefficients(profiles, translate_inverse(y.coords, x.coords))
    rows = kernel.shape[0]
    worst = 0.0
    for row in range(rows):
        field = kernel_row_field(profiles, x, row)
        worst = max(worst, float(np.max(np.abs(laplacian_coefficients(field, y.coords[None, :], scheme)))))
    scale = float(np.max(np.abs(kernel)))
    _LOGGER.debug("harmonicity residual at r=%.3f: %.3e (kernel scale %.3e)", r, worst, scale)
    return worst / scale
