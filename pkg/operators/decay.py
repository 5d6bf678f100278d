"""Randabfall von Kern und Potential gegen 1 - r^2.

Fuer das Potential wird statt des Auswertungspunkts die Testform verschoben:
fuer eine Isometrie T gilt (L eta)(T e) = L(T^* eta)(e), und d, delta vertauschen mit
T^*. Die Differenzenquotienten laufen damit immer bei e mit fester Schrittweite.
Beim Kern liegt x = e fest und y wandert entlang eines geodaetischen Strahls."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from double_forms.forms import FormField
from geometry.isometries import translate_inverse
from geometry.points import Frame, Point
from geometry.sphere import geodesic_polar_points
from models.types import FDScheme, QuadratureSpec, Tolerances
from operators.bump import bump_form
from operators.exterior import codifferential, exterior_derivative
from operators.potential import riesz_potential
from riesz_kernel.assembly import kernel_coefficients
from riesz_kernel.kernel_spec import KernelSpec
from riesz_kernel.profiles import RadialProfiles
from util.fitting import PowerLawFit, fit_power_law, log_window

_LOGGER = logging.getLogger(__name__)

DEFAULT_WINDOW = (2e-3, 5e-2)


@dataclass(frozen=True)
class BoundaryDecay:
    """Exponenten von |f|, |d f|, |delta f| gegen 1 - r^2; None, wo der Operator fehlt."""

    value: PowerLawFit
    exterior: PowerLawFit | None
    codifferential: PowerLawFit | None
    expected: float

    def derivative_deviation(self) -> float:
        fits = [fit for fit in (self.exterior, self.codifferential) if fit is not None]
        return max((abs(fit.exponent - self.expected) for fit in fits), default=0.0)

    def within(self, tolerance: float) -> bool:
        return abs(self.value.exponent - self.expected) <= tolerance and self.derivative_deviation() <= tolerance


def _ray_point(n: int, distance: float) -> Point:
    direction = np.zeros(n)
    direction[0] = 1.0
    return Point(geodesic_polar_points(np.array(distance), direction))


def potential_field(
    form: FormField, spec: KernelSpec, profiles: RadialProfiles, q: QuadratureSpec
) -> FormField:
    """L eta als Formfeld; jede Auswertung ist eine eigene Quadratur ohne Verfeinerung."""

    def coefficients(points: np.ndarray) -> np.ndarray:
        return np.stack(
            [riesz_potential(form, spec, profiles, Point(p), q, refine=False).coeffs for p in points]
        )

    return FormField(form.n, form.degree, form.frame, coefficients)


def _fit_along(
    t: np.ndarray, values: list[float], exterior: list[float], codiff: list[float], expected: float
) -> BoundaryDecay:
    return BoundaryDecay(
        value=fit_power_law(t, np.array(values)),
        exterior=fit_power_law(t, np.array(exterior)) if exterior else None,
        codifferential=fit_power_law(t, np.array(codiff)) if codiff else None,
        expected=expected,
    )


def potential_decay_exponents(
    spec: KernelSpec,
    profiles: RadialProfiles,
    coefficients: np.ndarray,
    radius: float,
    q: QuadratureSpec,
    scheme: FDScheme,
    window: tuple[float, float] = DEFAULT_WINDOW,
    samples: int = 6,
) -> BoundaryDecay:
    """Fittet die Exponenten entlang eines geodaetischen Strahls der Bump-Mitte.

    Args:
        coefficients: Konstante w-Koeffizienten der Testform (Laenge C(n, m)).
        radius: Pseudohyperbolischer Traegerradius der Testform.
        window: Bereich von 1 - r^2, r = Abstand Bump-Mitte zum Auswertungspunkt.
    """

    n, m = spec.n, spec.m
    base = Point.base(n)
    t = log_window(*window, count=samples)
    distances = 2.0 * np.arctanh(np.sqrt(1.0 - t))
    values, exterior, codiff = [], [], []
    for distance in distances:
        form = bump_form(n, m, _ray_point(n, distance), radius, coefficients)
        field = potential_field(form, spec, profiles, q)
        values.append(np.linalg.norm(field.at(base).coeffs))
        if m < n:
            exterior.append(np.linalg.norm(exterior_derivative(field, scheme).at(base).coeffs))
        if m > 0:
            codiff.append(np.linalg.norm(codifferential(field, scheme).at(base).coeffs))
    result = _fit_along(t, values, exterior, codiff, float(n - m - 1))
    _LOGGER.info(
        "potential decay (n, m) = (%d, %d): |L eta| exponent %.3f (expected %.0f)",
        n,
        m,
        result.value.exponent,
        result.expected,
    )
    return result


def kernel_column_field(profiles: RadialProfiles, y: Point, column: int) -> FormField:
    """Spalte J von k_m(x, y) als m-Form in x (w-Rahmen) bei festem y."""

    n, m = profiles.spec.n, profiles.spec.m
    anchor = y.coords

    def coefficients(points: np.ndarray) -> np.ndarray:
        return kernel_coefficients(profiles, translate_inverse(anchor, points))[:, :, column]

    return FormField(n, m, Frame.INVARIANT_W, coefficients)


def kernel_boundary_decay(
    spec: KernelSpec,
    profiles: RadialProfiles,
    scheme: FDScheme,
    tolerances: Tolerances | None = None,
    samples: int = 8,
) -> BoundaryDecay:
    """Exponenten von |k_m(e, y)|, |d_x k_m|, |delta_x k_m| fuer 1 - r^2 im Randfenster."""

    tolerances = tolerances or Tolerances()
    n, m = spec.n, spec.m
    base = Point.base(n)
    t = log_window(*tolerances.boundary_window, count=samples)
    distances = 2.0 * np.arctanh(np.sqrt(1.0 - t))
    values, exterior, codiff = [], [], []
    for distance in distances:
        y = _ray_point(n, distance)
        kernel = kernel_coefficients(profiles, translate_inverse(y.coords, base.coords))
        columns = [kernel_column_field(profiles, y, j) for j in range(kernel.shape[-1])]
        values.append(np.linalg.norm(kernel))
        exterior.append(np.linalg.norm([exterior_derivative(c, scheme).at(base).coeffs for c in columns]))
        if m > 0:
            codiff.append(np.linalg.norm([codifferential(c, scheme).at(base).coeffs for c in columns]))
    result = _fit_along(t, values, exterior, codiff, float(n - m - 1))
    _LOGGER.info(
        "kernel decay (n, m) = (%d, %d): |k_m| %.3f, |d k_m| %.3f (expected %.0f)",
        n,
        m,
        result.value.exponent,
        result.exterior.exponent if result.exterior is not None else float("nan"),
        result.expected,
    )
    return result
