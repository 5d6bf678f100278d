"""Hyperbolische Faltung und Riesz-Potential durch singulaere Produktquadratur.

Mit y = T_x v und der Invarianz von dmu gilt

    (C_a u)(x) = int a(S_v e) u(T_x v) dmu(v),

die Singularitaet liegt also fest bei v = e. Integriert wird in geodaetischen
Polarkoordinaten um e: v = Cayley(tanh(d/2) omega), dmu = sinh^(n-1)(d) dd dsigma.
Bei kompakt getragener Dichte wird pro Radius nur die Kappe der Richtungen
integriert, die den (verschobenen) Traeger trifft."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from double_forms.forms import FormField, FormValue, SupportDescriptor
from geometry.isometries import cayley_to_ball, translate_forward, translate_inverse
from geometry.points import HyperbolicModel, Point
from geometry.sphere import cap_rule, geodesic_polar_points, sphere_rule
from models.types import QuadratureSpec
from riesz_kernel.assembly import kernel_coefficients, kernel_parts
from riesz_kernel.kernel_spec import KernelSpec
from riesz_kernel.profiles import RadialProfiles
from util.fitting import FitError, fit_power_law, log_window
from util.quadrature import composite_rule, gauss_legendre, graded_knots

_LOGGER = logging.getLogger(__name__)

KernelFunction = Callable[[np.ndarray], np.ndarray]
Density = Callable[[np.ndarray], np.ndarray]

ERROR_FLOOR = 1e-12


class QuadratureError(ArithmeticError):
    """Geschaetzter Quadraturfehler ueber der Toleranz."""


class SupportViolationError(ValueError):
    """Dichte ohne Traegerbeschreibung oder Traeger ausserhalb des Modells."""


@dataclass(frozen=True)
class PolarNodes:
    """Quadraturknoten v (N, n) um e samt Gewichten (N,) inklusive sinh^(n-1)."""

    points: np.ndarray
    weights: np.ndarray


def _base(n: int) -> np.ndarray:
    base = np.zeros(n)
    base[-1] = 1.0
    return base


def polar_nodes(
    x: np.ndarray,
    support: SupportDescriptor | None,
    q: QuadratureSpec,
    kernel_radius: float | None = None,
    inner_distance: float = 0.0,
) -> PolarNodes:
    """Knoten fuer int f(v) dmu(v) ueber {T_x v im Traeger}, d >= inner_distance.

    Ohne Traeger muss `kernel_radius` (geodaetisch) den Integrationsbereich begrenzen.

    Raises:
        SupportViolationError: Weder Traeger noch Kernradius gegeben.
    """

    n = x.shape[-1]
    if support is None:
        if kernel_radius is None:
            raise SupportViolationError("density needs a support descriptor or the kernel a finite radius")
        lower, upper, axis, distance, reach = inner_distance, kernel_radius, _base(n), 0.0, kernel_radius
    else:
        shifted = translate_inverse(x, support.center.coords)
        ball = cayley_to_ball(shifted)
        norm = float(np.linalg.norm(ball))
        distance = 2.0 * np.arctanh(norm)
        reach = 2.0 * np.arctanh(support.radius)
        axis = ball / norm if norm > 1e-14 else _base(n)
        lower = max(inner_distance, distance - reach)
        upper = distance + reach
        if kernel_radius is not None:
            upper = min(upper, kernel_radius)
    if upper <= lower:
        return PolarNodes(np.zeros((0, n)), np.zeros(0))
    singular_end = lower <= inner_distance + 1e-15
    if singular_end:
        knots = graded_knots(lower, upper, q.radial_panels, q.grading_ratio, toward="left")
    else:
        knots = np.linspace(lower, upper, q.radial_panels + 1)
    radii, radial_w = composite_rule(knots, q.radial_nodes)
    if support is None or distance < 1e-12:
        theta_max = np.full(radii.shape, np.pi)
    else:
        ratio = (np.cosh(radii) * np.cosh(distance) - np.cosh(reach)) / (np.sinh(radii) * np.sinh(distance))
        theta_max = np.arccos(np.clip(ratio, -1.0, 1.0))
    dirs, ang_w = cap_rule(n, axis, theta_max, q.polar_nodes, q.transverse_nodes, q.azimuth_nodes)
    points = geodesic_polar_points(radii[:, None], dirs)
    weights = (radial_w * np.sinh(radii) ** (n - 1))[:, None] * ang_w
    return PolarNodes(points.reshape(-1, n), weights.ravel())


def _contract(kernel_values: np.ndarray, density_values: np.ndarray, weights: np.ndarray) -> np.ndarray:
    if kernel_values.ndim == 3:
        return np.einsum("k,kij,kj->i", weights, kernel_values, density_values)
    if density_values.ndim == 2:
        return np.einsum("k,k,kj->j", weights, kernel_values, density_values)
    return np.atleast_1d(np.sum(weights * kernel_values * density_values))


def convolve_once(
    kernel_fn: KernelFunction,
    density: Density,
    x: np.ndarray,
    support: SupportDescriptor | None,
    q: QuadratureSpec,
    kernel_radius: float | None = None,
    inner_distance: float = 0.0,
) -> np.ndarray:
    """Eine Auswertung von int a(S_v e) u(T_x v) dmu(v) ohne Fehlerschaetzung."""

    nodes = polar_nodes(x, support, q, kernel_radius, inner_distance)
    if nodes.weights.size == 0:
        sample = np.asarray(density(x[None, :]))
        return np.zeros(sample.shape[1:] or (1,))
    e = _base(x.shape[-1])
    z = translate_inverse(nodes.points, e)
    y = translate_forward(x, nodes.points)
    return _contract(np.asarray(kernel_fn(z)), np.asarray(density(y)), nodes.weights)


def _checked(evaluate: Callable[[QuadratureSpec], np.ndarray], q: QuadratureSpec, label: str) -> np.ndarray:
    full = evaluate(q)
    coarse = evaluate(q.coarsened())
    error = float(np.linalg.norm(full - coarse))
    scale = max(float(np.linalg.norm(full)), ERROR_FLOOR)
    if error > q.rel_tolerance * scale:
        raise QuadratureError(f"{label}: estimated error {error:.3e} exceeds {q.rel_tolerance:g} x {scale:.3e}")
    return full


def _with_refinement(evaluate: Callable[[QuadratureSpec], np.ndarray], q: QuadratureSpec, label: str) -> np.ndarray:
    current = q
    for attempt in Retrying(
        stop=stop_after_attempt(3),
        retry=retry_if_exception_type(QuadratureError),
        reraise=True,
    ):
        with attempt:
            if attempt.retry_state.attempt_number > 1:
                current = current.refined()
                _LOGGER.warning(
                    "%s: refining quadrature (attempt %d, %d radial / %d polar nodes)",
                    label,
                    attempt.retry_state.attempt_number,
                    current.radial_nodes,
                    current.polar_nodes,
                )
            return _checked(evaluate, current, label)
    raise QuadratureError(f"{label}: retries exhausted")  # pragma: no cover


def hyperbolic_convolution(
    kernel_fn: KernelFunction,
    density: FormField | Density,
    x: Point,
    q: QuadratureSpec,
    kernel_radius: float | None = None,
) -> np.ndarray:
    """(C_a u)(x) fuer glatte Kerne a(z), z = S_y x, mit Fehlerschaetzung und Verfeinerung.

    Args:
        kernel_fn: a(z) fuer z (N, n) -> (N,) oder (N, C, C).
        density: Formfeld mit Traeger oder skalare Funktion (N, n) -> (N,).
        kernel_radius: Geodaetischer Traegerradius von a um e (optional).

    Raises:
        SupportViolationError: Kein begrenzter Integrationsbereich.
        QuadratureError: Fehlerschaetzung auch nach Verfeinerung zu gross.
    """

    x.require(HyperbolicModel.HALF_SPACE)
    support = density.support if isinstance(density, FormField) else None
    return _with_refinement(
        lambda spec: convolve_once(kernel_fn, density, x.coords, support, spec, kernel_radius),
        q,
        "hyperbolic convolution",
    )


INNER_FIT_SAMPLES = 8


def _leading_order(r: np.ndarray, values: np.ndarray, exponent: float | None = None) -> KernelFunction:
    """Fuehrende Ordnung sign * a * r^p aus Tabellenwerten; p fest oder per Log-Log-Fit."""

    sign = float(np.sign(values[-1]))
    if exponent is None:
        fit = fit_power_law(r, values)
        return lambda t: sign * fit.prefactor * t**fit.exponent
    prefactor = float(np.mean(np.abs(values) * r ** (-exponent)))
    return lambda t: sign * prefactor * t**exponent


def inner_correction(profiles: RadialProfiles, value_at_x: np.ndarray, inner_cutoff: float) -> np.ndarray:
    """Beitrag von r < r0 mit eta = eta(x) und den fuehrenden Ordnungen der Profile.

    A1 ~ a r^(2-n) mit a aus der Profiltabelle in [r0/10, r0], A2 per Potenzgesetz-Fit.
    Integriert wird A1 gamma^m + A2 tau ^ gamma^(m-1) ueber die geodaetische Kugel vom Radius
    2 artanh(r0).
    """

    n, m = profiles.spec.n, profiles.spec.m
    window = log_window(0.1 * inner_cutoff, inner_cutoff, INNER_FIT_SAMPLES)
    table = profiles.evaluate(window)
    a1 = _leading_order(window, table.a1, 2.0 - n)
    try:
        a2 = _leading_order(window, table.a2)
    except FitError:
        a2 = None
    limit = 2.0 * np.arctanh(inner_cutoff)
    nodes, weights = gauss_legendre(8)
    d = 0.5 * limit * (nodes + 1.0)
    radial_w = 0.5 * limit * weights * np.sinh(d) ** (n - 1)
    dirs, ang_w = sphere_rule(n)
    points = geodesic_polar_points(d[:, None], dirs[None, :, :]).reshape(-1, n)
    first, second = kernel_parts(translate_inverse(points, _base(n)), m)
    r = np.repeat(np.tanh(0.5 * d), dirs.shape[0])
    w = (radial_w[:, None] * ang_w[None, :]).ravel()
    matrix = np.einsum("k,kij->ij", w * a1(r), first)
    if a2 is not None:
        matrix = matrix + np.einsum("k,kij->ij", w * a2(r), second)
    return matrix @ np.atleast_1d(np.asarray(value_at_x, dtype=float))


def riesz_potential(
    form: FormField,
    spec: KernelSpec,
    profiles: RadialProfiles,
    x: Point,
    q: QuadratureSpec,
    refine: bool = True,
) -> FormValue:
    """L eta(x) = int k_m(x, y) eta(y) dmu(y) im w-Rahmen.

    Raises:
        SupportViolationError: Form ohne Traegerbeschreibung.
        QuadratureError: Fehlerschaetzung ueber `q.rel_tolerance` nach allen Verfeinerungen.
    """

    x.require(HyperbolicModel.HALF_SPACE)
    if form.support is None:
        raise SupportViolationError("riesz_potential needs a compactly supported form")
    if (form.n, form.degree) != (spec.n, spec.m):
        raise SupportViolationError(
            f"form of degree {form.degree} in H^{form.n} does not match kernel {spec.n, spec.m}"
        )
    inner_distance = 2.0 * np.arctanh(q.inner_cutoff)

    def evaluate(current: QuadratureSpec) -> np.ndarray:
        return convolve_once(
            lambda z: kernel_coefficients(profiles, z),
            form,
            x.coords,
            form.support,
            current,
            inner_distance=inner_distance,
        )

    outer = _with_refinement(evaluate, q, "riesz potential") if refine else evaluate(q)
    correction = inner_correction(profiles, form(x.coords[None, :])[0], q.inner_cutoff)
    return FormValue(form.n, form.degree, form.frame, outer + correction, x)
