"""Registrierte Invariantenchecks der Verifikationssuiten.

Jeder Check ist eine synchrone Funktion `SuiteContext -> CheckResult`; der Runner
fuehrt sie in Worker-Threads aus. Zufallszahlen kommen aus einem Generator, der
aus Seed und Checkname abgeleitet wird, damit jeder Check unabhaengig von der
Ausfuehrungsreihenfolge reproduzierbar ist."""

from __future__ import annotations

import logging
import threading
import zlib
from dataclasses import dataclass
from math import factorial
from typing import Callable

import numpy as np

from double_forms.double_form import StarSlot, star_double
from double_forms.forms import star_coefficients
from double_forms.generators import (
    gamma_at,
    gamma_power,
    relative_point,
    tau_at,
    tau_gamma_power,
)
from double_forms.oracles import gamma_tau_oracle
from estimates.auxiliary import auxiliary_derivatives, invariant_jet
from estimates.decomposition import decompose_second_derivative
from estimates.diagnostics import a_quantity_identities, truncated_kernel_bound
from estimates.exponents import exponent_table
from estimates.kernel_classes import cz_cancellation
from estimates.lp_range import closed_form_p1, lp_range
from estimates.schur import schur_scan
from geometry.frames import commutator_residual
from geometry.isometries import (
    cayley_to_ball,
    cayley_to_half_space,
    cayley_to_half_space_jacobian,
    phi,
    pseudo_distance_ball,
    pseudo_distance_half_space,
    random_ball_points,
    random_half_space_points,
    random_rotation,
    translate_forward,
    translate_inverse,
)
from geometry.metric import metric_coefficients, pullback_metric
from geometry.points import HyperbolicModel, Point
from geometry.sphere import geodesic_polar_points, sphere_area, sphere_rule
from models.report_payload import CheckResult
from models.run_config import RunConfig
from models.types import FDOrder, FDScheme, QuadratureSpec, SampleCounts, Suite, Tolerances
from operators.bump import bump_form, bump_profile
from operators.convolution import convolution_derivative_exchange, truncated_test_kernel
from operators.decay import kernel_boundary_decay
from operators.exterior import codifferential_frame, delta_form
from operators.green import Annulus, adjointness_defect, green_identity_defect
from operators.harmonicity import harmonicity_residual
from operators.laplacian import laplacian_field
from operators.potential import riesz_potential
from riesz_kernel.asymptotics import DecayExponents, b_residuals, decay_exponents
from riesz_kernel.assembly import kernel_coefficients, kernel_eval, relative_radius, star_dual_kernel
from riesz_kernel.kernel_spec import CriticalDegreeError, KernelCase, KernelSpec
from riesz_kernel.normalization import CALIBRATION_SCHEME, HELD_OUT_BUMP, calibrate
from riesz_kernel.profiles import RadialProfiles, radial_profiles
from special_functions.fundamental import g_operator, g_source, h_operator, liouville_constant

_LOGGER = logging.getLogger(__name__)

GREEN_TOLERANCE = 1e-2
CZ_TOLERANCE = 1e-10

Check = Callable[["SuiteContext"], CheckResult]


class SuiteContext:
    """Gemeinsamer, threadsicherer Zustand aller Checks eines Laufs.

    Profile und kalibrierte Profile werden beim ersten Zugriff genau einmal gebaut.
    """

    def __init__(self, config: RunConfig) -> None:
        self.config = config
        self.spec = KernelSpec(
            n=config.n,
            m=config.m,
            harmonic_shift=config.harmonic_shift,
            a2_perturbation=config.a2_perturbation,
        )
        self._profiles: RadialProfiles | None = None
        self._calibrated: RadialProfiles | None = None
        self._profile_lock = threading.Lock()
        self._calibration_lock = threading.Lock()

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def m(self) -> int:
        return self.spec.m

    @property
    def tolerances(self) -> Tolerances:
        return self.config.tolerances

    @property
    def quadrature(self) -> QuadratureSpec:
        return self.config.quadrature

    @property
    def fd(self) -> FDScheme:
        return self.config.fd

    @property
    def samples(self) -> SampleCounts:
        return self.config.samples

    def profiles(self) -> RadialProfiles:
        with self._profile_lock:
            if self._profiles is None:
                _LOGGER.info("building radial profiles for (n, m) = (%d, %d)", self.n, self.m)
                self._profiles = radial_profiles(self.spec)
            return self._profiles

    def calibrated(self) -> RadialProfiles:
        profiles = self.profiles()
        with self._calibration_lock:
            if self._calibrated is None:
                self._calibrated = calibrate(self.spec, profiles, self.quadrature, self.tolerances).profiles
            return self._calibrated

    def rng(self, name: str) -> np.random.Generator:
        return np.random.default_rng([self.config.seed, zlib.crc32(name.encode("utf-8"))])


@dataclass(frozen=True)
class RegisteredCheck:
    suite: Suite
    name: str
    run: Check

    @property
    def key(self) -> str:
        return f"{self.suite.value}.{self.name}"


_REGISTRY: list[RegisteredCheck] = []


def check(suite: Suite, name: str) -> Callable[[Check], Check]:
    def register(func: Check) -> Check:
        _REGISTRY.append(RegisteredCheck(suite, name, func))
        return func

    return register


def registered_checks(suite: Suite = Suite.ALL) -> list[RegisteredCheck]:
    """Checks in Registrierungsreihenfolge; `Suite.ALL` liefert alle."""

    if suite is Suite.ALL:
        return list(_REGISTRY)
    return [entry for entry in _REGISTRY if entry.suite is suite]


def outcome(
    suite: Suite,
    name: str,
    measured: float,
    threshold: float,
    detail: str = "",
    **extra: object,
) -> CheckResult:
    measured = float(measured)
    return CheckResult(
        suite=suite.value,
        name=name,
        measured=measured,
        threshold=threshold,
        passed=bool(np.isfinite(measured) and measured <= threshold),
        detail=detail,
        extra=dict(extra),
    )


def skipped(suite: Suite, name: str, reason: str) -> CheckResult:
    return CheckResult(suite=suite.value, name=name, passed=True, detail=f"not applicable: {reason}")


def _relative(a: np.ndarray, b: np.ndarray) -> float:
    scale = max(float(np.max(np.abs(b))), 1e-300)
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)))) / scale


def _pairs_in_window(
    rng: np.random.Generator, count: int, n: int, window: tuple[float, float] = (0.1, 0.9)
) -> tuple[np.ndarray, np.ndarray]:
    """Halbraumpaare (x, y) mit r(x, y) gleichverteilt im Fenster."""

    x = random_half_space_points(rng, count, n)
    directions = rng.normal(size=(count, n))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    r = rng.uniform(*window, size=count)
    local = geodesic_polar_points(2.0 * np.arctanh(r)[:, None], directions[:, None, :])[:, 0, :]
    return x, translate_forward(x, local)


# --- geometry ---


@check(Suite.GEOMETRY, "cayley_roundtrip")
def _cayley_roundtrip(ctx: SuiteContext) -> CheckResult:
    ball = random_ball_points(ctx.rng("cayley_roundtrip"), ctx.samples.points, ctx.n)
    back = cayley_to_ball(cayley_to_half_space(ball))
    return outcome(Suite.GEOMETRY, "cayley_roundtrip", np.max(np.abs(back - ball)), ctx.tolerances.invariance)


@check(Suite.GEOMETRY, "pseudo_distance_invariance")
def _pseudo_distance_invariance(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("pseudo_distance_invariance")
    n = ctx.n
    x = random_half_space_points(rng, ctx.samples.points, n)
    y = random_half_space_points(rng, ctx.samples.points, n)
    shift = random_half_space_points(rng, 1, n)[0]
    before = pseudo_distance_half_space(x, y)
    after = pseudo_distance_half_space(translate_forward(shift, x), translate_forward(shift, y))
    u = random_rotation(rng, n)
    bx = random_ball_points(rng, ctx.samples.points, n)
    by = random_ball_points(rng, ctx.samples.points, n)
    rotated = pseudo_distance_ball(bx @ u.T, by @ u.T)
    deviation = max(
        float(np.max(np.abs(before - after))),
        float(np.max(np.abs(rotated - pseudo_distance_ball(bx, by)))),
    )
    return outcome(Suite.GEOMETRY, "pseudo_distance_invariance", deviation, ctx.tolerances.invariance)


@check(Suite.GEOMETRY, "phi_involution")
def _phi_involution(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("phi_involution")
    x = random_ball_points(rng, ctx.samples.points, ctx.n, max_radius=0.9)
    y = random_ball_points(rng, ctx.samples.points, ctx.n, max_radius=0.9)
    deviation = float(np.max(np.abs(phi(x, phi(x, y)) - y)))
    return outcome(Suite.GEOMETRY, "phi_involution", deviation, ctx.tolerances.invariance)


@check(Suite.GEOMETRY, "cayley_isometry")
def _cayley_isometry(ctx: SuiteContext) -> CheckResult:
    ball = random_ball_points(ctx.rng("cayley_isometry"), 20, ctx.n, max_radius=0.9)
    worst = 0.0
    for b in ball:
        source = metric_coefficients(Point(b, HyperbolicModel.BALL))
        target = metric_coefficients(Point(cayley_to_half_space(b)))
        pulled = pullback_metric(cayley_to_half_space_jacobian(b), target)
        worst = max(worst, _relative(pulled, source))
    return outcome(Suite.GEOMETRY, "cayley_isometry", worst, ctx.tolerances.invariance)


@check(Suite.GEOMETRY, "sphere_quadrature")
def _sphere_quadrature(ctx: SuiteContext) -> CheckResult:
    n = ctx.n
    dirs, weights = sphere_rule(n, 4, 8)
    area = sphere_area(n)
    deviation = max(
        abs(float(np.sum(weights)) - area) / area,
        abs(float(np.sum(weights * dirs[:, 0] ** 2)) - area / n) / (area / n),
    )
    return outcome(Suite.GEOMETRY, "sphere_quadrature", deviation, ctx.tolerances.invariance)


@check(Suite.GEOMETRY, "frame_commutators")
def _frame_commutators(ctx: SuiteContext) -> CheckResult:
    def field(points: np.ndarray) -> np.ndarray:
        return np.sin(points[:, 0]) * points[:, -1] ** 2 + np.cos(points[:, 0] * points[:, -1])

    rng = ctx.rng("frame_commutators")
    points = random_half_space_points(rng, 3, ctx.n)
    last = ctx.n - 1
    worst = max(commutator_residual(field, Point(p), last, 0, ctx.fd) for p in points)
    return outcome(Suite.GEOMETRY, "frame_commutators", worst, 1e-5)


# --- forms ---


@check(Suite.FORMS, "star_involution")
def _star_involution(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("star_involution")
    n = ctx.n
    worst = 0.0
    for degree in range(n + 1):
        coeffs = rng.normal(size=(16, _size(n, degree)))
        twice = star_coefficients(star_coefficients(coeffs, n, degree), n, n - degree)
        worst = max(worst, float(np.max(np.abs(twice - (-1.0) ** (degree * (n - degree)) * coeffs))))
    return outcome(Suite.FORMS, "star_involution", worst, ctx.tolerances.star_identity)


@check(Suite.FORMS, "gamma_star_identities")
def _gamma_star_identities(ctx: SuiteContext) -> CheckResult:
    """*_x *_y gamma^m und *_x *_y (tau ^ gamma^(m-1)) gegen ihre geschlossenen Formen."""

    n, m = ctx.n, ctx.m
    xs, ys = _pairs_in_window(ctx.rng("gamma_star_identities"), ctx.samples.pairs, n)
    worst = 0.0
    for xc, yc in zip(xs, ys):
        x, y = Point(xc), Point(yc)
        r = float(relative_radius(relative_point(x, y)))
        c = 0.25 * (1.0 - r * r)
        lhs = star_double(gamma_power(x, y, m), StarSlot.BOTH).coeffs
        rhs = factorial(m) * c ** (2 * m - n) / factorial(n - m) * gamma_power(x, y, n - m).coeffs
        worst = max(worst, _relative(lhs, rhs))
        if m >= 1:
            lhs = star_double(tau_gamma_power(x, y, m), StarSlot.BOTH).coeffs
            combined = r * r * gamma_power(x, y, n - m).coeffs
            if n - m >= 1:
                combined = combined - (n - m) * tau_gamma_power(x, y, n - m).coeffs
            rhs = factorial(m - 1) * c ** (2 * m - n) / factorial(n - m) * combined
            worst = max(worst, _relative(lhs, rhs))
    return outcome(Suite.FORMS, "gamma_star_identities", worst, ctx.tolerances.star_identity, samples=len(xs))


@check(Suite.FORMS, "gamma_tau_oracle")
def _gamma_tau_oracle(ctx: SuiteContext) -> CheckResult:
    xs, ys = _pairs_in_window(ctx.rng("gamma_tau_oracle"), 5, ctx.n, (0.2, 0.8))
    worst = 0.0
    for xc, yc in zip(xs, ys):
        x, y = Point(xc), Point(yc)
        gamma, tau = gamma_tau_oracle(x, y)
        worst = max(worst, _relative(gamma_at(x, y).coeffs, gamma), _relative(tau_at(x, y).coeffs, tau))
    return outcome(Suite.FORMS, "gamma_tau_oracle", worst, ctx.tolerances.identity_rel)


@check(Suite.FORMS, "double_invariance")
def _double_invariance(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("double_invariance")
    xs, ys = _pairs_in_window(rng, ctx.samples.pairs, ctx.n)
    shifts = random_half_space_points(rng, ctx.samples.pairs, ctx.n)
    worst = 0.0
    for xc, yc, shift in zip(xs, ys, shifts):
        x, y = Point(xc), Point(yc)
        tx, ty = Point(translate_forward(shift, xc)), Point(translate_forward(shift, yc))
        worst = max(
            worst,
            float(np.max(np.abs(gamma_at(tx, ty).coeffs - gamma_at(x, y).coeffs))),
            float(np.max(np.abs(tau_at(tx, ty).coeffs - tau_at(x, y).coeffs))),
        )
    return outcome(Suite.FORMS, "double_invariance", worst, ctx.tolerances.invariance, samples=len(xs))


# --- kernel ---


@check(Suite.KERNEL, "critical_rejection")
def _critical_rejection(ctx: SuiteContext) -> CheckResult:
    odd = max(ctx.n, 3)
    odd -= 1 - odd % 2
    try:
        KernelSpec(n=odd, m=(odd - 1) // 2)
    except CriticalDegreeError as exc:
        return outcome(Suite.KERNEL, "critical_rejection", 0.0, 0.0, str(exc))
    return outcome(Suite.KERNEL, "critical_rejection", 1.0, 0.0, "critical degree was accepted")


@check(Suite.KERNEL, "profile_ode_residual")
def _profile_ode_residual(ctx: SuiteContext) -> CheckResult:
    if ctx.spec.case is not KernelCase.GENERIC:
        return skipped(Suite.KERNEL, "profile_ode_residual", "G/H system only exists for 0 < m < n/2")
    n, m = ctx.n, ctx.m
    x = np.linspace(0.05, 0.95, 19)
    xv = ctx.profiles().x_values(x)
    h_res = np.abs(h_operator(n, m, x, xv.h, xv.dh, xv.d2h))
    h_scale = np.abs(x * (1.0 - x) * xv.d2h) + np.abs(xv.dh) + np.abs(xv.h)
    source = g_source(n, m, x, xv.h)
    g_res = np.abs(g_operator(n, m, x, xv.g, xv.dg, xv.d2g) - source)
    g_scale = np.abs(x * (1.0 - x) * xv.d2g) + np.abs(xv.dg) + np.abs(xv.g) + np.abs(source)
    residual = max(float(np.max(h_res / h_scale)), float(np.max(g_res / g_scale)))
    return outcome(Suite.KERNEL, "profile_ode_residual", residual, ctx.tolerances.ode_residual)


@check(Suite.KERNEL, "b_residuals")
def _b_residuals(ctx: SuiteContext) -> CheckResult:
    b1, b2 = b_residuals(ctx.profiles(), np.linspace(0.05, 0.95, 19))
    worst = max(float(np.max(np.abs(b1))), float(np.max(np.abs(b2))))
    return outcome(Suite.KERNEL, "b_residuals", worst, ctx.tolerances.harmonicity_rel)


@check(Suite.KERNEL, "harmonicity")
def _harmonicity(ctx: SuiteContext) -> CheckResult:
    n = ctx.n
    x = Point.base(n)
    direction = np.linspace(1.0, 2.0, n)
    direction /= np.linalg.norm(direction)
    worst = 0.0
    for r in (0.2, 0.5, 0.8):
        y = Point(cayley_to_half_space(r * direction))
        worst = max(worst, harmonicity_residual(ctx.spec, ctx.profiles(), x, y, ctx.fd))
    return outcome(Suite.KERNEL, "harmonicity", worst, ctx.tolerances.harmonicity_rel)


@check(Suite.KERNEL, "decay_exponents")
def _decay_exponents(ctx: SuiteContext) -> CheckResult:
    n, m = ctx.n, ctx.m
    fits = decay_exponents(ctx.profiles(), ctx.tolerances)
    deviations = [abs(fits.near_origin[0].exponent - (2 - n))]
    a2_expected = DecayExponents.expected_a2_origin(n)
    if fits.near_origin[1] is not None and ctx.spec.case is KernelCase.GENERIC and a2_expected is not None:
        deviations.append(abs(fits.near_origin[1].exponent - a2_expected))
    if ctx.spec.case is not KernelCase.HALF_DIM:
        expected = DecayExponents.expected_boundary(n, m)
        deviations.extend(abs(fit.exponent - expected) for fit in fits.near_boundary if fit is not None)
    return outcome(
        Suite.KERNEL,
        "decay_exponents",
        max(deviations),
        ctx.tolerances.exponent,
        origin=fits.near_origin[0].exponent,
        boundary=fits.near_boundary[0].exponent,
    )


@check(Suite.KERNEL, "boundary_derivative_decay")
def _boundary_derivative_decay(ctx: SuiteContext) -> CheckResult:
    """|k_m|, |d_x k_m| und |delta_x k_m| fallen wie (1 - r^2)^(n-m-1)."""

    if ctx.spec.case is KernelCase.HALF_DIM:
        return skipped(Suite.KERNEL, "boundary_derivative_decay", "boundary exponents not asserted for n = 2m")
    decay = kernel_boundary_decay(ctx.spec, ctx.profiles(), ctx.fd, ctx.tolerances)
    deviation = max(abs(decay.value.exponent - decay.expected), decay.derivative_deviation())
    return outcome(
        Suite.KERNEL,
        "boundary_derivative_decay",
        deviation,
        ctx.tolerances.derivative_exponent,
        value=decay.value.exponent,
        exterior=decay.exterior.exponent if decay.exterior is not None else None,
        codifferential=decay.codifferential.exponent if decay.codifferential is not None else None,
        expected=decay.expected,
    )


@check(Suite.KERNEL, "kernel_invariance")
def _kernel_invariance(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("kernel_invariance")
    xs, ys = _pairs_in_window(rng, ctx.samples.pairs, ctx.n)
    shift = random_half_space_points(rng, 1, ctx.n)[0]
    profiles = ctx.profiles()
    before = kernel_coefficients(profiles, translate_inverse(ys, xs))
    after = kernel_coefficients(profiles, translate_inverse(translate_forward(shift, ys), translate_forward(shift, xs)))
    deviation = _relative(after, before)
    return outcome(Suite.KERNEL, "kernel_invariance", deviation, ctx.tolerances.invariance, samples=len(xs))


@check(Suite.KERNEL, "star_duality")
def _star_duality(ctx: SuiteContext) -> CheckResult:
    xs, ys = _pairs_in_window(ctx.rng("star_duality"), 20, ctx.n)
    profiles = ctx.profiles()
    worst = 0.0
    for xc, yc in zip(xs, ys):
        x, y = Point(xc), Point(yc)
        direct = star_double(kernel_eval(ctx.spec, profiles, x, y), StarSlot.BOTH).coeffs
        worst = max(worst, _relative(star_dual_kernel(ctx.spec, profiles, x, y).coeffs, direct))
    return outcome(Suite.KERNEL, "star_duality", worst, ctx.tolerances.star_identity)


@check(Suite.KERNEL, "liouville_constant")
def _liouville_constant(ctx: SuiteContext) -> CheckResult:
    if ctx.spec.case is not KernelCase.GENERIC:
        return skipped(Suite.KERNEL, "liouville_constant", "Wronskian of u3, u4 only used for 0 < m < n/2")
    calibrated, exact = liouville_constant(ctx.n, ctx.m)
    return outcome(Suite.KERNEL, "liouville_constant", abs(calibrated - exact) / abs(exact), 1e-8)


# --- operators ---


@check(Suite.OPERATORS, "inverse_identity")
def _inverse_identity(ctx: SuiteContext) -> CheckResult:
    """L(Delta eta) = eta an inneren Punkten einer nicht zur Kalibrierung benutzten Testform.

    Der erste Punkt ist das Zentrum, die uebrigen liegen in Abstand 0.3 in zufaelligen Richtungen.
    """

    n, m = ctx.n, ctx.m
    profiles = ctx.calibrated()
    center = HELD_OUT_BUMP.center(n)
    form = bump_form(n, m, center, HELD_OUT_BUMP.radius, HELD_OUT_BUMP.coefficients(n, m))
    image = laplacian_field(form, CALIBRATION_SCHEME)
    count = ctx.samples.potential_points
    directions = ctx.rng("inverse_identity").normal(size=(count, n))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    distances = np.where(np.arange(count) == 0, 0.0, 0.3)
    offsets = geodesic_polar_points(distances[:, None], directions[:, None, :])[:, 0, :]
    scale = float(np.max(np.abs(form.at(center).coeffs)))
    worst = 0.0
    for offset in offsets:
        x = Point(translate_forward(center.coords, offset))
        value = riesz_potential(image, ctx.spec, profiles, x, ctx.quadrature).coeffs
        worst = max(worst, float(np.max(np.abs(value - form.at(x).coeffs))) / scale)
    return outcome(Suite.OPERATORS, "inverse_identity", worst, ctx.tolerances.identity_rel, points=count)


@check(Suite.OPERATORS, "adjointness")
def _adjointness(ctx: SuiteContext) -> CheckResult:
    n = ctx.n
    degree = max(ctx.m, 1)
    rng = ctx.rng("adjointness")
    center = Point(geodesic_polar_points(np.array(0.3), np.eye(n)[0]))
    alpha = bump_form(n, degree - 1, Point.base(n), 0.6, rng.uniform(0.5, 1.5, size=_size(n, degree - 1)))
    beta = bump_form(n, degree, center, 0.6, rng.uniform(0.5, 1.5, size=_size(n, degree)))
    _, _, defect = adjointness_defect(alpha, beta, ctx.quadrature, ctx.fd)
    return outcome(Suite.OPERATORS, "adjointness", defect, ctx.tolerances.identity_rel)


@check(Suite.OPERATORS, "green_identity")
def _green_identity(ctx: SuiteContext) -> CheckResult:
    n, m = ctx.n, ctx.m
    rng = ctx.rng("green_identity")
    offset = Point(geodesic_polar_points(np.array(0.3), np.eye(n)[0]))
    omega = bump_form(n, m, Point.base(n), 0.8, rng.uniform(0.5, 1.5, size=_size(n, m)))
    eta = bump_form(n, m, offset, 0.8, rng.uniform(0.5, 1.5, size=_size(n, m)))
    result = green_identity_defect(omega, eta, Annulus(0.4, 1.2), ctx.quadrature, ctx.fd)
    return outcome(
        Suite.OPERATORS,
        "green_identity",
        result.relative_defect,
        GREEN_TOLERANCE,
        volume=result.volume,
        boundary=result.boundary,
    )


@check(Suite.OPERATORS, "codifferential_frames")
def _codifferential_frames(ctx: SuiteContext) -> CheckResult:
    n = ctx.n
    degree = max(ctx.m, 1)
    rng = ctx.rng("codifferential_frames")
    form = bump_form(n, degree, Point.base(n), 0.7, rng.uniform(0.5, 1.5, size=_size(n, degree)))
    worst = 0.0
    for local in geodesic_polar_points(np.array([0.2, 0.5])[:, None], np.eye(n)[[0, -1]][:, None, :])[:, 0, :]:
        x = Point(local)
        worst = max(worst, _relative(codifferential_frame(form, x, ctx.fd).coeffs, delta_form(form, x, ctx.fd).coeffs))
    return outcome(Suite.OPERATORS, "codifferential_frames", worst, ctx.tolerances.identity_rel)


@check(Suite.OPERATORS, "derivative_exchange")
def _derivative_exchange(ctx: SuiteContext) -> CheckResult:
    n = ctx.n
    kernel, radius = truncated_test_kernel(n)
    anchor = geodesic_polar_points(np.array(0.4), np.eye(n)[0])

    def density(points: np.ndarray) -> np.ndarray:
        return bump_profile(pseudo_distance_half_space(points, anchor) / 0.7)

    result = convolution_derivative_exchange(kernel, radius, density, Point.base(n), 0, ctx.quadrature, ctx.fd)
    return outcome(Suite.OPERATORS, "derivative_exchange", result.relative_defect, ctx.tolerances.identity_rel)


def _size(n: int, degree: int) -> int:
    return factorial(n) // (factorial(degree) * factorial(n - degree))


# --- estimates ---


@check(Suite.ESTIMATES, "lp_cross_identity")
def _lp_cross_identity(ctx: SuiteContext) -> CheckResult:
    worst = 0.0
    for n in range(3, 11):
        for m in range(n // 2 + 1):
            if abs(n - 2 * m) > 1:
                worst = max(worst, abs(closed_form_p1(n, m) - lp_range(n, m).p1))
    return outcome(Suite.ESTIMATES, "lp_cross_identity", worst, 1e-12)


@check(Suite.ESTIMATES, "schur_boundary")
def _schur_boundary(ctx: SuiteContext) -> CheckResult:
    n, m = ctx.n, ctx.m
    if abs(n - 2 * m) <= 1 or 2 * m >= n - 1:
        return skipped(Suite.ESTIMATES, "schur_boundary", "no L^p range for this (n, m)")
    config = ctx.config
    grid = np.round(np.arange(config.p_min, config.p_max + 0.5 * config.p_step, config.p_step), 12)
    window = lp_range(n, m)
    rows = schur_scan(n, m, grid)
    mismatches = sum(row.feasible != window.contains(row.p) for row in rows)
    return outcome(Suite.ESTIMATES, "schur_boundary", mismatches, 0.0, p1=window.p1, p2=window.p2)


@check(Suite.ESTIMATES, "auxiliary_derivatives")
def _auxiliary_derivatives(ctx: SuiteContext) -> CheckResult:
    n = ctx.n
    rng = ctx.rng("auxiliary_derivatives")
    count = ctx.samples.jet_points
    ball = rng.normal(size=(count, n))
    ball *= (rng.uniform(0.1, 0.9, size=count) / np.linalg.norm(ball, axis=1))[:, None]
    z = cayley_to_half_space(ball)
    analytic = auxiliary_derivatives(z)
    _, first, second = invariant_jet(relative_radius, z, FDScheme(step=1e-3, order=FDOrder.CENTRAL4))
    deviation = max(_relative(first, analytic.first), _relative(second, analytic.second))
    return outcome(Suite.ESTIMATES, "auxiliary_derivatives", deviation, ctx.tolerances.identity_rel, samples=count)


@check(Suite.ESTIMATES, "exponent_table")
def _exponent_table(ctx: SuiteContext) -> CheckResult:
    if ctx.spec.case is KernelCase.HALF_DIM:
        return skipped(Suite.ESTIMATES, "exponent_table", "half-dimension kernel has logarithmic terms")
    rows = exponent_table(ctx.spec, ctx.profiles(), ctx.tolerances)
    deviation = max(
        max(abs(row.origin - row.expected_origin), abs(row.boundary - row.expected_boundary)) for row in rows
    )
    return outcome(
        Suite.ESTIMATES,
        "exponent_table",
        deviation,
        ctx.tolerances.derivative_exponent,
        rows=[[row.quantity, row.origin, row.boundary] for row in rows],
    )


@check(Suite.ESTIMATES, "cz_cancellation")
def _cz_cancellation(ctx: SuiteContext) -> CheckResult:
    n, m = ctx.n, ctx.m
    if n < 3 or abs(n - 2 * m) <= 1:
        return skipped(Suite.ESTIMATES, "cz_cancellation", "decomposition needs n >= 3 and |n - 2m| > 1")
    decomposition = decompose_second_derivative(n, m, 0, 1, profiles=ctx.profiles(), tolerances=ctx.tolerances)
    worst = abs(cz_cancellation(decomposition.residual_split.omega, n))
    return outcome(Suite.ESTIMATES, "cz_cancellation", worst, CZ_TOLERANCE)


@check(Suite.ESTIMATES, "a_quantity")
def _a_quantity(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("a_quantity")
    x = random_ball_points(rng, ctx.samples.points, ctx.n)
    y = random_ball_points(rng, ctx.samples.points, ctx.n)
    result = a_quantity_identities(x, y)
    measured = max(result.identity_defect, -result.product_slack, -result.root_slack, 0.0)
    return outcome(Suite.ESTIMATES, "a_quantity", measured, ctx.tolerances.invariance)


@check(Suite.ESTIMATES, "truncated_kernel_bound")
def _truncated_kernel_bound(ctx: SuiteContext) -> CheckResult:
    closed, geodesic = truncated_kernel_bound(ctx.n)
    return outcome(Suite.ESTIMATES, "truncated_kernel_bound", abs(closed - geodesic) / closed, 1e-8, bound=closed)


__all__ = [
    "Check",
    "RegisteredCheck",
    "SuiteContext",
    "check",
    "outcome",
    "registered_checks",
    "skipped",
]
