"""Unit-Tests fuer Testformen, Laplace, d/delta, Faltungen und Fehlerfaelle des Riesz-Potentials."""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.integrate import quad

from double_forms.forms import FormField, FrameError
from double_forms.multi_index import BidegreeError, dimension, index_lookup
from geometry.isometries import cayley_to_half_space, translate_inverse
from geometry.points import Frame, HyperbolicModel, ModelMismatchError, Point
from geometry.sphere import geodesic_polar_points, sphere_area, sphere_rule
from models.types import FDScheme, QuadratureSpec
from operators import (
    Annulus,
    QuadratureError,
    SupportViolationError,
    adjointness_defect,
    bump_form,
    bump_profile,
    codifferential_frame,
    convolution_derivative_exchange,
    d_form,
    delta_form,
    harmonicity_residual,
    hyperbolic_convolution,
    inner_correction,
    inner_product_integral,
    kernel_boundary_decay,
    kernel_column_field,
    laplacian_form_halfspace,
    laplacian_scalar_ball,
    laplacian_scalar_halfspace,
    potential_decay_exponents,
    riesz_potential,
    star_field,
    truncated_test_kernel,
)
from riesz_kernel import KernelSpec, KernelSpecError, kernel_coefficients, radial_profiles, relative_radius
from util.quadrature import gauss_legendre

FD = FDScheme(step=1e-3, richardson=True)
COARSE = QuadratureSpec(radial_nodes=6, radial_panels=3, polar_nodes=8, transverse_nodes=3, azimuth_nodes=6)


def _constant(n: int, degree: int, label: str) -> FormField:
    vector = np.zeros(len(index_lookup(n, degree)))
    vector[index_lookup(n, degree)[tuple(int(k) - 1 for k in label.split(","))]] = 1.0
    return FormField.constant(n, degree, Frame.INVARIANT_W, vector)


def test_bump_profile() -> None:
    values = bump_profile(np.array([0.0, 0.5, 1.0, -1.2]))
    assert values[0] == 1.0
    assert 0.0 < values[1] < 1.0
    assert values[2] == 0.0 and values[3] == 0.0


def test_bump_form_labels_and_support() -> None:
    center = Point.base(4)
    form = bump_form(4, 2, center, 0.5, {"1,2": 2.0, "3,4": -1.0})
    value = form.at(center).coeffs
    lookup = index_lookup(4, 2)
    assert value[lookup[(0, 1)]] == 2.0
    assert value[lookup[(2, 3)]] == -1.0
    assert np.count_nonzero(value) == 2
    far = Point(geodesic_polar_points(np.array(2.0), np.eye(4)[0]))
    assert np.all(form.at(far).coeffs == 0.0)
    assert form.support is not None and form.support.radius == 0.5


def test_scalar_laplacian_of_height_powers() -> None:
    n = 4
    x = Point([0.3, -0.2, 0.1, 1.7])
    for s in (1.0, 2.0, 3.0):
        value = laplacian_scalar_halfspace(lambda p, s=s: p[:, -1] ** s, x, FD)
        assert value == pytest.approx(s * (n - 1 - s) * 1.7**s, rel=1e-6, abs=1e-8)


def test_ball_and_half_space_laplacians_agree() -> None:
    n, s = 4, 1.5

    def ball_field(p: np.ndarray) -> np.ndarray:
        return cayley_to_half_space(p)[:, -1] ** s

    value = laplacian_scalar_ball(ball_field, Point(np.zeros(n), HyperbolicModel.BALL), FD)
    assert value == pytest.approx(s * (n - 1 - s), rel=1e-6)
    with pytest.raises(ModelMismatchError):
        laplacian_scalar_ball(ball_field, Point.base(n), FD)


def test_frame_laplacian_of_zero_form_matches_scalar() -> None:
    n = 3
    x = Point([0.2, 0.4, 0.9])

    def f(p: np.ndarray) -> np.ndarray:
        return np.sin(p[:, 0]) * p[:, -1] ** 2

    form = FormField(n, 0, Frame.INVARIANT_W, lambda p: f(p)[:, None])
    assert laplacian_form_halfspace(form, x, FD).coeffs[0] == pytest.approx(
        laplacian_scalar_halfspace(f, x, FD), rel=1e-6
    )


def test_frame_laplacian_of_constant_one_forms() -> None:
    n = 5
    x = Point([0.1, 0.0, -0.3, 0.2, 0.6])
    np.testing.assert_allclose(laplacian_form_halfspace(_constant(n, 1, "5"), x, FD).coeffs, 0.0, atol=1e-8)
    value = laplacian_form_halfspace(_constant(n, 1, "1"), x, FD).coeffs
    expected = np.zeros(n)
    expected[0] = -(n - 2)
    np.testing.assert_allclose(value, expected, atol=1e-8)


def test_frame_laplacian_needs_w_frame() -> None:
    form = FormField.constant(3, 1, Frame.INVARIANT_ETA, np.ones(3))
    with pytest.raises(FrameError):
        laplacian_form_halfspace(form, Point.base(3), FD)


def test_exterior_derivative_of_height() -> None:
    n = 4
    x = Point([0.5, 0.1, 0.2, 1.3])
    form = FormField(n, 0, Frame.INVARIANT_W, lambda p: p[:, -1:])
    value = d_form(form, x, FD).coeffs
    expected = np.zeros(n)
    expected[-1] = 1.3
    np.testing.assert_allclose(value, expected, atol=1e-8)


def test_codifferential_of_last_coframe() -> None:
    n = 4
    x = Point([0.2, -0.1, 0.3, 0.8])
    form = _constant(n, 1, "4")
    assert codifferential_frame(form, x, FD).coeffs[0] == pytest.approx(n - 1, rel=1e-8)
    assert delta_form(form, x, FD).coeffs[0] == pytest.approx(n - 1, rel=1e-6)
    with pytest.raises(BidegreeError):
        codifferential_frame(FormField.constant(n, 0, Frame.INVARIANT_W, np.ones(1)), x, FD)


def test_star_field_needs_orthonormal_frame() -> None:
    form = FormField.constant(3, 1, Frame.EUCLIDEAN, np.ones(3))
    with pytest.raises(FrameError):
        star_field(form)
    starred = star_field(FormField.constant(3, 1, Frame.INVARIANT_W, np.array([1.0, 0.0, 0.0])))
    assert starred.degree == 2


def test_adjointness_and_annulus_arguments() -> None:
    alpha = bump_form(3, 0, Point.base(3), 0.6, np.ones(1))
    with pytest.raises(SupportViolationError):
        adjointness_defect(alpha, alpha, COARSE, FD)
    with pytest.raises(ValueError):
        Annulus(1.0, 0.5)
    unsupported = FormField.constant(3, 0, Frame.INVARIANT_W, np.ones(1))
    with pytest.raises(SupportViolationError):
        inner_product_integral(unsupported, unsupported, COARSE)


def test_inner_product_of_bump_with_itself_is_positive() -> None:
    form = bump_form(3, 1, Point.base(3), 0.6, np.array([1.0, 0.5, -0.5]))
    assert inner_product_integral(form, form, COARSE) > 0.0


def test_convolution_of_radial_bump_matches_polar_integral() -> None:
    n, radius = 3, 0.6

    def kernel(z: np.ndarray) -> np.ndarray:
        return bump_profile(relative_radius(np.atleast_2d(z)) / radius)

    reach = 2.0 * math.atanh(radius)
    exact, _ = quad(lambda d: bump_profile(np.tanh(0.5 * d) / radius) * np.sinh(d) ** (n - 1), 0.0, reach)
    exact *= sphere_area(n)
    q = QuadratureSpec(radial_nodes=16, radial_panels=4)
    for x in (Point.base(n), Point([0.4, -0.2, 2.0])):
        value = hyperbolic_convolution(kernel, lambda p: np.ones(p.shape[0]), x, q, kernel_radius=reach)
        assert float(value[0]) == pytest.approx(exact, rel=1e-4)


def test_convolution_without_bounded_domain_is_rejected() -> None:
    kernel, _ = truncated_test_kernel(3)
    with pytest.raises(SupportViolationError):
        hyperbolic_convolution(kernel, lambda p: np.ones(p.shape[0]), Point.base(3), COARSE)


def test_frame_derivative_commutes_with_convolution() -> None:
    n = 3
    kernel, radius = truncated_test_kernel(n)
    anchor = geodesic_polar_points(np.array(0.4), np.eye(n)[0])

    def density(points: np.ndarray) -> np.ndarray:
        return np.exp(-np.sum((points - anchor) ** 2, axis=-1))

    result = convolution_derivative_exchange(kernel, radius, density, Point.base(n), 0, QuadratureSpec(), FD)
    assert result.relative_defect < 1e-3


def test_harmonicity_residual_is_small() -> None:
    spec = KernelSpec(n=5, m=1)
    profiles = radial_profiles(spec)
    x = Point.base(5)
    direction = np.linspace(1.0, 2.0, 5)
    direction /= np.linalg.norm(direction)
    y = Point(cayley_to_half_space(0.5 * direction))
    assert harmonicity_residual(spec, profiles, x, y, FD) < 1e-3
    too_close = Point(cayley_to_half_space(0.01 * direction))
    with pytest.raises(KernelSpecError):
        harmonicity_residual(spec, profiles, x, too_close, FD)


def test_riesz_potential_argument_errors() -> None:
    spec = KernelSpec(n=4, m=1)
    profiles = radial_profiles(spec)
    unsupported = FormField.constant(4, 1, Frame.INVARIANT_W, np.ones(4))
    with pytest.raises(SupportViolationError):
        riesz_potential(unsupported, spec, profiles, Point.base(4), COARSE)
    wrong_degree = bump_form(4, 2, Point.base(4), 0.5, np.ones(6))
    with pytest.raises(SupportViolationError):
        riesz_potential(wrong_degree, spec, profiles, Point.base(4), COARSE)


def test_riesz_potential_of_zero_form_vanishes() -> None:
    spec = KernelSpec(n=4, m=1)
    form = bump_form(4, 1, Point.base(4), 0.5, np.zeros(4))
    value = riesz_potential(form, spec, radial_profiles(spec), Point([0.1, 0.0, 0.0, 1.2]), COARSE, refine=False)
    assert np.all(value.coeffs == 0.0)


def test_riesz_potential_refinement_gives_up_on_impossible_tolerance() -> None:
    spec = KernelSpec(n=4, m=0)
    form = bump_form(4, 0, Point.base(4), 0.5, np.ones(1))
    strict = COARSE.model_copy(update={"rel_tolerance": 1e-15, "radial_nodes": 4, "polar_nodes": 4})
    with pytest.raises(QuadratureError):
        riesz_potential(form, spec, radial_profiles(spec), Point.base(4), strict)


def test_inner_correction_is_linear_in_the_value() -> None:
    profiles = radial_profiles(KernelSpec(n=4, m=1))
    one = inner_correction(profiles, np.ones(4), 1e-3)
    assert np.all(inner_correction(profiles, np.zeros(4), 1e-3) == 0.0)
    np.testing.assert_allclose(inner_correction(profiles, 2.0 * np.ones(4), 1e-3), 2.0 * one)


def _inner_ball_reference(profiles, value: np.ndarray, inner_cutoff: float) -> np.ndarray:
    n = profiles.spec.n
    limit = 2.0 * np.arctanh(inner_cutoff)
    nodes, weights = gauss_legendre(24)
    d = 0.5 * limit * (nodes + 1.0)
    dirs, ang_w = sphere_rule(n, 6, 12)
    points = geodesic_polar_points(d[:, None], dirs[None, :, :]).reshape(-1, n)
    kernel = kernel_coefficients(profiles, translate_inverse(points, Point.base(n).coords))
    w = ((0.5 * limit * weights * np.sinh(d) ** (n - 1))[:, None] * ang_w[None, :]).ravel()
    return np.einsum("k,kij,j->i", w, kernel, value)


@pytest.mark.parametrize(("n", "m"), [(5, 1), (4, 0), (7, 2)])
def test_inner_correction_matches_the_full_kernel_on_the_small_ball(n: int, m: int) -> None:
    profiles = radial_profiles(KernelSpec(n=n, m=m))
    value = np.linspace(1.0, 2.0, dimension(n, m))
    reference = _inner_ball_reference(profiles, value, 1e-2)
    corrected = inner_correction(profiles, value, 1e-2)
    assert np.max(np.abs(corrected - reference)) < 1e-3 * np.max(np.abs(reference))


def test_potential_decay_exponents_generic() -> None:
    spec = KernelSpec(n=5, m=1)
    decay = potential_decay_exponents(
        spec,
        radial_profiles(spec),
        np.array([1.0, 0.0, 0.0, 0.0, 0.5]),
        0.5,
        COARSE,
        FDScheme(step=1e-3),
        window=(1e-3, 2e-2),
        samples=4,
    )
    assert decay.expected == 3.0
    assert decay.value.exponent == pytest.approx(3.0, abs=0.15)
    assert decay.exterior is not None and decay.codifferential is not None
    assert decay.exterior.exponent == pytest.approx(3.0, abs=0.15)
    assert decay.codifferential.exponent == pytest.approx(3.0, abs=0.15)
    assert decay.within(0.15)


@pytest.mark.parametrize(("n", "m"), [(5, 1), (4, 0), (7, 2)])
def test_kernel_boundary_decay_of_value_and_derivatives(n: int, m: int) -> None:
    spec = KernelSpec(n=n, m=m)
    decay = kernel_boundary_decay(spec, radial_profiles(spec), FD)
    assert decay.expected == float(n - m - 1)
    assert decay.value.exponent == pytest.approx(decay.expected, abs=0.1)
    assert decay.exterior is not None
    assert decay.exterior.exponent == pytest.approx(decay.expected, abs=0.15)
    if m == 0:
        assert decay.codifferential is None
    else:
        assert decay.codifferential.exponent == pytest.approx(decay.expected, abs=0.15)
    assert decay.derivative_deviation() <= 0.15


def test_kernel_column_field_matches_pointwise_kernel() -> None:
    spec = KernelSpec(n=5, m=1)
    profiles = radial_profiles(spec)
    y = Point([0.3, -0.2, 0.1, 0.0, 1.7])
    x = Point([0.1, 0.0, 0.2, -0.1, 0.9])
    field = kernel_column_field(profiles, y, 2)
    direct = kernel_coefficients(profiles, translate_inverse(y.coords, x.coords))[:, 2]
    np.testing.assert_allclose(field.at(x).coeffs, direct, rtol=1e-12)
