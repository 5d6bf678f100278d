"""Unit-Tests fuer Kernparameter, radiale Profile und die Auswertung von k_m."""

from __future__ import annotations

import numpy as np
import pytest

from double_forms.double_form import StarSlot, star_double
from geometry.isometries import cayley_to_half_space
from geometry.points import Point
from models.types import QuadratureSpec, Tolerances
from riesz_kernel import (
    CalibrationError,
    CriticalDegreeError,
    DecayExponents,
    HalfDimProfiles,
    KernelCase,
    KernelSingularityError,
    KernelSpec,
    KernelSpecError,
    ProfileConstructionError,
    ScalarProfiles,
    a2_cancellation_ratio,
    analytic_normalization,
    b_residuals,
    calibrate,
    calibrate_normalization,
    decay_exponents,
    half_dim_profiles,
    kernel_coefficients,
    kernel_eval,
    radial_profiles,
    scalar_green,
    star_dual_kernel,
)
from riesz_kernel import normalization


@pytest.fixture(scope="module")
def generic_profiles():
    return radial_profiles(KernelSpec(n=5, m=1))


def _relative(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b)) / max(float(np.max(np.abs(b))), 1e-300))


def test_kernel_spec_cases() -> None:
    assert KernelSpec(n=5, m=0).case is KernelCase.SCALAR
    assert KernelSpec(n=5, m=1).case is KernelCase.GENERIC
    assert KernelSpec(n=4, m=2).case is KernelCase.HALF_DIM
    assert KernelSpec(n=7, m=2).exponent_gap == 3


def test_kernel_spec_rejects_critical_and_large_degrees() -> None:
    with pytest.raises(CriticalDegreeError):
        KernelSpec(n=5, m=2)
    with pytest.raises(CriticalDegreeError):
        KernelSpec(n=3, m=1)
    with pytest.raises(KernelSpecError):
        KernelSpec(n=4, m=3)


def test_normalization_defaults_and_override() -> None:
    spec = KernelSpec(n=5, m=1)
    assert spec.normalization == pytest.approx(analytic_normalization(5, 1))
    assert analytic_normalization(5, 1) < 0.0 < analytic_normalization(5, 0)
    assert spec.with_normalization(2.5).normalization == 2.5
    assert spec.normalization == pytest.approx(analytic_normalization(5, 1))


def test_profiles_reject_arguments_outside_unit_interval(generic_profiles) -> None:
    for r in (0.0, 1.0, -0.2, 1.5):
        with pytest.raises(ProfileConstructionError):
            generic_profiles.evaluate(r)


def test_radial_profiles_dispatch_by_case() -> None:
    assert isinstance(radial_profiles(KernelSpec(n=4, m=0)), ScalarProfiles)
    assert isinstance(radial_profiles(KernelSpec(n=4, m=2)), HalfDimProfiles)


def test_generic_decay_exponents(generic_profiles) -> None:
    fits = decay_exponents(generic_profiles, Tolerances())
    assert fits.near_origin[0].exponent == pytest.approx(2 - 5, abs=0.1)
    assert fits.near_origin[1] is not None
    assert fits.near_origin[1].exponent == pytest.approx(DecayExponents.expected_a2_origin(5), abs=0.1)
    expected = DecayExponents.expected_boundary(5, 1)
    assert expected == 2.0
    assert fits.near_boundary[0].exponent == pytest.approx(expected, abs=0.1)
    assert fits.near_boundary[1] is not None
    assert fits.near_boundary[1].exponent == pytest.approx(expected, abs=0.1)


def test_scalar_decay_has_no_second_profile() -> None:
    fits = decay_exponents(radial_profiles(KernelSpec(n=4, m=0)))
    assert fits.near_origin[1] is None
    assert fits.near_boundary[1] is None
    assert fits.near_origin[0].exponent == pytest.approx(-2.0, abs=0.1)
    assert fits.near_boundary[0].exponent == pytest.approx(DecayExponents.expected_boundary(4, 0), abs=0.1)


def test_b_residuals_vanish(generic_profiles) -> None:
    b1, b2 = b_residuals(generic_profiles, np.linspace(0.05, 0.95, 19))
    assert np.max(np.abs(b1)) < 1e-3
    assert np.max(np.abs(b2)) < 1e-3


def test_kernel_rejects_diagonal(generic_profiles) -> None:
    z = np.array([0.0, 0.0, 0.0, 0.0, 1.0])
    with pytest.raises(KernelSingularityError):
        kernel_coefficients(generic_profiles, z)
    near = np.array([1e-9, 0.0, 0.0, 0.0, 1.0])
    with pytest.raises(KernelSingularityError):
        kernel_coefficients(generic_profiles, near)


def test_kernel_eval_rejects_mismatched_profiles(generic_profiles) -> None:
    x = Point.base(5)
    y = Point([0.1, 0.2, 0.0, 0.0, 1.3])
    with pytest.raises(KernelSpecError):
        kernel_eval(KernelSpec(n=5, m=0), generic_profiles, x, y)


def test_kernel_shape_and_bidegree(generic_profiles) -> None:
    x = Point([0.1, -0.3, 0.2, 0.0, 0.8])
    y = Point([0.4, 0.1, -0.2, 0.3, 1.6])
    form = kernel_eval(KernelSpec(n=5, m=1), generic_profiles, x, y)
    assert (form.p, form.q) == (1, 1)
    assert form.coeffs.shape == (5, 5)
    assert np.all(np.isfinite(form.coeffs))


@pytest.mark.parametrize(("n", "m"), [(5, 1), (4, 0), (4, 2), (6, 1)])
def test_star_dual_matches_double_star(n: int, m: int) -> None:
    spec = KernelSpec(n=n, m=m)
    profiles = radial_profiles(spec)
    direction = np.linspace(1.0, 2.0, n)
    direction /= np.linalg.norm(direction)
    x = Point.base(n)
    for r in (0.2, 0.6):
        y = Point(cayley_to_half_space(r * direction))
        direct = star_double(kernel_eval(spec, profiles, x, y), StarSlot.BOTH).coeffs
        dual = star_dual_kernel(spec, profiles, x, y).coeffs
        assert _relative(dual, direct) < 1e-9


def test_scalar_green_shape() -> None:
    r = np.array([0.1, 0.3, 0.5, 0.7, 0.9])
    values = scalar_green(5, r)
    assert np.all(values > 0.0)
    assert np.all(np.diff(values) < 0.0)
    c_n = analytic_normalization(5, 0)
    near = scalar_green(5, 1e-3)
    assert float(near) * 1e-3**3 * 3.0 / c_n == pytest.approx(1.0, rel=1e-2)
    with pytest.raises(ProfileConstructionError):
        scalar_green(5, 1.0)


def test_scalar_profile_derivative_matches_difference_quotient() -> None:
    profiles = radial_profiles(KernelSpec(n=5, m=0))
    r, h = 0.4, 1e-5
    values = profiles.evaluate(np.array([r]))
    quotient = (profiles.a1(r + h) - profiles.a1(r - h)) / (2.0 * h)
    assert float(values.da1[0]) == pytest.approx(float(quotient), rel=1e-6)
    assert np.all(values.a2 == 0.0)


def test_half_dim_closed_form_and_derivative() -> None:
    profiles = half_dim_profiles(4, a=1.0, b=-1.0, c=0.0, d=0.0)
    x = np.array([0.2, 0.5, 0.8])
    xv = profiles.x_values(x)
    np.testing.assert_allclose(xv.h, x**-2.0 - 1.0, rtol=1e-12)
    h = 1e-6
    quotient = (profiles.x_values(x + h).g - profiles.x_values(x - h).g) / (2.0 * h)
    np.testing.assert_allclose(xv.dg, quotient, rtol=1e-5)


def test_half_dim_needs_even_dimension() -> None:
    with pytest.raises(KernelSpecError):
        half_dim_profiles(5, 1.0, -1.0, 0.0, 0.0)


def test_renormalized_profiles_scale_linearly(generic_profiles) -> None:
    r = np.array([0.2, 0.5, 0.8])
    base = generic_profiles.evaluate(r)
    scaled = generic_profiles.renormalized(2.0 * generic_profiles.a0).evaluate(r)
    np.testing.assert_allclose(scaled.a1, 2.0 * base.a1, rtol=1e-10)
    np.testing.assert_allclose(scaled.a2, 2.0 * base.a2, rtol=1e-10)


def test_a2_cancels_towards_the_boundary(generic_profiles) -> None:
    near, nearer = a2_cancellation_ratio(generic_profiles, np.array([0.99, 0.999]))
    assert nearer < 0.05
    assert nearer / near < 0.3


@pytest.mark.parametrize(("n", "m"), [(4, 1), (6, 1), (7, 2)])
def test_generic_profiles_build_across_dimensions(n: int, m: int) -> None:
    profiles = radial_profiles(KernelSpec(n=n, m=m))
    r = np.array([0.01, 0.2, 0.5, 0.9, 0.999])
    values = profiles.evaluate(r)
    for field in (values.a1, values.a2, values.a3, values.a4, values.da1, values.da2, values.da3):
        assert np.all(np.isfinite(field))
    e = n - 2 * m
    closed_a4 = -((1.0 - r * r) ** e) * ((n - m) * values.a3 + r * values.da3)
    assert _relative(values.a4, closed_a4) < 1e-7
    b1, b2 = b_residuals(profiles, np.linspace(0.1, 0.9, 9))
    assert np.max(np.abs(b1)) < 1e-7
    assert np.max(np.abs(b2)) < 1e-5


def test_a2_origin_exponent_after_cancellation(generic_profiles) -> None:
    assert DecayExponents.expected_a2_origin(5) == -1.0
    assert DecayExponents.expected_a2_origin(7) == -3.0
    assert DecayExponents.expected_a2_origin(4) is None
    r = np.array([1e-3, 1e-2])
    xv = generic_profiles.x_values(r * r)
    assert np.all(a2_cancellation_ratio(generic_profiles, r * r) < 1e-3)
    assert np.all(np.abs(2.0 * xv.dg) * r**5 > 1e-3 * abs(generic_profiles.a0))


COARSE = QuadratureSpec(radial_nodes=6, radial_panels=3, polar_nodes=8, transverse_nodes=3, azimuth_nodes=6)


def test_inverse_ratio_is_inverse_linear_in_a0(generic_profiles) -> None:
    spec = KernelSpec(n=5, m=1)
    bump = normalization.REFERENCE_BUMPS[0]
    base = normalization.inverse_ratio(spec, generic_profiles, bump, COARSE)
    doubled = generic_profiles.renormalized(2.0 * generic_profiles.a0)
    assert normalization.inverse_ratio(spec, doubled, bump, COARSE) == pytest.approx(0.5 * base, rel=1e-9)


def test_calibration_scales_a0_by_the_mean_ratio(monkeypatch: pytest.MonkeyPatch, generic_profiles) -> None:
    spec = KernelSpec(n=5, m=1)
    monkeypatch.setattr(normalization, "inverse_ratio", lambda *args, **kwargs: 2.0)
    result = calibrate(spec, generic_profiles, COARSE)
    assert result.ratios == (2.0, 2.0)
    assert result.spread == 0.0
    assert result.a0 == pytest.approx(2.0 * generic_profiles.a0)
    assert result.profiles.a0 == pytest.approx(result.a0)


def test_calibration_rejects_unstable_ratios(monkeypatch: pytest.MonkeyPatch, generic_profiles) -> None:
    ratios = iter([1.0, 1.1])
    monkeypatch.setattr(normalization, "inverse_ratio", lambda *args, **kwargs: next(ratios))
    with pytest.raises(CalibrationError):
        calibrate(KernelSpec(n=5, m=1), generic_profiles, COARSE)


def test_calibrated_scalar_kernel_inverts_the_laplacian() -> None:
    spec = KernelSpec(n=4, m=0)
    q = QuadratureSpec()
    result = calibrate(spec, q=q)
    assert result.spread < Tolerances().calibration_spread
    assert result.a0 == pytest.approx(analytic_normalization(4, 0), rel=1e-2)
    held_out = normalization.inverse_ratio(spec, result.profiles, normalization.HELD_OUT_BUMP, q)
    assert 0.999 <= held_out <= 1.001
    assert calibrate_normalization(spec, q) == pytest.approx(result.a0, rel=1e-12)
