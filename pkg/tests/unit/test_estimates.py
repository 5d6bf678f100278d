"""Unit-Tests fuer L^p-Bereich, Schur-Test, Kernklassen und die Diagnosen der Abschaetzungen."""

from __future__ import annotations

import math

import numpy as np
import pytest

from estimates import (
    ADMISSIBLE_PARTS,
    CriticalRangeError,
    ExponentRangeError,
    KernelClassError,
    KernelKind,
    SampleCoverageError,
    a_quantity_identities,
    auxiliary_bounds,
    auxiliary_derivatives,
    calderon_zygmund_class,
    classify_kernel,
    closed_form_p1,
    conjugate,
    cz_cancellation,
    cz_cutoff_sensitivity,
    cz_diagnostics,
    decompose_second_derivative,
    empirical_opnorm,
    exponent_table,
    feasible_alpha_interval,
    invariant_jet,
    k3_weight_test,
    lipschitz_ratio,
    lp_norm,
    lp_range,
    sample_kernel,
    schur_scan,
    schur_weight_test,
    sobolev_ratio,
    truncated_kernel_bound,
    weight_integral,
    weight_integral_exact,
)
from estimates.decomposition import coefficient_factor
from geometry.isometries import cayley_to_half_space, random_ball_points
from geometry.points import Point
from models.types import FDOrder, FDScheme, QuadratureSpec, Tolerances
from operators.bump import bump_form
from riesz_kernel import KernelSpec, radial_profiles, relative_radius


def _first_coordinate(w: np.ndarray) -> np.ndarray:
    return np.atleast_2d(w)[:, 0]


def _ball_points(n: int, radii: np.ndarray, seed: int = 7) -> np.ndarray:
    rng = np.random.default_rng(seed)
    ball = rng.normal(size=(radii.size, n))
    ball *= (radii / np.linalg.norm(ball, axis=1))[:, None]
    return ball


# --- L^p-Bereich und Schur-Test ---


def test_lp_range_for_five_one() -> None:
    window = lp_range(5, 1)
    assert window.p1 == pytest.approx(4.0 / 3.0)
    assert window.p2 == pytest.approx(4.0)
    assert window.spectral_bound == pytest.approx(1.0)
    assert window.contains(2.0)
    assert not window.contains(4.0)
    assert window.spectral_contains(3.9)
    assert not window.spectral_contains(1.3)


def test_lp_range_scalar_is_unbounded_above() -> None:
    window = lp_range(4, 0)
    assert math.isinf(window.p2)
    assert window.p1 == pytest.approx(1.0)
    assert window.contains(1000.0)


@pytest.mark.parametrize(("n", "m"), [(5, 2), (3, 1), (4, 3), (4, -1)])
def test_lp_range_rejects_critical_degrees(n: int, m: int) -> None:
    with pytest.raises(CriticalRangeError):
        lp_range(n, m)


def test_lp_range_agrees_with_closed_form() -> None:
    for n in range(3, 11):
        for m in range(n // 2 + 1):
            if abs(n - 2 * m) > 1:
                assert lp_range(n, m).p1 == pytest.approx(closed_form_p1(n, m), rel=1e-12)


def test_conjugate_exponent() -> None:
    assert conjugate(2.0) == 2.0
    assert conjugate(4.0) == pytest.approx(4.0 / 3.0)
    assert math.isinf(conjugate(math.inf))
    with pytest.raises(CriticalRangeError):
        conjugate(1.0)


def test_weight_integral_matches_beta_function() -> None:
    for s in (1.2, 2.0, 2.7):
        assert weight_integral(5, 1, s) == pytest.approx(weight_integral_exact(5, 1, s), rel=1e-9)
    assert math.isinf(weight_integral(5, 1, 1.0))
    assert math.isinf(weight_integral(5, 1, 3.0))
    assert math.isinf(weight_integral_exact(5, 1, 0.5))


def test_schur_scan_reproduces_lp_range() -> None:
    grid = np.round(np.arange(1.05, 6.0 + 0.025, 0.05), 12)
    window = lp_range(5, 1)
    rows = schur_scan(5, 1, grid)
    assert len(rows) == grid.size
    for row in rows:
        assert row.feasible == window.contains(row.p), row.p
    feasible = [row.p for row in rows if row.feasible]
    assert min(feasible) == pytest.approx(1.35)
    assert max(feasible) == pytest.approx(3.95)


def test_feasible_interval_and_weight_test() -> None:
    low, high = feasible_alpha_interval(5, 1, 2.0)
    assert (low, high) == pytest.approx((0.5, 1.5))
    assert schur_weight_test(5, 1, 2.0, 1.0).finite
    assert not schur_weight_test(5, 1, 2.0, 2.0).finite
    with pytest.raises(CriticalRangeError):
        schur_weight_test(5, 2, 2.0, 1.0)


# --- Hilfsabschaetzungen ---


def test_auxiliary_derivatives_closed_form() -> None:
    z = cayley_to_half_space(_ball_points(5, np.linspace(0.1, 0.9, 12)))
    aux = auxiliary_derivatives(z)
    s = np.sum(z * z, axis=1) + 2.0 * z[:, -1] + 1.0
    expected = (1.0 - aux.r**2)[:, None] * z[:, :-1] * z[:, -1:] / (aux.r * s)[:, None]
    np.testing.assert_allclose(aux.first[:, :-1], expected, rtol=1e-10, atol=1e-14)
    np.testing.assert_allclose(aux.r, relative_radius(z), rtol=1e-12)


def test_auxiliary_derivatives_match_differences() -> None:
    z = cayley_to_half_space(_ball_points(4, np.linspace(0.2, 0.8, 6), seed=3))
    aux = auxiliary_derivatives(z)
    _, first, second = invariant_jet(relative_radius, z, FDScheme(step=1e-3, order=FDOrder.CENTRAL4))
    np.testing.assert_allclose(first, aux.first, atol=1e-7)
    np.testing.assert_allclose(second, aux.second, atol=1e-5)


def test_auxiliary_bounds_are_finite() -> None:
    z = cayley_to_half_space(_ball_points(5, np.linspace(0.05, 0.95, 40), seed=11))
    bounds = auxiliary_bounds(z)
    assert bounds.samples == 40
    assert 0.0 < bounds.first < 10.0
    assert 0.0 < bounds.second < 10.0


# --- Kernklassen ---


def test_admissible_kernel_is_classified() -> None:
    n, m = 5, 1

    def kernel(z: np.ndarray) -> np.ndarray:
        r = relative_radius(z)
        return r ** (1 - n) * ((1.0 - r) * (1.0 + r)) ** (n - m - 1)

    verdict = classify_kernel(sample_kernel(kernel, n), m, n)
    assert verdict.kind is KernelKind.ADMISSIBLE
    assert verdict.origin_exponent == pytest.approx(1 - n, abs=0.05)
    assert verdict.boundary_exponent == pytest.approx(n - m - 1, abs=0.05)


def test_singular_kernel_is_unbounded() -> None:
    n = 5
    verdict = classify_kernel(sample_kernel(lambda z: relative_radius(z) ** (-n), n), 1, n)
    assert verdict.kind is KernelKind.UNBOUNDED
    assert not verdict.admissible


def test_zero_kernel_is_trivially_admissible() -> None:
    verdict = classify_kernel(sample_kernel(lambda z: np.zeros(np.atleast_2d(z).shape[0]), 4), 1, 4)
    assert verdict.admissible
    assert math.isinf(verdict.origin_exponent)


def test_classification_requires_coverage() -> None:
    narrow = Tolerances(origin_window=(1e-2, 1e-1))
    samples = sample_kernel(lambda z: relative_radius(z) ** -3.0, 4, narrow)
    with pytest.raises(SampleCoverageError):
        classify_kernel(samples, 1, 4, narrow)
    assert classify_kernel(samples, 1, 4, narrow, require_coverage=False).kappa == 1


def test_calderon_zygmund_cancellation() -> None:
    assert abs(cz_cancellation(_first_coordinate, 5)) < 1e-12
    verdict = calderon_zygmund_class(_first_coordinate, 5, 1)
    assert verdict.kind is KernelKind.CALDERON_ZYGMUND
    assert verdict.origin_exponent == -5.0
    assert verdict.model_dump()["boundary_exponent"] == 3.0
    with pytest.raises(KernelClassError):
        calderon_zygmund_class(lambda w: np.ones(np.atleast_2d(w).shape[0]), 5, 1)


# --- Zerlegung und Exponenten ---


@pytest.fixture(scope="module")
def decomposition():
    profiles = radial_profiles(KernelSpec(n=5, m=1))
    return decompose_second_derivative(5, 1, 0, 1, profiles=profiles)


def test_decomposition_classes(decomposition) -> None:
    assert set(decomposition.classes) == set(ADMISSIBLE_PARTS)
    assert all(verdict.admissible for verdict in decomposition.classes.values())
    assert decomposition.residual_classes["calderon_zygmund"].kind is KernelKind.CALDERON_ZYGMUND
    assert abs(cz_cancellation(decomposition.residual_split.omega, 5)) < 1e-10


def test_decomposition_reassembles_second_derivative(decomposition) -> None:
    z = cayley_to_half_space(_ball_points(5, np.array([0.3, 0.5, 0.7]), seed=5))
    oracle = decomposition.oracle(z)
    reassembled = decomposition.reassembled(z)
    assert np.max(np.abs(reassembled - oracle)) <= 1e-3 * np.max(np.abs(oracle))


def test_decomposition_rejects_bad_arguments() -> None:
    with pytest.raises(CriticalRangeError):
        decompose_second_derivative(5, 2, 0, 1)
    with pytest.raises(KernelClassError):
        decompose_second_derivative(5, 1, 0, 4)


def test_coefficient_factor_is_lipschitz_at_base_point() -> None:
    ratio = lipschitz_ratio(coefficient_factor(5, 1), 5, np.geomspace(1e-3, 1e-1, 8))
    assert np.isfinite(ratio)
    assert ratio < 10.0


def test_exponent_table_generic() -> None:
    spec = KernelSpec(n=5, m=1)
    rows = exponent_table(spec, radial_profiles(spec), count=6)
    assert [row.quantity for row in rows] == ["a", "Z a", "Z Z a"]
    assert [row.expected_origin for row in rows] == [-3.0, -4.0, -5.0]
    for row in rows:
        assert row.expected_boundary == 3.0
        assert row.within(0.15), row


# --- Diagnosen ---


def test_a_quantity_identities_hold() -> None:
    rng = np.random.default_rng(2024)
    result = a_quantity_identities(random_ball_points(rng, 100, 4), random_ball_points(rng, 100, 4))
    assert result.holds(1e-9)


def test_cz_diagnostics_are_finite() -> None:
    x = _ball_points(3, np.full(20, 0.5), seed=1)
    y = _ball_points(3, np.full(20, 0.6), seed=2)
    result = cz_diagnostics(_first_coordinate, 3, 1, 2.0, x, y)
    for value in (result.direction_ratio, result.expansion_ratio, result.k2_ratio):
        assert np.isfinite(value)
        assert value >= 0.0


def test_truncated_kernel_bound_forms_agree() -> None:
    for n in (3, 5):
        closed, geodesic = truncated_kernel_bound(n)
        assert closed == pytest.approx(geodesic, rel=1e-8)


def test_k3_weight_stays_bounded() -> None:
    result = k3_weight_test(3, 2.0, np.array([0.5, 0.9, 0.99]))
    assert len(result.values) == 3
    assert all(value > 0.0 for value in result.values)
    assert result.growth < 10.0


def test_cz_truncations_converge() -> None:
    x = np.array([0.3, 0.0, 0.0])

    def f(points: np.ndarray) -> np.ndarray:
        return np.exp(-np.sum((points - 0.2) ** 2, axis=-1))

    values = cz_cutoff_sensitivity(_first_coordinate, f, x, (1e-2, 1e-3, 1e-4), reach=8.0)
    assert abs(values[2] - values[1]) < 1e-2 * abs(values[2])
    assert abs(values[2] - values[1]) < abs(values[1] - values[0]) + 1e-12


# --- Operatornormen ---


def test_lp_norm_of_constant() -> None:
    weights = np.full(4, 0.25)
    assert lp_norm(np.full(4, 2.0), weights, 3.0) == pytest.approx(2.0)
    assert lp_norm(np.ones((4, 2)), weights, 2.0) == pytest.approx(math.sqrt(2.0))


def test_empirical_opnorm_of_zero_kernel() -> None:
    assert empirical_opnorm(lambda z: np.zeros(np.atleast_2d(z).shape[0]), 3, 2.0, trials=4) == 0.0
    with pytest.raises(ExponentRangeError):
        empirical_opnorm(lambda z: np.zeros(np.atleast_2d(z).shape[0]), 3, 1.0)


def test_empirical_opnorm_is_reproducible() -> None:
    def kernel(z: np.ndarray) -> np.ndarray:
        r = relative_radius(z)
        return ((1.0 - r) * (1.0 + r)) ** 2

    first = empirical_opnorm(kernel, 3, 2.0, trials=4, seed=5)
    assert first > 0.0
    assert empirical_opnorm(kernel, 3, 2.0, trials=4, seed=5) == first


def test_sobolev_ratio_requires_exponent_in_range() -> None:
    spec = KernelSpec(n=5, m=1)
    eta = bump_form(5, 1, Point.base(5), 0.5, {"1": 1.0})
    with pytest.raises(ExponentRangeError):
        sobolev_ratio(eta, spec, radial_profiles(spec), 1.2, QuadratureSpec())
