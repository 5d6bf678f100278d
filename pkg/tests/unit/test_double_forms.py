"""Unit-Tests fuer Multiindizes, Hodge-Stern, Keilprodukte und gamma/tau."""

from __future__ import annotations

from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from double_forms import (
    BidegreeError,
    DoubleForm,
    FormError,
    FormField,
    FrameError,
    StarSlot,
    gamma_at,
    gamma_power,
    gamma_power_coefficients,
    gamma_tau_oracle,
    hodge_star,
    label,
    multi_indices,
    parse_label,
    permutation_sign,
    pointwise_norm,
    pullback_form,
    relative_point,
    star_coefficients,
    star_double,
    tau_at,
    tau_gamma_power,
    wedge_coefficients,
    wedge_double,
    wedge_power,
)
from double_forms.generators import bounded_quotients
from geometry import Frame, Point, Translation, random_half_space_points, translate_forward


def _point_pairs(seed: int, count: int, n: int) -> list[tuple[Point, Point]]:
    rng = np.random.default_rng(seed)
    xs = random_half_space_points(rng, count, n, spread=1.0)
    ys = random_half_space_points(rng, count, n, spread=1.0)
    return [(Point(x), Point(y)) for x, y in zip(xs, ys)]


def test_labels_roundtrip_and_validation() -> None:
    assert label((0, 2)) == "1,3"
    assert label(()) == "0"
    assert parse_label("1,3", 4) == (0, 2)
    assert parse_label("0", 4) == ()
    for bad in ("3,1", "1,1", "5", "a,b"):
        with pytest.raises(FormError):
            parse_label(bad, 4)


def test_permutation_sign() -> None:
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((2, 0, 1)) == 1
    assert permutation_sign((0, 0)) == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_multi_index_counts(n: int) -> None:
    for degree in range(n + 1):
        assert len(multi_indices(n, degree)) == comb(n, degree)
    with pytest.raises(BidegreeError):
        multi_indices(n, n + 1)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=6), st.data())
def test_star_is_involution_up_to_sign(n: int, data: st.DataObject) -> None:
    degree = data.draw(st.integers(min_value=0, max_value=n))
    seed = data.draw(st.integers(min_value=0, max_value=2**16))
    coeffs = np.random.default_rng(seed).normal(size=comb(n, degree))
    twice = star_coefficients(star_coefficients(coeffs, n, degree), n, n - degree)
    assert np.allclose(twice, (-1.0) ** (degree * (n - degree)) * coeffs, atol=1e-14)
    assert np.linalg.norm(star_coefficients(coeffs, n, degree)) == pytest.approx(np.linalg.norm(coeffs))


def test_wedge_of_one_forms_is_antisymmetric() -> None:
    rng = np.random.default_rng(2)
    a, b = rng.normal(size=4), rng.normal(size=4)
    ab = wedge_coefficients(a, 1, b, 1, 4)
    ba = wedge_coefficients(b, 1, a, 1, 4)
    assert np.allclose(ab, -ba)
    assert np.allclose(wedge_coefficients(a, 1, a, 1, 4), 0.0)


def test_star_of_volume_form_and_frame_check() -> None:
    point = Point.base(3)
    one = FormField.constant(3, 0, Frame.INVARIANT_W, np.ones(1))
    volume = hodge_star(one, at=point)
    assert volume.degree == 3
    assert volume.coeffs.tolist() == [1.0]
    euclidean = FormField.constant(3, 1, Frame.EUCLIDEAN, np.ones(3))
    with pytest.raises(FrameError):
        hodge_star(euclidean.at(Point(np.zeros(3), model=Frame.EUCLIDEAN.model)))


def test_gamma_at_coincidence_is_quarter_identity() -> None:
    for n in (2, 3, 5):
        e = Point.base(n)
        assert np.allclose(gamma_at(e, e).coeffs, 0.25 * np.eye(n))
        assert np.allclose(tau_at(e, e).coeffs, 0.0)
        for m in range(n + 1):
            expected = factorial(m) * 0.25**m * np.eye(comb(n, m))
            assert np.allclose(gamma_power(e, e, m).coeffs, expected)


@pytest.mark.parametrize("n,m", [(3, 1), (4, 2), (5, 2)])
def test_gamma_power_matches_repeated_wedge(n: int, m: int) -> None:
    for x, y in _point_pairs(4, 3, n):
        gamma = gamma_at(x, y)
        assert np.allclose(wedge_power(gamma, m).coeffs, gamma_power(x, y, m).coeffs, atol=1e-12)
        if m >= 1:
            direct = wedge_double(tau_at(x, y), wedge_power(gamma, m - 1))
            assert np.allclose(direct.coeffs, tau_gamma_power(x, y, m).coeffs, atol=1e-12)


def test_gamma_power_coefficients_batch_shape() -> None:
    gamma = np.broadcast_to(0.25 * np.eye(4), (7, 4, 4))
    assert gamma_power_coefficients(gamma, 2).shape == (7, 6, 6)


@pytest.mark.parametrize("n", [3, 4])
def test_double_invariance_under_translation(n: int) -> None:
    rng = np.random.default_rng(9)
    for x, y in _point_pairs(6, 10, n):
        shift = random_half_space_points(rng, 1, n)[0]
        tx = Point(translate_forward(shift, x.coords))
        ty = Point(translate_forward(shift, y.coords))
        assert np.allclose(gamma_at(tx, ty).coeffs, gamma_at(x, y).coeffs, atol=1e-12)
        assert np.allclose(tau_at(tx, ty).coeffs, tau_at(x, y).coeffs, atol=1e-12)


def test_gamma_and_tau_match_distance_oracle() -> None:
    for x, y in _point_pairs(8, 3, 3):
        gamma, tau = gamma_tau_oracle(x, y)
        assert np.allclose(gamma_at(x, y).coeffs, gamma, rtol=1e-5, atol=1e-6)
        assert np.allclose(tau_at(x, y).coeffs, tau, rtol=1e-5, atol=1e-6)


def test_bounded_quotients_stay_bounded() -> None:
    rng = np.random.default_rng(10)
    z = random_half_space_points(rng, 500, 4, spread=50.0)
    z[:, -1] *= 20.0
    p_ratio, q_ratio = bounded_quotients(z)
    assert np.all(np.isfinite(p_ratio)) and np.all(np.isfinite(q_ratio))
    assert np.max(np.abs(p_ratio)) < 10.0
    assert np.max(np.abs(q_ratio)) < 10.0


def test_star_double_both_slots() -> None:
    x, y = _point_pairs(12, 1, 4)[0]
    gamma = gamma_power(x, y, 1)
    both = star_double(gamma, StarSlot.BOTH)
    stepwise = star_double(star_double(gamma, StarSlot.X), StarSlot.Y)
    assert both.bidegree == (3, 3)
    assert np.allclose(both.coeffs, stepwise.coeffs)


def test_double_form_rejects_bad_shapes() -> None:
    with pytest.raises(FormError):
        DoubleForm(3, 1, 1, np.zeros((3, 2)))
    a = DoubleForm.zero(3, 2, 2)
    with pytest.raises(BidegreeError):
        wedge_double(a, DoubleForm.zero(3, 2, 1))


def test_pullback_under_translation_keeps_invariant_coefficients() -> None:
    form = FormField.constant(3, 1, Frame.INVARIANT_W, np.array([1.0, -2.0, 0.5]))
    shift = Translation(np.array([0.4, -0.3, 2.0]))
    value = pullback_form(form, shift, Point(np.array([0.1, 0.2, 0.7])))
    assert np.allclose(value.coeffs, [1.0, -2.0, 0.5])
    assert pointwise_norm(value) == pytest.approx(np.sqrt(5.25))


def test_relative_point_of_base_pair() -> None:
    x = Point(np.array([0.5, 2.0]))
    assert np.allclose(relative_point(x, Point.base(2)), x.coords)
