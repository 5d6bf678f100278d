"""Unit-Tests fuer Modelle, Isometrien, Distanzen und Kugelregeln."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geometry import (
    BoundaryProximityError,
    CayleyDirection,
    CayleyMap,
    GeometryError,
    HyperbolicModel,
    ModelMismatchError,
    Point,
    PhiMap,
    Translation,
    cap_rule,
    cayley,
    cayley_to_ball,
    cayley_to_half_space,
    cayley_to_half_space_jacobian,
    commutator_residual,
    compose,
    geodesic_distance,
    geodesic_polar_points,
    metric_coefficients,
    phi,
    pseudo_distance,
    pseudo_distance_ball,
    pseudo_distance_half_space,
    pullback_metric,
    random_ball_points,
    random_half_space_points,
    random_rotation,
    rotation_to_axis,
    sphere_area,
    sphere_rule,
    translate_forward,
    translate_inverse,
    volume_density,
)
from models.types import FDScheme

_COORD = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
_HEIGHT = st.floats(min_value=0.2, max_value=5.0, allow_nan=False)


def _half_space_point(dim: int) -> st.SearchStrategy[np.ndarray]:
    return st.tuples(st.lists(_COORD, min_size=dim - 1, max_size=dim - 1), _HEIGHT).map(
        lambda parts: np.array(parts[0] + [parts[1]])
    )


@settings(max_examples=60, deadline=None)
@given(_half_space_point(4))
def test_cayley_roundtrip(x: np.ndarray) -> None:
    assert np.allclose(cayley_to_half_space(cayley_to_ball(x)), x, rtol=1e-10, atol=1e-10)


def test_cayley_maps_base_point_to_origin() -> None:
    assert np.allclose(cayley_to_ball(np.array([0.0, 0.0, 1.0])), 0.0)
    origin = cayley(Point.base(3), CayleyDirection.TO_BALL)
    assert origin.model is HyperbolicModel.BALL
    assert np.allclose(origin.coords, 0.0)


@settings(max_examples=40, deadline=None)
@given(_half_space_point(3), _half_space_point(3), _half_space_point(3))
def test_pseudo_distance_translation_invariant(a: np.ndarray, x: np.ndarray, y: np.ndarray) -> None:
    before = pseudo_distance_half_space(x, y)
    after = pseudo_distance_half_space(translate_forward(a, x), translate_forward(a, y))
    assert after == pytest.approx(before, abs=1e-12)


def test_pseudo_distance_agrees_across_models() -> None:
    rng = np.random.default_rng(3)
    x = random_half_space_points(rng, 50, 5)
    y = random_half_space_points(rng, 50, 5)
    half = pseudo_distance_half_space(x, y)
    ball = pseudo_distance_ball(cayley_to_ball(x), cayley_to_ball(y))
    assert np.max(np.abs(half - ball)) < 1e-12


def test_translations_are_inverse() -> None:
    rng = np.random.default_rng(5)
    x = random_half_space_points(rng, 20, 4)
    y = random_half_space_points(rng, 20, 4)
    assert np.allclose(translate_inverse(x, translate_forward(x, y)), y, atol=1e-12)
    e = np.array([0.0, 0.0, 0.0, 1.0])
    assert np.allclose(translate_forward(x, e), x)


def test_phi_is_involution_swapping_zero_and_x() -> None:
    rng = np.random.default_rng(7)
    x = random_ball_points(rng, 30, 4)
    y = random_ball_points(rng, 30, 4)
    assert np.allclose(phi(x, phi(x, y)), y, atol=1e-10)
    assert np.allclose(phi(x, np.zeros_like(x)), x, atol=1e-14)
    assert np.allclose(phi(x, x), 0.0, atol=1e-12)
    assert np.allclose(np.linalg.norm(phi(x, y), axis=-1), pseudo_distance_ball(x, y), atol=1e-12)


def test_geodesic_distance_on_vertical_axis() -> None:
    for height in (0.25, 0.5, 3.0):
        top = Point(np.array([0.0, 0.0, height]))
        assert geodesic_distance(Point.base(3), top) == pytest.approx(abs(math.log(height)), rel=1e-12)


def test_cayley_is_an_isometry() -> None:
    rng = np.random.default_rng(11)
    for coords in random_half_space_points(rng, 5, 3):
        x = Point(coords)
        jacobian = CayleyMap(CayleyDirection.TO_BALL).jacobian(coords)
        ball_metric = metric_coefficients(cayley(x, CayleyDirection.TO_BALL))
        assert np.allclose(pullback_metric(jacobian, ball_metric), metric_coefficients(x), rtol=1e-10)


def test_cayley_jacobians_are_mutually_inverse() -> None:
    x = np.array([0.3, -0.2, 0.8])
    forward = CayleyMap(CayleyDirection.TO_BALL).jacobian(x)
    backward = cayley_to_half_space_jacobian(cayley_to_ball(x))
    assert np.allclose(backward @ forward, np.eye(3), atol=1e-12)


def test_point_rejects_boundary_and_wrong_model() -> None:
    with pytest.raises(BoundaryProximityError):
        Point(np.array([0.5, 0.0]))
    with pytest.raises(BoundaryProximityError):
        Point(np.array([1.0, 0.0]), HyperbolicModel.BALL)
    with pytest.raises(GeometryError):
        Point(np.array([1.0]))
    with pytest.raises(ModelMismatchError):
        Point.base(3).require(HyperbolicModel.BALL)


def test_point_is_immutable() -> None:
    p = Point(np.array([0.1, 0.5]))
    with pytest.raises(ValueError):
        p.coords[0] = 3.0


def test_composition_checks_model_chain() -> None:
    with pytest.raises(GeometryError):
        compose(Translation(np.array([0.0, 1.0])), PhiMap(np.zeros(2)))
    chain = compose(CayleyMap(CayleyDirection.TO_BALL), PhiMap(np.array([0.2, 0.1])))
    assert chain.source is HyperbolicModel.HALF_SPACE
    assert chain.target is HyperbolicModel.BALL


def test_volume_density_half_space() -> None:
    assert volume_density(Point(np.array([0.3, 0.5]))) == pytest.approx(4.0)


def test_sphere_area_known_values() -> None:
    assert sphere_area(2) == pytest.approx(2.0 * math.pi)
    assert sphere_area(3) == pytest.approx(4.0 * math.pi)
    assert sphere_area(4) == pytest.approx(2.0 * math.pi**2)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_sphere_rule_integrates_quadratics(n: int) -> None:
    dirs, weights = sphere_rule(n, nodes=6, azimuth=12)
    assert np.allclose(np.linalg.norm(dirs, axis=-1), 1.0)
    assert weights.sum() == pytest.approx(sphere_area(n), rel=1e-12)
    assert np.sum(weights * dirs[:, 0] ** 2) == pytest.approx(sphere_area(n) / n, rel=1e-10)


def test_full_cap_covers_sphere() -> None:
    axis = np.array([0.0, 0.6, 0.8])
    dirs, weights = cap_rule(3, axis, np.array([math.pi]), polar_nodes=16, transverse=4, azimuth=8)
    assert weights.sum() == pytest.approx(sphere_area(3), rel=1e-10)
    assert dirs.shape == (1, 16 * 8, 3)


def test_rotation_helpers_are_orthogonal() -> None:
    rng = np.random.default_rng(13)
    u = random_rotation(rng, 4)
    assert np.allclose(u @ u.T, np.eye(4), atol=1e-12)
    direction = np.array([0.2, -0.4, 0.1, 0.6])
    reflection = rotation_to_axis(direction)
    assert np.allclose(reflection[:, -1], direction / np.linalg.norm(direction))


def test_geodesic_polar_points_have_requested_distance() -> None:
    direction = np.array([0.6, 0.0, 0.8])
    for distance in (0.1, 1.0, 2.5):
        point = Point(geodesic_polar_points(np.array(distance), direction))
        assert geodesic_distance(Point.base(3), point) == pytest.approx(distance, rel=1e-10)
        assert pseudo_distance(Point.base(3), point) == pytest.approx(math.tanh(distance / 2.0), rel=1e-12)


def test_frame_commutators() -> None:
    def field(points: np.ndarray) -> np.ndarray:
        return points[:, 0] ** 2 * points[:, 2] + np.sin(points[:, 1]) * points[:, 2] ** 2

    scheme = FDScheme(step=1e-3, richardson=True)
    p = Point(np.array([0.3, -0.2, 0.9]))
    for i, j in ((2, 0), (0, 2), (0, 1)):
        assert commutator_residual(field, p, i, j, scheme) < 1e-5
