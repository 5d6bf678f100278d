"""Pseudohyperbolische Distanz, Volumenmass und Metrikkoeffizienten."""

from __future__ import annotations

import numpy as np

from geometry.isometries import pseudo_distance_ball, pseudo_distance_half_space
from geometry.points import HyperbolicModel, Point, same_model


def pseudo_distance_array(x: np.ndarray, y: np.ndarray, model: HyperbolicModel) -> np.ndarray:
    if model is HyperbolicModel.BALL:
        return pseudo_distance_ball(x, y)
    return pseudo_distance_half_space(x, y)


def pseudo_distance(x: Point, y: Point) -> float:
    """r(x, y) in [0, 1); symmetrisch und isometrieinvariant."""

    model = same_model(x, y)
    return float(pseudo_distance_array(x.coords, y.coords, model))


def geodesic_distance(x: Point, y: Point) -> float:
    """d(x, y) = 2 artanh r(x, y); nur abgeleitet aus r."""

    return float(2.0 * np.arctanh(pseudo_distance(x, y)))


def volume_density_array(coords: np.ndarray, model: HyperbolicModel) -> np.ndarray:
    coords = np.asarray(coords, dtype=float)
    n = coords.shape[-1]
    if model is HyperbolicModel.BALL:
        return 2.0**n * (1.0 - np.sum(coords * coords, axis=-1)) ** (-n)
    return coords[..., -1] ** (-n)


def volume_density(p: Point) -> float:
    """Dichte von dmu gegen Lebesgue: x_n^{-n} bzw. 2^n (1-|x|^2)^{-n}."""

    return float(volume_density_array(p.coords, p.model))


def conformal_factor(coords: np.ndarray, model: HyperbolicModel) -> np.ndarray:
    """lambda mit g = lambda^2 delta: 1/x_n (Halbraum), 2/(1-|x|^2) (Kugel)."""

    coords = np.asarray(coords, dtype=float)
    if model is HyperbolicModel.BALL:
        return 2.0 / (1.0 - np.sum(coords * coords, axis=-1))
    return 1.0 / coords[..., -1]


def metric_coefficients(p: Point) -> np.ndarray:
    """Metrikmatrix g_ij am Punkt p."""

    return conformal_factor(p.coords, p.model) ** 2 * np.eye(p.n)


def pullback_metric(jacobian: np.ndarray, target_metric: np.ndarray) -> np.ndarray:
    """J^T g J: Metrik des Zielmodells, zurueckgezogen auf das Quellmodell."""

    return jacobian.T @ target_metric @ jacobian
