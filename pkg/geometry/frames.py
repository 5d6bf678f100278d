"""Invariante Rahmen X_i (Halbraum) und Y_i (Kugel) sowie Rahmenskalen."""

from __future__ import annotations

from typing import Callable

import numpy as np

from geometry.metric import conformal_factor
from geometry.points import Frame, HyperbolicModel, Point, interior_mask
from models.types import FDScheme
from util.finite_differences import directional_first

ScalarField = Callable[[np.ndarray], np.ndarray]


def frame_scale(coords: np.ndarray, frame: Frame) -> np.ndarray:
    """s mit Rahmen-Kovektor = s * dx: 1/x_n (w), 2/(1-|x|^2) (eta), 1 (dx)."""

    coords = np.asarray(coords, dtype=float)
    if frame is Frame.EUCLIDEAN:
        return np.ones(coords.shape[:-1])
    return conformal_factor(coords, frame.model)


def domain_check(model: HyperbolicModel) -> Callable[[np.ndarray], bool]:
    """Stencil-Pruefung fuer `util.finite_differences`."""

    return lambda points: bool(np.all(interior_mask(points, model)))


def frame_vectors(p: Point) -> np.ndarray:
    """Zeilen i sind die euklidischen Komponenten von X_i bzw. Y_i bei p."""

    return np.eye(p.n) / float(conformal_factor(p.coords, p.model))


def frame_derivative(f: ScalarField, p: Point, i: int, scheme: FDScheme) -> np.ndarray:
    """X_i f (Halbraum, x_n d_i) bzw. Y_i f (Kugel, (1-|x|^2)/2 d_i) per FD."""

    direction = frame_vectors(p)[i][None, :]
    return directional_first(f, p.coords, direction, scheme, domain_check(p.model))[0]


def commutator_residual(f: ScalarField, p: Point, i: int, j: int, scheme: FDScheme) -> float:
    """|[X_i, X_j] f - erwarteter Wert| im Halbraum.

    Erwartet wird [X_n, X_i] = X_i fuer i < n, [X_i, X_n] = -X_i und 0 sonst.
    Indizes sind 0-basiert; n-1 bezeichnet X_n.
    """

    p.require(HyperbolicModel.HALF_SPACE)
    last = p.n - 1

    def derived(k: int) -> ScalarField:
        def field(points: np.ndarray) -> np.ndarray:
            return np.array([frame_derivative(f, Point(q), k, scheme) for q in points])

        return field

    xi_xj = frame_derivative(derived(j), p, i, scheme)
    xj_xi = frame_derivative(derived(i), p, j, scheme)
    expected = 0.0
    if i == last and j != last:
        expected = frame_derivative(f, p, j, scheme)
    elif j == last and i != last:
        expected = -frame_derivative(f, p, i, scheme)
    return float(np.max(np.abs(xi_xj - xj_xi - expected)))
