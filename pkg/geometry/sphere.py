"""Produkt-Gauss-Regeln auf S^{n-1} und auf Polarkappen."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from geometry.isometries import cayley_to_half_space, rotation_to_axis
from util.quadrature import gauss_gegenbauer, gauss_legendre


def sphere_area(n: int) -> float:
    """omega_{n-1} = 2 pi^{n/2} / Gamma(n/2), Flaeche von S^{n-1} im R^n."""

    return float(2.0 * np.exp(0.5 * n * np.log(np.pi) - gammaln(0.5 * n)))


@lru_cache(maxsize=128)
def _sphere_rule_cached(n: int, nodes: int, azimuth: int) -> tuple[np.ndarray, np.ndarray]:
    if n == 1:
        return np.array([[1.0], [-1.0]]), np.array([1.0, 1.0])
    if n == 2:
        angles = 2.0 * np.pi * (np.arange(azimuth) + 0.5) / azimuth
        dirs = np.stack([np.cos(angles), np.sin(angles)], axis=-1)
        return dirs, np.full(azimuth, 2.0 * np.pi / azimuth)
    # omega = (t, sqrt(1-t^2) omega'), Mass (1-t^2)^{(n-3)/2} dt dsigma'
    t, wt = gauss_gegenbauer(nodes, 0.5 * (n - 3))
    sub_dirs, sub_w = _sphere_rule_cached(n - 1, nodes, azimuth)
    s = np.sqrt(1.0 - t * t)
    dirs = np.concatenate(
        [
            np.broadcast_to(t[:, None, None], (t.size, sub_w.size, 1)),
            s[:, None, None] * sub_dirs[None, :, :],
        ],
        axis=-1,
    ).reshape(-1, n)
    weights = (wt[:, None] * sub_w[None, :]).ravel()
    return dirs, weights


def sphere_rule(n: int, nodes: int = 4, azimuth: int = 8) -> tuple[np.ndarray, np.ndarray]:
    """Richtungen (N, n) und Gewichte (N,) mit Summe omega_{n-1}.

    Exakt fuer Polynome vom Grad < min(2*nodes, azimuth) in jeder Winkelvariablen.
    """

    dirs, weights = _sphere_rule_cached(n, nodes, azimuth)
    return dirs.copy(), weights.copy()


def cap_rule(
    n: int,
    axis: np.ndarray,
    theta_max: np.ndarray,
    polar_nodes: int,
    transverse: int,
    azimuth: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Regel fuer die Kappe {omega : angle(omega, axis) < theta_max}.

    Args:
        axis: Einheitsvektor der Kappenachse (Laenge n).
        theta_max: Oeffnungswinkel, Array (R,) fuer R Kappen gleichzeitig.

    Returns:
        Richtungen (R, P*M, n) und Gewichte (R, P*M), P Polar- und M Transversalknoten.
    """

    theta_max = np.atleast_1d(np.asarray(theta_max, dtype=float))
    x, wx = gauss_legendre(polar_nodes)
    theta = 0.5 * theta_max[:, None] * (x[None, :] + 1.0)
    w_theta = 0.5 * theta_max[:, None] * wx[None, :] * np.sin(theta) ** (n - 2)
    sub_dirs, sub_w = _sphere_rule_cached(n - 1, transverse, azimuth)
    # lokale Koordinaten: Achse = letzte Komponente
    local = np.concatenate(
        [
            np.sin(theta)[:, :, None, None] * sub_dirs[None, None, :, :],
            np.broadcast_to(np.cos(theta)[:, :, None, None], theta.shape + (sub_w.size, 1)),
        ],
        axis=-1,
    )
    rotation = rotation_to_axis(axis, axis=-1)
    dirs = local @ rotation.T
    weights = w_theta[:, :, None] * sub_w[None, None, :]
    count = theta_max.size
    return dirs.reshape(count, -1, n), weights.reshape(count, -1)


def geodesic_polar_points(distance: np.ndarray, directions: np.ndarray) -> np.ndarray:
    """Halbraumpunkte im geodaetischen Abstand `distance` von e in Richtung `directions`.

    Die Richtungen sind Einheitsvektoren im Tangentialraum der Kugel bei 0; die
    Kugelpunkte tanh(d/2) * omega werden per Cayley in den Halbraum gebracht.
    """

    radius = np.tanh(0.5 * np.asarray(distance, dtype=float))
    return cayley_to_half_space(radius[..., None] * np.asarray(directions, dtype=float))
