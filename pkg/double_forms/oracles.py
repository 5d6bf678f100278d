"""Differenzen-Orakel fuer gamma und tau ueber D = |phi_Y(X)|^2 im Kugelmodell.

Mit D = r^2 gilt tau = -d_xD (x) d_yD / (4(1 - D)) und
d_x d_y D = 4 tau - 2(1 - D) gamma. Das Orakel rechnet euklidisch in der Kugel und
zieht das Ergebnis in den invarianten Rahmen w^i(x) (x) w^j(y) des Halbraums zurueck."""

from __future__ import annotations

import logging

import numpy as np

from geometry.isometries import cayley_to_ball, cayley_to_ball_jacobian, pseudo_distance_ball
from geometry.points import HyperbolicModel, Point, interior_mask, same_model
from models.types import FDOrder, FDScheme
from util.finite_differences import gradient, hessian

_LOGGER = logging.getLogger(__name__)

DEFAULT_ORACLE_SCHEME = FDScheme(step=1e-4, order=FDOrder.CENTRAL4)


def _squared_distance(n: int):
    def field(stacked: np.ndarray) -> np.ndarray:
        return pseudo_distance_ball(stacked[:, :n], stacked[:, n:]) ** 2

    return field


def _valid(n: int):
    def check(stacked: np.ndarray) -> bool:
        return bool(
            np.all(interior_mask(stacked[:, :n], HyperbolicModel.BALL))
            and np.all(interior_mask(stacked[:, n:], HyperbolicModel.BALL))
        )

    return check


def gamma_tau_oracle(x: Point, y: Point, scheme: FDScheme = DEFAULT_ORACLE_SCHEME) -> tuple[np.ndarray, np.ndarray]:
    """(gamma, tau) als (n, n)-Koeffizienten im Rahmen w^i(x) (x) w^j(y).

    Args:
        x: Halbraumpunkt.
        y: Halbraumpunkt.
        scheme: Differenzenschema fuer Gradient und gemischte Hesse-Matrix.

    Raises:
        StencilError: Stencil verlaesst die Kugel.
    """

    same_model(x, y)
    x.require(HyperbolicModel.HALF_SPACE)
    n = x.n
    ball_x = cayley_to_ball(x.coords)
    ball_y = cayley_to_ball(y.coords)
    stacked = np.concatenate([ball_x, ball_y])
    field = _squared_distance(n)
    distance_sq = float(field(stacked[None, :])[0])
    grad = gradient(field, stacked, scheme, valid=_valid(n))
    mixed = hessian(field, stacked, scheme, valid=_valid(n))[:n, n:]
    tau_e = -np.outer(grad[:n], grad[n:]) / (4.0 * (1.0 - distance_sq))
    gamma_e = (4.0 * tau_e - mixed) / (2.0 * (1.0 - distance_sq))
    jac_x = cayley_to_ball_jacobian(x.coords)
    jac_y = cayley_to_ball_jacobian(y.coords)
    weight = x.coords[-1] * y.coords[-1]
    _LOGGER.debug("oracle at r^2=%.6f with step %.1e", distance_sq, scheme.step)
    return weight * jac_x.T @ gamma_e @ jac_y, weight * jac_x.T @ tau_e @ jac_y
