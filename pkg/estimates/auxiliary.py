"""Hilfsabschaetzungen: Z_i r, Z_j Z_i r und invariante Ableitungen von Faltungskernen.

Die Z_i = z_n d_i sind translationsinvariant. Fuer ein Feld f gilt daher
Z_i f(z) = d_i (f o T_z)(e) und Z_j Z_i f(z) = d_j d_i (f o T_z)(e) + delta_{jn} d_i (f o T_z)(e);
die Differenzenquotienten laufen immer um e."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from geometry.frames import domain_check
from geometry.isometries import translate_forward
from geometry.points import HyperbolicModel, require_interior
from models.types import FDScheme
from util.finite_differences import gradient, hessian

_LOGGER = logging.getLogger(__name__)

Field = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class AuxiliaryDerivatives:
    """r (k,), Z_i r (k, n) und Z_j Z_i r (k, n, n) mit Index [j, i]."""

    r: np.ndarray
    first: np.ndarray
    second: np.ndarray


@dataclass(frozen=True)
class AuxiliaryBounds:
    first: float
    second: float
    samples: int


def auxiliary_derivatives(z: np.ndarray) -> AuxiliaryDerivatives:
    """Analytische Ableitungen aus r^2 = 1 - 4 z_n / s, s = |z|^2 + 2 z_n + 1.

    Z_i r = (1 - r^2) z_i z_n / (r s) fuer i < n, Z_n r = -(1 - r^2)(1 + |z|^2 - 2 z_n^2) / (2 r s).
    """

    z = np.atleast_2d(require_interior(np.asarray(z, dtype=float), HyperbolicModel.HALF_SPACE))
    k, n = z.shape
    last = n - 1
    s = np.sum(z * z, axis=-1) + 2.0 * z[:, last] + 1.0
    zn = z[:, last]
    r = np.sqrt(np.clip(1.0 - 4.0 * zn / s, 0.0, None))
    unit = np.zeros(n)
    unit[last] = 1.0
    ds = 2.0 * z + 2.0 * unit[None, :]
    # g = 4 z_n / s, u = r^2 = 1 - g
    dg = 4.0 * unit[None, :] / s[:, None] - 4.0 * zn[:, None] * ds / s[:, None] ** 2
    d2g = (
        -4.0 * (unit[None, :, None] * ds[:, None, :] + ds[:, :, None] * unit[None, None, :]) / s[:, None, None] ** 2
        - 8.0 * zn[:, None, None] * np.eye(n)[None] / s[:, None, None] ** 2
        + 8.0 * zn[:, None, None] * ds[:, :, None] * ds[:, None, :] / s[:, None, None] ** 3
    )
    du, d2u = -dg, -d2g
    dr = du / (2.0 * r[:, None])
    d2r = d2u / (2.0 * r[:, None, None]) - du[:, :, None] * du[:, None, :] / (4.0 * r[:, None, None] ** 3)
    first = zn[:, None] * dr
    second = zn[:, None, None] ** 2 * d2r
    second[:, last, :] += zn[:, None] * dr
    return AuxiliaryDerivatives(r, first, second)


def auxiliary_bounds(z: np.ndarray) -> AuxiliaryBounds:
    """sup |Z_i r| / (1 - r^2) und sup r |Z_j Z_i r| / (1 - r^2) ueber die Sample."""

    values = auxiliary_derivatives(z)
    weight = (1.0 - values.r) * (1.0 + values.r)
    first = np.max(np.abs(values.first), axis=-1) / weight
    second = values.r * np.max(np.abs(values.second), axis=(-2, -1)) / weight
    return AuxiliaryBounds(float(np.max(first)), float(np.max(second)), int(values.r.size))


def invariant_jet(field: Field, z: np.ndarray, scheme: FDScheme) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(f, Z_i f, Z_j Z_i f) an Punkten z (k, n) fuer Felder (k, n) -> (k, ...).

    Returns:
        Werte (k, ...), erste Ableitungen (k, n, ...), zweite (k, n, n, ...) mit Index [j, i].
    """

    z = np.atleast_2d(np.asarray(z, dtype=float))
    n = z.shape[-1]
    e = np.zeros(n)
    e[-1] = 1.0
    valid = domain_check(HyperbolicModel.HALF_SPACE)
    values, firsts, seconds = [], [], []
    for point in z:

        def moved(w: np.ndarray, point: np.ndarray = point) -> np.ndarray:
            return field(translate_forward(point, w))

        values.append(np.asarray(field(point[None, :]))[0])
        grad = gradient(moved, e, scheme, valid=valid)
        hess = hessian(moved, e, scheme, valid=valid)
        hess[-1] += grad
        firsts.append(grad)
        seconds.append(hess)
    return np.stack(values), np.stack(firsts), np.stack(seconds)
