"""Die invarianten Doppelformen gamma und tau sowie ihre Keilpotenzen.

Alle Koeffizienten haengen nur von z = S_y x ab (Halbraum, Rahmen w^i(x) (x) w^j(y)).
Mit s = |z|^2 + 2 z_n + 1 gilt

    gamma_ij = z_n q_ij / s^2,      tau_ij = z_n a_i b_j / s^3,

und im Koinzidenzpunkt z = e ist gamma = I/4, tau = 0. Keilpotenzen sind
unnormiert: gamma^m = gamma ^ ... ^ gamma (m Faktoren)."""

from __future__ import annotations

from math import factorial

import numpy as np

from double_forms.double_form import DoubleForm
from double_forms.forms import compound_matrix
from double_forms.multi_index import BidegreeError, check_degree, dimension, index_array, removal_table
from geometry.isometries import translate_inverse
from geometry.points import HyperbolicModel, Point, require_interior, same_model


def _split(z: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    z = require_interior(np.asarray(z, dtype=float), HyperbolicModel.HALF_SPACE)
    tangential = z[..., :-1]
    zn = z[..., -1]
    sq_tangential = np.sum(tangential * tangential, axis=-1)
    s = sq_tangential + zn * zn + 2.0 * zn + 1.0
    return tangential, zn, sq_tangential, s


def gamma_polynomials(z: np.ndarray) -> np.ndarray:
    """q_ij(z) als Array (..., n, n)."""

    tangential, zn, sq_tangential, s = _split(z)
    n = np.shape(z)[-1]
    q = np.zeros(np.shape(z)[:-1] + (n, n))
    q[..., :-1, :-1] = s[..., None, None] * np.eye(n - 1) - 2.0 * tangential[..., :, None] * tangential[..., None, :]
    edge = 2.0 * tangential * (zn + 1.0)[..., None]
    q[..., :-1, -1] = edge
    q[..., -1, :-1] = -edge
    q[..., -1, -1] = s - 2.0 * sq_tangential
    return q


def tau_factors(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Die Vektoren a(z), b(z) mit p_ij = a_i b_j."""

    tangential, zn, sq_tangential, _ = _split(z)
    a = np.empty(np.shape(z))
    a[..., :-1] = 4.0 * tangential * zn[..., None]
    a[..., -1] = 2.0 * (zn * zn - sq_tangential - 1.0)
    b = np.empty(np.shape(z))
    b[..., :-1] = tangential
    b[..., -1] = 0.5 * (sq_tangential + zn * zn - 1.0)
    return a, b


def gamma_coefficients(z: np.ndarray) -> np.ndarray:
    _, zn, _, s = _split(z)
    return (zn / s**2)[..., None, None] * gamma_polynomials(z)


def alpha_beta(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Faktoren von tau = alpha (x) beta (alpha in x, beta in y)."""

    _, zn, _, s = _split(z)
    a, b = tau_factors(z)
    return (zn / s**2)[..., None] * a, b / s[..., None]


def tau_coefficients(z: np.ndarray) -> np.ndarray:
    alpha, beta = alpha_beta(z)
    return alpha[..., :, None] * beta[..., None, :]


def bounded_quotients(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(p_ij / s^2, q_ij / s); beide sind auf dem ganzen Halbraum beschraenkt."""

    _, _, _, s = _split(z)
    a, b = tau_factors(z)
    p = a[..., :, None] * b[..., None, :]
    return p / (s**2)[..., None, None], gamma_polynomials(z) / s[..., None, None]


def relative_point(x: Point, y: Point) -> np.ndarray:
    """z = S_y x; setzt das Halbraummodell voraus."""

    same_model(x, y)
    x.require(HyperbolicModel.HALF_SPACE)
    return translate_inverse(y.coords, x.coords)


def gamma_at(x: Point, y: Point) -> DoubleForm:
    return DoubleForm(x.n, 1, 1, gamma_coefficients(relative_point(x, y)), (x, y))


def tau_at(x: Point, y: Point) -> DoubleForm:
    return DoubleForm(x.n, 1, 1, tau_coefficients(relative_point(x, y)), (x, y))


# --- Keilpotenzen ---


def gamma_power_coefficients(gamma: np.ndarray, m: int) -> np.ndarray:
    """Koeffizienten von gamma^m: m! * det gamma[I, J]."""

    n = gamma.shape[-1]
    check_degree(n, m)
    return factorial(m) * compound_matrix(gamma, m)


def tau_gamma_power_coefficients(alpha: np.ndarray, beta: np.ndarray, gamma: np.ndarray, m: int) -> np.ndarray:
    """Koeffizienten von tau ^ gamma^(m-1) fuer tau = alpha (x) beta.

    (tau ^ gamma^(m-1))_IJ = (m-1)! sum_{k,l} (-1)^(k+l) alpha_{I_k} beta_{J_l} det gamma[I - I_k, J - J_l]
    """

    n = gamma.shape[-1]
    check_degree(n, m)
    if m < 1:
        raise BidegreeError("tau ^ gamma^(m-1) needs m >= 1")
    minors = compound_matrix(gamma, m - 1)
    table, signs = removal_table(n, m)
    idx = index_array(n, m)
    # alpha_{I_k} (-1)^k: (..., C, m)
    weighted_alpha = alpha[..., idx] * signs
    weighted_beta = beta[..., idx] * signs
    # minors[..., table[I, k], table[J, l]]: (..., C, m, C, m)
    picked = minors[..., table[:, :, None, None], table[None, None, :, :]]
    coeffs = np.einsum("...ik,...jl,...ikjl->...ij", weighted_alpha, weighted_beta, picked)
    return factorial(m - 1) * coeffs.reshape(gamma.shape[:-2] + (dimension(n, m), dimension(n, m)))


def gamma_power(x: Point, y: Point, m: int) -> DoubleForm:
    """gamma^m(x, y) als Doppelform vom Bigrad (m, m)."""

    gamma = gamma_coefficients(relative_point(x, y))
    return DoubleForm(x.n, m, m, gamma_power_coefficients(gamma, m), (x, y))


def tau_gamma_power(x: Point, y: Point, m: int) -> DoubleForm:
    """tau ^ gamma^(m-1)(x, y); fuer m = 0 die Nullform vom Bigrad (0, 0)."""

    if m == 0:
        return DoubleForm.zero(x.n, 0, 0, (x, y))
    z = relative_point(x, y)
    alpha, beta = alpha_beta(z)
    coeffs = tau_gamma_power_coefficients(alpha, beta, gamma_coefficients(z), m)
    return DoubleForm(x.n, m, m, coeffs, (x, y))
