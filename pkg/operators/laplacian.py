"""Hodge-Laplace Delta = d delta + delta d (nichtnegatives Spektrum) per Differenzen.

Halbraum, Rahmen w^J, p = Grad, N = letzter Index:

    N nicht in J:  (Delta a)_J = D0 a_J + 2 sum_{i in J} (-1)^(p-1+pos_J(i)) X_i a_{(J-i)+N} - p(n-p-1) a_J
    N in J:        (Delta a)_J = D0 a_J - 2 sum_{i notin J} (-1)^(p-1+pos_K(i)) X_i a_K - (p-1)(n-p) a_J,
                   K = (J-N)+i,

mit D0 f = -x_n^2 sum d_i^2 f + (n-2) x_n d_n f = -sum X_i^2 f + (n-1) X_n f."""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Callable

import numpy as np

from double_forms.forms import FormField, FormValue, FrameError
from double_forms.multi_index import index_lookup, multi_indices
from geometry.frames import domain_check
from geometry.points import Frame, HyperbolicModel, Point
from models.types import FDScheme
from util.finite_differences import StencilError, axis_derivatives, directional_second, gradient

_LOGGER = logging.getLogger(__name__)

ScalarField = Callable[[np.ndarray], np.ndarray]


def laplacian_scalar_ball(f: ScalarField, x: Point, scheme: FDScheme) -> float:
    """Delta f = -(1/4)(1-|x|^2)^2 sum d_i^2 f + (1 - n/2)(1-|x|^2) x.grad f in der Kugel."""

    x.require(HyperbolicModel.BALL)
    valid = domain_check(HyperbolicModel.BALL)
    second = directional_second(f, x.coords, np.eye(x.n), scheme, valid)
    grad = gradient(f, x.coords, scheme, valid=valid)
    weight = 1.0 - float(np.dot(x.coords, x.coords))
    return float(-0.25 * weight**2 * np.sum(second) + (1.0 - 0.5 * x.n) * weight * np.dot(x.coords, grad))


def laplacian_scalar_halfspace(f: ScalarField, x: Point, scheme: FDScheme) -> float:
    """Delta f = -sum X_i^2 f + (n-1) X_n f im Halbraum."""

    x.require(HyperbolicModel.HALF_SPACE)
    valid = domain_check(HyperbolicModel.HALF_SPACE)
    second = directional_second(f, x.coords, np.eye(x.n), scheme, valid)
    grad = gradient(f, x.coords, scheme, valid=valid)
    xn = x.coords[-1]
    return float(-xn * xn * np.sum(second) + (x.n - 2) * xn * grad[-1])


@lru_cache(maxsize=128)
def coupling_table(n: int, degree: int) -> tuple[tuple[int, int, int, float], ...]:
    """Eintraege (J, i, K, Faktor) der Kopplungsterme Faktor * X_i a_K in (Delta a)_J."""

    last = n - 1
    lookup = index_lookup(n, degree)
    entries: list[tuple[int, int, int, float]] = []
    for position, index in enumerate(multi_indices(n, degree)):
        if last not in index:
            for pos, i in enumerate(index):
                target = tuple(k for k in index if k != i) + (last,)
                entries.append((position, i, lookup[target], 2.0 * (-1.0) ** (degree - 1 + pos)))
        else:
            rest = tuple(k for k in index if k != last)
            for i in range(last):
                if i in index:
                    continue
                target = tuple(sorted(rest + (i,)))
                pos = target.index(i)
                entries.append((position, i, lookup[target], -2.0 * (-1.0) ** (degree - 1 + pos)))
    return tuple(entries)


def _zero_order(n: int, degree: int) -> np.ndarray:
    last = n - 1
    return np.array(
        [
            -(degree - 1) * (n - degree) if last in index else -degree * (n - degree - 1)
            for index in multi_indices(n, degree)
        ],
        dtype=float,
    )


def laplacian_coefficients(form: FormField, points: np.ndarray, scheme: FDScheme) -> np.ndarray:
    """(Delta a)_J an vielen Halbraumpunkten (k, n) -> (k, C(n, p)).

    Raises:
        FrameError: Form nicht im w-Rahmen.
        StencilError: Stencil verlaesst den Halbraum.
    """

    if form.frame is not Frame.INVARIANT_W:
        raise FrameError("the frame Laplacian needs a w-frame form in the half-space")
    n, degree = form.n, form.degree
    points = np.atleast_2d(np.asarray(points, dtype=float))
    values, first, second = axis_derivatives(form, points, scheme, domain_check(HyperbolicModel.HALF_SPACE))
    xn = points[:, -1][:, None]
    out = -xn * xn * np.sum(second, axis=1) + (n - 2) * xn * first[:, -1, :]
    out += _zero_order(n, degree)[None, :] * values
    for target, i, source, factor in coupling_table(n, degree):
        out[:, target] += factor * xn[:, 0] * first[:, i, source]
    return out


def laplacian_field(form: FormField, scheme: FDScheme) -> FormField:
    """Delta eta als Formfeld mit demselben Traeger."""

    return FormField(
        form.n,
        form.degree,
        form.frame,
        lambda points: laplacian_coefficients(form, points, scheme),
        form.support,
    )


def laplacian_form_halfspace(form: FormField, x: Point, scheme: FDScheme) -> FormValue:
    x.require(HyperbolicModel.HALF_SPACE)
    try:
        coeffs = laplacian_coefficients(form, x.coords[None, :], scheme)[0]
    except StencilError:
        _LOGGER.warning("Laplacian stencil left the half-space at %s (step %g)", x, scheme.step)
        raise
    return FormValue(form.n, form.degree, form.frame, coeffs, x)
