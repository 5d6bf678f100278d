"""Aeussere Ableitung d und Kodifferential delta auf Formfeldern.

d wird euklidisch gebildet: mit Rahmen-Kovektoren s * dx^i ist der euklidische
Koeffizient s^p a_I; das Ergebnis wird durch s^(p+1) geteilt. delta auf m-Formen ist
(-1)^(n(m+1)+1) * d *."""

from __future__ import annotations

import numpy as np

from double_forms.forms import FormField, FormValue, FrameError, interior_coefficients, star_coefficients
from double_forms.multi_index import BidegreeError, wedge_tensor
from geometry.frames import domain_check, frame_scale
from geometry.points import Frame, HyperbolicModel, Point
from models.types import FDScheme
from util.finite_differences import axis_derivatives


def _euclidean(form: FormField):
    def field(points: np.ndarray) -> np.ndarray:
        return frame_scale(points, form.frame)[:, None] ** form.degree * form(points)

    return field


def exterior_coefficients(form: FormField, points: np.ndarray, scheme: FDScheme) -> np.ndarray:
    """(d a) an Punkten (k, n) im Rahmen der Form -> (k, C(n, p+1))."""

    if form.degree >= form.n:
        raise BidegreeError("d of an n-form vanishes identically; degree must be < n")
    points = np.atleast_2d(np.asarray(points, dtype=float))
    _, first, _ = axis_derivatives(_euclidean(form), points, scheme, domain_check(form.frame.model))
    tensor = wedge_tensor(form.n, 1, form.degree)
    euclidean = np.einsum("Kki,pki->pK", tensor, first)
    return euclidean / frame_scale(points, form.frame)[:, None] ** (form.degree + 1)


def exterior_derivative(form: FormField, scheme: FDScheme) -> FormField:
    return FormField(
        form.n,
        form.degree + 1,
        form.frame,
        lambda points: exterior_coefficients(form, points, scheme),
        form.support,
    )


def star_field(form: FormField) -> FormField:
    """Hodge-Stern eines Feldes im orthonormalen Rahmen."""

    if not form.frame.orthonormal:
        raise FrameError("the Hodge star needs an orthonormal frame")
    return FormField(
        form.n,
        form.n - form.degree,
        form.frame,
        lambda points: star_coefficients(form(points), form.n, form.degree),
        form.support,
    )


def codifferential(form: FormField, scheme: FDScheme) -> FormField:
    """delta = (-1)^(n(m+1)+1) * d * fuer m-Formen mit m > 0."""

    if form.degree == 0:
        raise BidegreeError("the codifferential of a 0-form is not defined here")
    n, m = form.n, form.degree
    sign = (-1.0) ** (n * (m + 1) + 1)
    inner = exterior_derivative(star_field(form), scheme)
    outer = star_field(inner)
    return FormField(n, m - 1, form.frame, lambda points: sign * outer(points), form.support)


def d_form(form: FormField, x: Point, scheme: FDScheme) -> FormValue:
    return FormValue(form.n, form.degree + 1, form.frame, exterior_coefficients(form, x.coords[None, :], scheme)[0], x)


def delta_form(form: FormField, x: Point, scheme: FDScheme) -> FormValue:
    return codifferential(form, scheme).at(x)


def codifferential_frame(form: FormField, x: Point, scheme: FDScheme) -> FormValue:
    """delta im w-Rahmen: delta_q a = -sum_k i_k (X_k a) + (n - q) i_N a."""

    x.require(HyperbolicModel.HALF_SPACE)
    if form.frame is not Frame.INVARIANT_W:
        raise FrameError("the frame codifferential needs a w-frame form")
    if form.degree == 0:
        raise BidegreeError("the codifferential of a 0-form is not defined here")
    n, q = form.n, form.degree
    values, first, _ = axis_derivatives(form, x.coords[None, :], scheme, domain_check(HyperbolicModel.HALF_SPACE))
    xn = x.coords[-1]
    out = (n - q) * interior_coefficients(np.eye(n)[-1], values[0], n, q)
    for k in range(n):
        out -= interior_coefficients(np.eye(n)[k], xn * first[0, k], n, q)
    return FormValue(n, q - 1, form.frame, out, x)
