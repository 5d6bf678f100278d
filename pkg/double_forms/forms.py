"""Formfelder in invarianten Rahmen: Hodge-Stern, Normen, Keil- und Inneres Produkt,
Pullback unter Isometrien."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from double_forms.multi_index import (
    BidegreeError,
    FormError,
    check_degree,
    complement_table,
    dimension,
    index_array,
    index_lookup,
    parse_label,
    removal_table,
    wedge_tensor,
)
from geometry.frames import frame_scale
from geometry.isometries import Isometry
from geometry.points import Frame, HyperbolicModel, Point

_LOGGER = logging.getLogger(__name__)

Coefficients = Callable[[np.ndarray], np.ndarray]


class FrameError(FormError):
    """Operation verlangt einen orthonormalen Rahmen."""


@dataclass(frozen=True)
class SupportDescriptor:
    """Traeger einer Form: pseudohyperbolische Kugel {r(center, y) < radius}."""

    center: Point
    radius: float

    def __post_init__(self) -> None:
        self.center.require(HyperbolicModel.HALF_SPACE)
        if not 0.0 < self.radius < 1.0:
            raise FormError("support radius must lie in (0, 1)")


@dataclass(frozen=True)
class FormField:
    """m-Form als vektorisierte Koeffizientenfunktion.

    `coefficients` bildet Punkte (k, n) auf Werte (k, C(n, m)) ab, in der durch
    `frame` festgelegten Basis (w^I, eta^I oder dx^I).
    """

    n: int
    degree: int
    frame: Frame
    coefficients: Coefficients
    support: SupportDescriptor | None = None

    def __post_init__(self) -> None:
        check_degree(self.n, self.degree)

    @property
    def size(self) -> int:
        return dimension(self.n, self.degree)

    def __call__(self, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(np.asarray(points, dtype=float))
        values = np.asarray(self.coefficients(points), dtype=float)
        return values.reshape(points.shape[0], self.size)

    def at(self, p: Point) -> "FormValue":
        if p.model is not self.frame.model:
            raise FrameError(f"{self.frame.value}-frame form evaluated at a {p.model.value} point")
        return FormValue(self.n, self.degree, self.frame, self(p.coords[None, :])[0], p)

    @classmethod
    def constant(cls, n: int, degree: int, frame: Frame, values: np.ndarray) -> "FormField":
        """Form mit konstanten Koeffizienten im gegebenen Rahmen."""

        fixed = np.asarray(values, dtype=float).reshape(dimension(n, degree))

        def coefficients(points: np.ndarray) -> np.ndarray:
            return np.broadcast_to(fixed, (points.shape[0], fixed.size)).copy()

        return cls(n, degree, frame, coefficients)

    @classmethod
    def from_components(
        cls,
        n: int,
        degree: int,
        frame: Frame,
        components: Mapping[str | tuple[int, ...], Callable[[np.ndarray], np.ndarray]],
    ) -> "FormField":
        """Baut eine Form aus einer Abbildung Multiindex -> Koeffizientenfunktion.

        Schluessel sind 0-basierte Tupel oder 1-basierte Labels ("1,3").
        """

        lookup = index_lookup(n, degree)
        resolved: list[tuple[int, Callable[[np.ndarray], np.ndarray]]] = []
        for key, func in components.items():
            index = parse_label(key, n) if isinstance(key, str) else tuple(key)
            if index not in lookup:
                raise BidegreeError(f"multi-index {key!r} has wrong degree for a {degree}-form")
            resolved.append((lookup[index], func))

        def coefficients(points: np.ndarray) -> np.ndarray:
            out = np.zeros((points.shape[0], dimension(n, degree)))
            for position, func in resolved:
                out[:, position] = func(points)
            return out

        return cls(n, degree, frame, coefficients)

    def scaled(self, factor: float) -> "FormField":
        return FormField(
            self.n, self.degree, self.frame, lambda pts: factor * self(pts), self.support
        )


@dataclass(frozen=True)
class FormValue:
    """Wert einer Form an einem Punkt."""

    n: int
    degree: int
    frame: Frame
    coeffs: np.ndarray
    point: Point | None = None


def _require_orthonormal(frame: Frame) -> None:
    if not frame.orthonormal:
        raise FrameError("operation needs an orthonormal frame (w^I or eta^I)")


def star_coefficients(coeffs: np.ndarray, n: int, degree: int) -> np.ndarray:
    """Hodge-Stern auf Koeffizientenarrays (..., C(n, m)) -> (..., C(n, n-m))."""

    targets, signs = complement_table(n, degree)
    out = np.zeros(np.shape(coeffs)[:-1] + (dimension(n, n - degree),))
    out[..., targets] = np.asarray(coeffs) * signs
    return out


def hodge_star(form: FormField | FormValue, at: Point | None = None) -> FormValue:
    """*w^I = sgn(I, I^c) w^{I^c} im orthonormalen Rahmen.

    Raises:
        FrameError: Euklidischer Rahmen.
    """

    _require_orthonormal(form.frame)
    if isinstance(form, FormField):
        if at is None:
            raise FormError("hodge_star of a form field needs a point")
        value = form.at(at)
    else:
        value = form
    return FormValue(
        value.n,
        value.n - value.degree,
        value.frame,
        star_coefficients(value.coeffs, value.n, value.degree),
        value.point,
    )


def wedge_coefficients(a: np.ndarray, p: int, b: np.ndarray, q: int, n: int) -> np.ndarray:
    """(a ^ b) fuer Koeffizientenarrays (..., C(n,p)) und (..., C(n,q))."""

    return np.einsum("kij,...i,...j->...k", wedge_tensor(n, p, q), a, b)


def interior_coefficients(vector: np.ndarray, coeffs: np.ndarray, n: int, degree: int) -> np.ndarray:
    """i_v omega im orthonormalen Rahmen: (i_v omega)_K = sum_k (-1)^pos v_k omega_{k u K}."""

    if degree < 1:
        raise BidegreeError("interior product needs degree >= 1")
    table, signs = removal_table(n, degree)
    indices = index_array(n, degree)
    vector = np.asarray(vector, dtype=float)
    coeffs = np.asarray(coeffs, dtype=float)
    out = np.zeros(coeffs.shape[:-1] + (dimension(n, degree - 1),))
    front = np.moveaxis(out, -1, 0)
    for k in range(degree):
        contribution = signs[k] * np.take(vector, indices[:, k], axis=-1) * coeffs
        np.add.at(front, table[:, k], np.moveaxis(contribution, -1, 0))
    return out


def inner_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Punktweises Skalarprodukt im orthonormalen Rahmen."""

    return np.sum(np.asarray(a) * np.asarray(b), axis=-1)


def pointwise_norm(obj: "FormField | FormValue | object", at: Point | None = None) -> float:
    """Euklidische Norm des Koeffizientenarrays im orthonormalen Rahmen."""

    from double_forms.double_form import DoubleForm

    if isinstance(obj, DoubleForm):
        return float(np.sqrt(np.sum(obj.coeffs**2)))
    if isinstance(obj, FormField):
        if at is None:
            raise FormError("pointwise_norm of a form field needs a point")
        obj = obj.at(at)
    if not isinstance(obj, FormValue):
        raise FormError(f"cannot take the norm of {type(obj).__name__}")
    _require_orthonormal(obj.frame)
    return float(np.linalg.norm(obj.coeffs))


def compound_matrix(matrix: np.ndarray, degree: int) -> np.ndarray:
    """Matrix der degree x degree Minoren: C[I, J] = det M[I, J] (batchfaehig)."""

    matrix = np.asarray(matrix, dtype=float)
    n = matrix.shape[-1]
    size = dimension(n, degree)
    if degree == 0:
        return np.ones(matrix.shape[:-2] + (1, 1))
    idx = index_array(n, degree)
    sub = matrix[..., idx[:, None, :, None], idx[None, :, None, :]]
    if degree == 1:
        return sub[..., 0, 0]
    return np.linalg.det(sub).reshape(matrix.shape[:-2] + (size, size))


def _frame_of(model: HyperbolicModel, euclidean: bool) -> Frame:
    if euclidean:
        if model is not HyperbolicModel.BALL:
            raise FrameError("Euclidean frame forms live in the ball model")
        return Frame.EUCLIDEAN
    return Frame.INVARIANT_W if model is HyperbolicModel.HALF_SPACE else Frame.INVARIANT_ETA


def frame_change(isometry: Isometry, coords: np.ndarray, target_frame: Frame) -> np.ndarray:
    """Matrix M mit (phi^* e^j_target) = sum_i M[j, i] e^i_source."""

    coords = np.asarray(coords, dtype=float)
    jac = isometry.jacobian(coords)
    if target_frame is Frame.EUCLIDEAN:
        return jac
    source_frame = _frame_of(isometry.source, euclidean=False)
    image = isometry.apply(coords)
    ratio = frame_scale(image, target_frame) / frame_scale(coords, source_frame)
    return ratio[..., None, None] * jac


def pullback_field(form: FormField, isometry: Isometry) -> FormField:
    """phi^* omega als Formfeld im Quellmodell."""

    if form.frame.model is not isometry.target:
        raise FrameError("form frame does not match the isometry's target model")
    euclidean = form.frame is Frame.EUCLIDEAN
    source_frame = _frame_of(isometry.source, euclidean)

    def coefficients(points: np.ndarray) -> np.ndarray:
        change = frame_change(isometry, points, form.frame)
        compound = compound_matrix(change, form.degree)
        values = form(isometry.apply(points))
        return np.einsum("kji,kj->ki", compound, values)

    return FormField(form.n, form.degree, source_frame, coefficients)


def pullback_form(form: FormField, isometry: Isometry, at: Point) -> FormValue:
    """(phi^* omega)(x) = omega(phi x) mit der Jacobi-Wirkung auf die Basis.

    Raises:
        FrameError: Rahmen passt nicht zum Zielmodell.
        FormError: Singulaere Jacobi-Matrix (interner Fehler).
    """

    at.require(isometry.source)
    change = frame_change(isometry, at.coords[None, :], form.frame)[0]
    if abs(np.linalg.det(change)) < 1e-300:
        raise FormError("isometry Jacobian is singular")
    return pullback_field(form, isometry).at(at)
