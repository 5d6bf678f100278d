"""Zentrale Differenzenquotienten auf vektorisierten Feldern.

Ein Feld ist ein Callable, das Punkte der Form (k, n) entgegennimmt und Werte der
Form (k, ...) liefert. Alle Stencil-Punkte eines Aufrufs werden in einem einzigen
Feldaufruf ausgewertet."""

from __future__ import annotations

from typing import Callable

import numpy as np

from models.types import FDOrder, FDScheme

Field = Callable[[np.ndarray], np.ndarray]
DomainCheck = Callable[[np.ndarray], bool]


class StencilError(ValueError):
    """Ein Stencil-Punkt liegt ausserhalb des Definitionsbereichs."""


_FIRST = {
    FDOrder.CENTRAL2: (np.array([-1.0, 1.0]), np.array([-0.5, 0.5])),
    FDOrder.CENTRAL4: (np.array([-2.0, -1.0, 1.0, 2.0]), np.array([1.0, -8.0, 8.0, -1.0]) / 12.0),
}
_SECOND = {
    FDOrder.CENTRAL2: (np.array([-1.0, 0.0, 1.0]), np.array([1.0, -2.0, 1.0])),
    FDOrder.CENTRAL4: (
        np.array([-2.0, -1.0, 0.0, 1.0, 2.0]),
        np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0,
    ),
}
_ORDER = {FDOrder.CENTRAL2: 2, FDOrder.CENTRAL4: 4}


def _evaluate(field: Field, points: np.ndarray, valid: DomainCheck | None) -> np.ndarray:
    flat = points.reshape(-1, points.shape[-1])
    if valid is not None and not valid(flat):
        raise StencilError("finite-difference stencil leaves the domain; reduce the step")
    values = np.asarray(field(flat), dtype=float)
    return values.reshape(points.shape[:-1] + values.shape[1:])


def _directional(
    field: Field,
    x: np.ndarray,
    directions: np.ndarray,
    h: float,
    rule: tuple[np.ndarray, np.ndarray],
    power: int,
    valid: DomainCheck | None,
) -> np.ndarray:
    offsets, weights = rule
    points = x[None, None, :] + h * offsets[None, :, None] * directions[:, None, :]
    values = _evaluate(field, points, valid)
    return np.einsum("s,ks...->k...", weights, values) / h**power


def _extrapolate(coarse: np.ndarray, fine: np.ndarray, order: int) -> np.ndarray:
    factor = 2.0**order
    return (factor * fine - coarse) / (factor - 1.0)


def directional_first(
    field: Field,
    x: np.ndarray,
    directions: np.ndarray,
    scheme: FDScheme,
    valid: DomainCheck | None = None,
) -> np.ndarray:
    """Erste Ableitungen von `field` in x entlang jeder Zeile von `directions`."""

    x = np.asarray(x, dtype=float)
    directions = np.atleast_2d(np.asarray(directions, dtype=float))
    rule = _FIRST[scheme.order]
    result = _directional(field, x, directions, scheme.step, rule, 1, valid)
    if scheme.richardson:
        fine = _directional(field, x, directions, 0.5 * scheme.step, rule, 1, valid)
        result = _extrapolate(result, fine, _ORDER[scheme.order])
    return result


def directional_second(
    field: Field,
    x: np.ndarray,
    directions: np.ndarray,
    scheme: FDScheme,
    valid: DomainCheck | None = None,
) -> np.ndarray:
    """Zweite Ableitungen entlang jeder Zeile von `directions`."""

    x = np.asarray(x, dtype=float)
    directions = np.atleast_2d(np.asarray(directions, dtype=float))
    rule = _SECOND[scheme.order]
    result = _directional(field, x, directions, scheme.step, rule, 2, valid)
    if scheme.richardson:
        fine = _directional(field, x, directions, 0.5 * scheme.step, rule, 2, valid)
        result = _extrapolate(result, fine, _ORDER[scheme.order])
    return result


def _mixed(
    field: Field,
    x: np.ndarray,
    pairs: np.ndarray,
    h: float,
    valid: DomainCheck | None,
) -> np.ndarray:
    # pairs: (k, 2, n); (f(++) - f(+-) - f(-+) + f(--)) / (4 h^2)
    signs = np.array([[1.0, 1.0], [1.0, -1.0], [-1.0, 1.0], [-1.0, -1.0]])
    weights = np.array([1.0, -1.0, -1.0, 1.0]) / (4.0 * h * h)
    points = x[None, None, :] + h * np.einsum("sc,kcn->ksn", signs, pairs)
    values = _evaluate(field, points, valid)
    return np.einsum("s,ks...->k...", weights, values)


def hessian(
    field: Field,
    x: np.ndarray,
    scheme: FDScheme,
    scale: np.ndarray | None = None,
    valid: DomainCheck | None = None,
) -> np.ndarray:
    """Hesse-Matrix (n, n, ...) bezueglich der skalierten Koordinatenrichtungen.

    Mit `scale` (Laenge n) werden die Richtungen scale[i]*e_i verwendet. Gemischte
    Ableitungen nutzen den 4-Punkte-Stencil; bei CENTRAL4 oder Richardson wird
    dieser extrapoliert.
    """

    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    axes = np.eye(n) if scale is None else np.diag(np.asarray(scale, dtype=float))
    diagonal = directional_second(field, x, axes, scheme, valid)
    result = np.zeros((n, n) + diagonal.shape[1:])
    for i in range(n):
        result[i, i] = diagonal[i]
    index_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if index_pairs:
        pairs = np.stack([np.stack([axes[i], axes[j]]) for i, j in index_pairs])
        mixed = _mixed(field, x, pairs, scheme.step, valid)
        if scheme.richardson or scheme.order is FDOrder.CENTRAL4:
            fine = _mixed(field, x, pairs, 0.5 * scheme.step, valid)
            mixed = _extrapolate(mixed, fine, 2)
        for k, (i, j) in enumerate(index_pairs):
            result[i, j] = mixed[k]
            result[j, i] = mixed[k]
    return result


def gradient(
    field: Field,
    x: np.ndarray,
    scheme: FDScheme,
    scale: np.ndarray | None = None,
    valid: DomainCheck | None = None,
) -> np.ndarray:
    """Gradient (n, ...) bezueglich der (optional skalierten) Koordinatenrichtungen."""

    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    axes = np.eye(n) if scale is None else np.diag(np.asarray(scale, dtype=float))
    return directional_first(field, x, axes, scheme, valid)


def _axis_pass(
    field: Field, points: np.ndarray, h: float, order: FDOrder, valid: DomainCheck | None
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    offsets, first_w = _FIRST[order]
    second_offsets, second_w = _SECOND[order]
    k, n = points.shape
    axes = np.eye(n)
    stencil = np.unique(np.concatenate([offsets, second_offsets]))
    shifted = points[:, None, None, :] + h * stencil[None, None, :, None] * axes[None, :, None, :]
    values = _evaluate(field, shifted, valid)
    lookup = {float(o): i for i, o in enumerate(stencil)}
    first_idx = [lookup[float(o)] for o in offsets]
    second_idx = [lookup[float(o)] for o in second_offsets]
    first = np.einsum("s,kas...->ka...", first_w, values[:, :, first_idx]) / h
    second = np.einsum("s,kas...->ka...", second_w, values[:, :, second_idx]) / h**2
    centre = values[:, 0, lookup[0.0]]
    return centre, first, second


def axis_derivatives(
    field: Field,
    points: np.ndarray,
    scheme: FDScheme,
    valid: DomainCheck | None = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Werte, erste und reine zweite Koordinatenableitungen an vielen Punkten zugleich.

    Args:
        field: Vektorisiertes Feld (k, n) -> (k, ...).
        points: Auswertungspunkte (k, n).

    Returns:
        (Werte (k, ...), erste Ableitungen (k, n, ...), zweite Ableitungen (k, n, ...)).
    """

    points = np.atleast_2d(np.asarray(points, dtype=float))
    centre, first, second = _axis_pass(field, points, scheme.step, scheme.order, valid)
    if scheme.richardson:
        _, fine_first, fine_second = _axis_pass(field, points, 0.5 * scheme.step, scheme.order, valid)
        first = _extrapolate(first, fine_first, _ORDER[scheme.order])
        second = _extrapolate(second, fine_second, _ORDER[scheme.order])
    return centre, first, second
