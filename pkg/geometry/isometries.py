"""Cayley-Transformation, hyperbolische Translationen, phi_x und Rotationen.

Alle Array-Funktionen arbeiten vektorisiert auf (..., n); die Punkt-Funktionen
pruefen zusaetzlich Modell-Tags und Randschutz."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Protocol, Sequence

import numpy as np

from geometry.points import (
    BOUNDARY_GUARD,
    BoundaryProximityError,
    GeometryError,
    HyperbolicModel,
    Point,
    require_interior,
    same_model,
)


class CayleyDirection(str, Enum):
    TO_BALL = "to_ball"
    TO_HALF_SPACE = "to_half_space"


class TranslationDirection(str, Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


# --- Array-Ebene ---


def cayley_to_ball(x: np.ndarray) -> np.ndarray:
    """y = (2x', |x|^2 - 1) / |x + e_n|^2."""

    x = np.asarray(x, dtype=float)
    sq = np.sum(x * x, axis=-1)
    denom = sq + 2.0 * x[..., -1] + 1.0
    y = np.empty_like(x)
    y[..., :-1] = 2.0 * x[..., :-1]
    y[..., -1] = sq - 1.0
    return y / denom[..., None]


def cayley_to_half_space(y: np.ndarray) -> np.ndarray:
    """x = (2y', 1 - |y|^2) / |y - e_n|^2."""

    y = np.asarray(y, dtype=float)
    sq = np.sum(y * y, axis=-1)
    denom = sq - 2.0 * y[..., -1] + 1.0
    x = np.empty_like(y)
    x[..., :-1] = 2.0 * y[..., :-1]
    x[..., -1] = 1.0 - sq
    return x / denom[..., None]


def _quotient_jacobian(num: np.ndarray, dnum: np.ndarray, den: np.ndarray, dden: np.ndarray) -> np.ndarray:
    # d(N/D) = (dN * D - N dD^T) / D^2
    return (dnum * den[..., None, None] - num[..., :, None] * dden[..., None, :]) / (den**2)[..., None, None]


def cayley_to_ball_jacobian(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    n = x.shape[-1]
    sq = np.sum(x * x, axis=-1)
    den = sq + 2.0 * x[..., -1] + 1.0
    num = np.concatenate([2.0 * x[..., :-1], (sq - 1.0)[..., None]], axis=-1)
    dnum = np.zeros(x.shape + (n,))
    dnum[..., np.arange(n - 1), np.arange(n - 1)] = 2.0
    dnum[..., -1, :] = 2.0 * x
    dden = 2.0 * x
    dden[..., -1] += 2.0
    return _quotient_jacobian(num, dnum, den, dden)


def cayley_to_half_space_jacobian(y: np.ndarray) -> np.ndarray:
    y = np.asarray(y, dtype=float)
    n = y.shape[-1]
    sq = np.sum(y * y, axis=-1)
    den = sq - 2.0 * y[..., -1] + 1.0
    num = np.concatenate([2.0 * y[..., :-1], (1.0 - sq)[..., None]], axis=-1)
    dnum = np.zeros(y.shape + (n,))
    dnum[..., np.arange(n - 1), np.arange(n - 1)] = 2.0
    dnum[..., -1, :] = -2.0 * y
    dden = 2.0 * y
    dden[..., -1] -= 2.0
    return _quotient_jacobian(num, dnum, den, dden)


def translate_forward(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """T_x y = (x_n y' + x', x_n y_n)."""

    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = x[..., -1:] * y
    out[..., :-1] += x[..., :-1]
    return out


def translate_inverse(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """S_x y = ((y' - x') / x_n, y_n / x_n)."""

    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = np.broadcast_to(y, np.broadcast_shapes(x.shape, y.shape)).copy()
    out[..., :-1] -= x[..., :-1]
    return out / x[..., -1:]


def _phi_parts(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    xx = np.sum(x * x, axis=-1)
    yy = np.sum(y * y, axis=-1)
    xy = np.sum(x * y, axis=-1)
    diff = x - y
    num = (1.0 - xx)[..., None] * diff + x * np.sum(diff * diff, axis=-1)[..., None]
    den = xx * yy - 2.0 * xy + 1.0
    return num, den


def phi(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Involution phi_x(y) der Kugel mit phi_x(0) = x und phi_x(x) = 0."""

    num, den = _phi_parts(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    if np.any(den < BOUNDARY_GUARD):
        raise GeometryError("phi_x denominator vanished; points must be interior")
    return num / den[..., None]


def phi_jacobian(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Jacobi-Matrix von y -> phi_x(y)."""

    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = y.shape[-1]
    num, den = _phi_parts(x, y)
    xx = np.sum(x * x, axis=-1)
    dnum = (xx - 1.0)[..., None, None] * np.eye(n) + 2.0 * x[..., :, None] * (y - x)[..., None, :]
    dden = 2.0 * xx[..., None] * y - 2.0 * x
    return _quotient_jacobian(num, dnum, den, dden)


def pseudo_distance_half_space(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """r^2 = |x-y|^2 / (|x-y|^2 + 4 x_n y_n)."""

    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    sq = np.sum((x - y) ** 2, axis=-1)
    return np.sqrt(sq / (sq + 4.0 * x[..., -1] * y[..., -1]))


def pseudo_distance_ball(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """r^2 = |x-y|^2 / (|x|^2|y|^2 - 2xy + 1) = |phi_x(y)|^2."""

    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    sq = np.sum((x - y) ** 2, axis=-1)
    den = np.sum(x * x, axis=-1) * np.sum(y * y, axis=-1) - 2.0 * np.sum(x * y, axis=-1) + 1.0
    return np.sqrt(sq / den)


# --- Isometrie-Deskriptoren ---


class Isometry(Protocol):
    """Isometrie zwischen zwei Modellen mit analytischer Jacobi-Matrix."""

    source: HyperbolicModel
    target: HyperbolicModel

    def apply(self, coords: np.ndarray) -> np.ndarray: ...

    def jacobian(self, coords: np.ndarray) -> np.ndarray: ...


@dataclass(frozen=True)
class Translation:
    """T_x (oder S_x bei `inverse=True`) im Halbraum."""

    x: np.ndarray
    inverse: bool = False
    source: HyperbolicModel = HyperbolicModel.HALF_SPACE
    target: HyperbolicModel = HyperbolicModel.HALF_SPACE

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", np.asarray(getattr(self.x, "coords", self.x), dtype=float))

    def apply(self, coords: np.ndarray) -> np.ndarray:
        if self.inverse:
            return translate_inverse(self.x, coords)
        return translate_forward(self.x, coords)

    def jacobian(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords, dtype=float)
        n = coords.shape[-1]
        scale = 1.0 / self.x[-1] if self.inverse else self.x[-1]
        return np.broadcast_to(scale * np.eye(n), coords.shape + (n,)).copy()


@dataclass(frozen=True)
class PhiMap:
    """Die Involution phi_z der Kugel."""

    z: np.ndarray
    source: HyperbolicModel = HyperbolicModel.BALL
    target: HyperbolicModel = HyperbolicModel.BALL

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", np.asarray(getattr(self.z, "coords", self.z), dtype=float))

    def apply(self, coords: np.ndarray) -> np.ndarray:
        return phi(self.z, coords)

    def jacobian(self, coords: np.ndarray) -> np.ndarray:
        return phi_jacobian(self.z, coords)


@dataclass(frozen=True)
class Rotation:
    """Orthogonale Abbildung y -> U y der Kugel (fixiert den Ursprung)."""

    matrix: np.ndarray
    source: HyperbolicModel = HyperbolicModel.BALL
    target: HyperbolicModel = HyperbolicModel.BALL

    def __post_init__(self) -> None:
        matrix = np.asarray(self.matrix, dtype=float)
        if not np.allclose(matrix @ matrix.T, np.eye(matrix.shape[0]), atol=1e-12):
            raise GeometryError("rotation matrix must be orthogonal")
        object.__setattr__(self, "matrix", matrix)

    def apply(self, coords: np.ndarray) -> np.ndarray:
        return np.asarray(coords, dtype=float) @ self.matrix.T

    def jacobian(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords, dtype=float)
        return np.broadcast_to(self.matrix, coords.shape + (coords.shape[-1],)).copy()


@dataclass(frozen=True)
class CayleyMap:
    """Cayley-Transformation als Isometrie zwischen den Modellen."""

    direction: CayleyDirection = CayleyDirection.TO_BALL

    @property
    def source(self) -> HyperbolicModel:  # type: ignore[override]
        if self.direction is CayleyDirection.TO_BALL:
            return HyperbolicModel.HALF_SPACE
        return HyperbolicModel.BALL

    @property
    def target(self) -> HyperbolicModel:  # type: ignore[override]
        if self.direction is CayleyDirection.TO_BALL:
            return HyperbolicModel.BALL
        return HyperbolicModel.HALF_SPACE

    def apply(self, coords: np.ndarray) -> np.ndarray:
        if self.direction is CayleyDirection.TO_BALL:
            return cayley_to_ball(coords)
        return cayley_to_half_space(coords)

    def jacobian(self, coords: np.ndarray) -> np.ndarray:
        if self.direction is CayleyDirection.TO_BALL:
            return cayley_to_ball_jacobian(coords)
        return cayley_to_half_space_jacobian(coords)


@dataclass(frozen=True)
class Composition:
    """Hintereinanderausfuehrung: zuerst steps[0], dann steps[1], ..."""

    steps: tuple[Isometry, ...]

    def __post_init__(self) -> None:
        if not self.steps:
            raise GeometryError("composition needs at least one step")
        for first, second in zip(self.steps, self.steps[1:]):
            if first.target is not second.source:
                raise GeometryError("composition steps must chain models consistently")

    @property
    def source(self) -> HyperbolicModel:
        return self.steps[0].source

    @property
    def target(self) -> HyperbolicModel:
        return self.steps[-1].target

    def apply(self, coords: np.ndarray) -> np.ndarray:
        for step in self.steps:
            coords = step.apply(coords)
        return coords

    def jacobian(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords, dtype=float)
        total = np.broadcast_to(np.eye(coords.shape[-1]), coords.shape + (coords.shape[-1],))
        for step in self.steps:
            total = step.jacobian(coords) @ total
            coords = step.apply(coords)
        return total


def compose(*steps: Isometry) -> Composition:
    return Composition(tuple(steps))


# --- Punkt-Ebene ---


def cayley(p: Point, direction: CayleyDirection) -> Point:
    """Bildet einen Punkt ins jeweils andere Modell ab.

    Raises:
        ModelMismatchError: Quellmodell passt nicht zur Richtung.
        BoundaryProximityError: Ergebnis liegt numerisch auf dem Rand.
    """

    if direction is CayleyDirection.TO_BALL:
        p.require(HyperbolicModel.HALF_SPACE)
        coords = cayley_to_ball(p.coords)
        if np.linalg.norm(coords) >= 1.0:
            raise BoundaryProximityError("Cayley image reached the unit sphere by rounding")
        return Point(coords, HyperbolicModel.BALL)
    p.require(HyperbolicModel.BALL)
    return Point(cayley_to_half_space(p.coords), HyperbolicModel.HALF_SPACE)


def translate(x: Point, y: Point, direction: TranslationDirection = TranslationDirection.FORWARD) -> Point:
    """T_x y (FORWARD) bzw. S_x y (INVERSE) im Halbraum."""

    x.require(HyperbolicModel.HALF_SPACE)
    y.require(HyperbolicModel.HALF_SPACE)
    same_model(x, y)
    if direction is TranslationDirection.FORWARD:
        coords = translate_forward(x.coords, y.coords)
    else:
        coords = translate_inverse(x.coords, y.coords)
    return Point(coords, HyperbolicModel.HALF_SPACE)


def phi_map(x: Point, y: Point) -> Point:
    """phi_x(y) in der Kugel."""

    x.require(HyperbolicModel.BALL)
    y.require(HyperbolicModel.BALL)
    same_model(x, y)
    return Point(phi(x.coords, y.coords), HyperbolicModel.BALL)


def apply_isometry(isometry: Isometry, p: Point) -> Point:
    p.require(isometry.source)
    return Point(isometry.apply(p.coords), isometry.target)


def random_half_space_points(rng: np.random.Generator, count: int, n: int, spread: float = 2.0) -> np.ndarray:
    """Zufaellige Halbraumpunkte: x' ~ U(-spread, spread), log x_n ~ U(-1, 1)."""

    coords = rng.uniform(-spread, spread, size=(count, n))
    coords[:, -1] = np.exp(rng.uniform(-1.0, 1.0, size=count))
    return require_interior(coords, HyperbolicModel.HALF_SPACE)


def random_ball_points(rng: np.random.Generator, count: int, n: int, max_radius: float = 0.95) -> np.ndarray:
    """Zufaellige Kugelpunkte mit |x| < max_radius."""

    directions = rng.standard_normal((count, n))
    directions /= np.linalg.norm(directions, axis=-1, keepdims=True)
    radii = max_radius * rng.uniform(0.0, 1.0, size=count) ** (1.0 / n)
    return directions * radii[:, None]


def random_rotation(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-verteilte orthogonale Matrix (QR mit Vorzeichenkorrektur)."""

    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def rotation_to_axis(direction: np.ndarray, axis: int = -1) -> np.ndarray:
    """Orthogonale Matrix (Householder-Spiegelung), die e_axis auf `direction` abbildet."""

    direction = np.asarray(direction, dtype=float)
    direction = direction / np.linalg.norm(direction)
    n = direction.shape[0]
    unit = np.zeros(n)
    unit[axis] = 1.0
    v = unit - direction
    norm_sq = float(v @ v)
    if norm_sq < 1e-30:
        return np.eye(n)
    return np.eye(n) - 2.0 * np.outer(v, v) / norm_sq
