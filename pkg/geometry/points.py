"""Punkte des H^n mit Modell-Tag und Randschutz."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

BOUNDARY_GUARD = 1e-14


class GeometryError(ValueError):
    """Basisfehler fuer geometrische Operationen."""


class BoundaryProximityError(GeometryError):
    """Ein Punkt liegt (numerisch) auf dem Rand des Modells."""


class ModelMismatchError(GeometryError):
    """Operation mit einem Punkt im falschen Modell aufgerufen."""


class HyperbolicModel(str, Enum):
    """Einheitskugel- oder Halbraummodell."""

    BALL = "ball"
    HALF_SPACE = "half_space"


class Frame(str, Enum):
    """Koordinatenrahmen fuer Formkoeffizienten.

    INVARIANT_W (w^i = dx_i / x_n) gehoert zum Halbraum, INVARIANT_ETA
    (eta^i = 2 dx_i / (1-|x|^2)) und EUCLIDEAN (dx^i) zur Kugel.
    """

    INVARIANT_W = "w"
    INVARIANT_ETA = "eta"
    EUCLIDEAN = "dx"

    @property
    def model(self) -> HyperbolicModel:
        return HyperbolicModel.HALF_SPACE if self is Frame.INVARIANT_W else HyperbolicModel.BALL

    @property
    def orthonormal(self) -> bool:
        return self is not Frame.EUCLIDEAN


def interior_mask(coords: np.ndarray, model: HyperbolicModel) -> np.ndarray:
    """Bool-Maske der Punkte (..., n), die den Randschutz erfuellen."""

    coords = np.asarray(coords, dtype=float)
    if model is HyperbolicModel.BALL:
        return 1.0 - np.linalg.norm(coords, axis=-1) >= BOUNDARY_GUARD
    return coords[..., -1] >= BOUNDARY_GUARD


def require_interior(coords: np.ndarray, model: HyperbolicModel) -> np.ndarray:
    """Gibt `coords` zurueck oder wirft `BoundaryProximityError`."""

    coords = np.asarray(coords, dtype=float)
    if not np.all(np.isfinite(coords)) or not np.all(interior_mask(coords, model)):
        raise BoundaryProximityError(
            f"point too close to the boundary of the {model.value} model "
            f"(guard {BOUNDARY_GUARD:g})"
        )
    return coords


@dataclass(frozen=True, eq=False)
class Point:
    """Unveraenderlicher Punkt des H^n.

    Attributes:
        coords: Koordinaten (Laenge n >= 2, schreibgeschuetzte Kopie).
        model: Modell, in dem die Koordinaten gelten.
    """

    coords: np.ndarray
    model: HyperbolicModel = field(default=HyperbolicModel.HALF_SPACE)

    def __post_init__(self) -> None:
        coords = np.array(self.coords, dtype=float).ravel()
        if coords.shape[0] < 2:
            raise GeometryError("dimension n must be at least 2")
        require_interior(coords, self.model)
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return int(self.coords.shape[0])

    @classmethod
    def base(cls, n: int, model: HyperbolicModel = HyperbolicModel.HALF_SPACE) -> "Point":
        """Basispunkt e: (0,...,0,1) im Halbraum, 0 in der Kugel."""

        coords = np.zeros(n)
        if model is HyperbolicModel.HALF_SPACE:
            coords[-1] = 1.0
        return cls(coords, model)

    def require(self, model: HyperbolicModel) -> "Point":
        if self.model is not model:
            raise ModelMismatchError(f"expected a {model.value} point, got {self.model.value}")
        return self

    def allclose(self, other: "Point", atol: float = 1e-12) -> bool:
        return self.model is other.model and bool(np.allclose(self.coords, other.coords, atol=atol, rtol=0.0))

    def __repr__(self) -> str:
        return f"Point({self.coords.tolist()!r}, {self.model.value})"


def same_model(*points: Point) -> HyperbolicModel:
    """Prueft, dass alle Punkte im selben Modell und derselben Dimension liegen."""

    models = {point.model for point in points}
    if len(models) != 1:
        raise ModelMismatchError("points must share one model")
    if len({point.n for point in points}) != 1:
        raise GeometryError("points must share one dimension")
    return points[0].model
