"""Gemeinsame Pydantic-Typen fuer numerische Steuerdaten."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

import config


class FDOrder(str, Enum):
    """Ordnung der zentralen Differenzenquotienten."""

    CENTRAL2 = "central2"
    CENTRAL4 = "central4"


class OutputFormat(str, Enum):
    """Ausgabeformat der CLI-Kommandos."""

    CSV = "csv"
    JSON = "json"


class Suite(str, Enum):
    """Verfuegbare Verifikationssuiten."""

    GEOMETRY = "geometry"
    FORMS = "forms"
    KERNEL = "kernel"
    OPERATORS = "operators"
    ESTIMATES = "estimates"
    ALL = "all"


class FDScheme(BaseModel):
    """Schrittweite und Extrapolation fuer alle Finite-Differenzen-Auswertungen."""

    model_config = ConfigDict(frozen=True)

    step: float = Field(default=config.HYPR_FD_STEP, description="Schrittweite h")
    order: FDOrder = FDOrder.CENTRAL2
    richardson: bool = False

    @field_validator("step")
    @classmethod
    def _validate_step(cls, value: float) -> float:
        if not 1e-6 <= value <= 1e-2:
            raise ValueError("step must lie in [1e-6, 1e-2]")
        return value


class QuadratureSpec(BaseModel):
    """Knotenzahlen der singulaeren Produktquadratur des Riesz-Potentials.

    Radial wird in geodaetischer Distanz mit `radial_panels` Gauss-Legendre-Paneelen
    integriert, die geometrisch (Verhaeltnis `grading_ratio`) zum inneren Cutoff
    `inner_cutoff` hin verdichtet sind. Die Sphaere S^{n-1} wird als Kappe um die
    Achse zum Traeger integriert: Polarwinkel (Gauss-Legendre), transversale
    Winkel (Gauss-Gegenbauer) und Azimut (Trapez).
    """

    model_config = ConfigDict(frozen=True)

    radial_nodes: int = Field(default=config.HYPR_RADIAL_NODES, ge=2, le=64)
    radial_panels: int = Field(default=config.HYPR_RADIAL_PANELS, ge=1, le=64)
    polar_nodes: int = Field(default=config.HYPR_POLAR_NODES, ge=2, le=128)
    transverse_nodes: int = Field(default=config.HYPR_TRANSVERSE_NODES, ge=1, le=32)
    azimuth_nodes: int = Field(default=config.HYPR_AZIMUTH_NODES, ge=2, le=64)
    inner_cutoff: float = Field(default=config.HYPR_INNER_CUTOFF, description="r0")
    grading_ratio: float = Field(default=config.HYPR_GRADING_RATIO, gt=0.0, lt=1.0)
    rel_tolerance: float = Field(default=5e-3, gt=0.0)

    @field_validator("inner_cutoff")
    @classmethod
    def _validate_cutoff(cls, value: float) -> float:
        if not 0.0 < value < 0.1:
            raise ValueError("inner_cutoff must lie in (0, 0.1)")
        return value

    def refined(self, factor: int = 2) -> "QuadratureSpec":
        """Liefert eine Kopie mit vervielfachten Radial- und Polarknoten."""

        return self.model_copy(
            update={
                "radial_nodes": min(64, self.radial_nodes * factor),
                "polar_nodes": min(128, self.polar_nodes * factor),
            }
        )

    def coarsened(self) -> "QuadratureSpec":
        """Halbierte Radial- und Polarknoten (Basis der Fehlerschaetzung)."""

        return self.model_copy(
            update={
                "radial_nodes": max(2, self.radial_nodes // 2),
                "polar_nodes": max(2, self.polar_nodes // 2),
            }
        )


class Tolerances(BaseModel):
    """Zentraler Toleranzdatensatz fuer Exponentenfits und Identitaetschecks."""

    model_config = ConfigDict(frozen=True)

    exponent: float = 0.1
    derivative_exponent: float = 0.15
    fit_residual_max: float = 0.2
    origin_window: tuple[float, float] = (1e-3, 1e-2)
    boundary_window: tuple[float, float] = (1e-4, 1e-2)
    identity_rel: float = 1e-3
    harmonicity_rel: float = 1e-3
    ode_residual: float = 1e-7
    star_identity: float = 1e-9
    invariance: float = 1e-9
    calibration_spread: float = 1e-2

    @model_validator(mode="after")
    def _validate_windows(self) -> "Tolerances":
        for lo, hi in (self.origin_window, self.boundary_window):
            if not 0.0 < lo < hi < 1.0:
                raise ValueError("fit windows must satisfy 0 < lo < hi < 1")
        return self


class SampleCounts(BaseModel):
    """Samplegroessen der Zufallschecks.

    Attributes:
        points: Punkte fuer Isometrie- und Distanzchecks.
        pairs: Punktpaare fuer Stern-Identitaeten und Invarianz von gamma, tau, k_m.
        jet_points: Punkte z fuer die Hilfsableitungen von r.
        potential_points: Innere Punkte, an denen L(Delta eta) = eta geprueft wird.
    """

    model_config = ConfigDict(frozen=True)

    points: int = Field(default=config.HYPR_SAMPLE_POINTS, ge=1)
    pairs: int = Field(default=config.HYPR_SAMPLE_PAIRS, ge=1)
    jet_points: int = Field(default=config.HYPR_JET_POINTS, ge=1)
    potential_points: int = Field(default=config.HYPR_POTENTIAL_POINTS, ge=1, le=64)


__all__ = [
    "FDOrder",
    "FDScheme",
    "OutputFormat",
    "QuadratureSpec",
    "SampleCounts",
    "Suite",
    "Tolerances",
]
