"""Klassifikation von Faltungskernen b(z): m-zulaessig und m-Calderon-Zygmund.

m-zulaessig: |b| = O(r^(1-n)) fuer r -> 0 und |b| = O((1-r^2)^(n-m-1)) fuer r -> 1.
m-CZ: b = Omega(w) r^(-n) (1-r^2)^(n-m-1) mit int Omega dsigma = 0."""

from __future__ import annotations

import logging
import math
from enum import Enum
from typing import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from estimates.errors import KernelClassError, SampleCoverageError
from geometry.isometries import cayley_to_half_space
from geometry.sphere import sphere_rule
from models.types import Tolerances
from util.fitting import fit_power_law, log_window

_LOGGER = logging.getLogger(__name__)

SphereFunction = Callable[[np.ndarray], np.ndarray]
RadialKernel = Callable[[np.ndarray], np.ndarray]

COVERAGE = (1e-3, 1e-4)


class KernelKind(str, Enum):
    ADMISSIBLE = "admissible"
    CALDERON_ZYGMUND = "calderon_zygmund"
    UNBOUNDED = "unbounded"


class KernelSamples(BaseModel):
    """|b| an r (Ursprung) und an t = 1 - r^2 (Rand)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    r_origin: np.ndarray
    origin_values: np.ndarray
    t_boundary: np.ndarray
    boundary_values: np.ndarray


class KernelClass(BaseModel):
    """Ergebnis der Klassifikation; `omega` nur fuer Calderon-Zygmund-Kerne."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kappa: int
    kind: KernelKind
    origin_exponent: float
    boundary_exponent: float
    origin_constant: float
    boundary_constant: float
    fit_residual: float
    omega: SphereFunction | None = Field(default=None, exclude=True)

    @property
    def admissible(self) -> bool:
        return self.kind is KernelKind.ADMISSIBLE


def default_direction(n: int) -> np.ndarray:
    """Generische Richtung ohne verschwindende Komponenten."""

    direction = np.linspace(1.0, 2.0, n)
    return direction / np.linalg.norm(direction)


def ray_points(n: int, r: np.ndarray, direction: np.ndarray | None = None) -> np.ndarray:
    """Halbraumpunkte z mit r(z, e) = r entlang eines Kugelstrahls."""

    direction = default_direction(n) if direction is None else np.asarray(direction, dtype=float)
    return cayley_to_half_space(np.asarray(r, dtype=float)[:, None] * direction[None, :])


def sample_kernel(
    kernel: RadialKernel,
    n: int,
    tolerances: Tolerances | None = None,
    direction: np.ndarray | None = None,
    count: int = 16,
) -> KernelSamples:
    """Tastet |b| entlang eines Strahls in den Fit-Fenstern von `tolerances` ab."""

    tolerances = tolerances or Tolerances()
    r = log_window(*tolerances.origin_window, count=count)
    t = log_window(*tolerances.boundary_window, count=count)
    near = np.abs(kernel(ray_points(n, r, direction)))
    far = np.abs(kernel(ray_points(n, np.sqrt(1.0 - t), direction)))
    return KernelSamples(r_origin=r, origin_values=near, t_boundary=t, boundary_values=far)


def classify_kernel(
    samples: KernelSamples,
    kappa: int,
    n: int,
    tolerances: Tolerances | None = None,
    require_coverage: bool = True,
) -> KernelClass:
    """Fittet beide Exponenten und prueft die Klasse kappa-zulaessig.

    Raises:
        SampleCoverageError: Samples reichen nicht bis r = 1e-3 bzw. 1 - r^2 = 1e-4
            (nur mit `require_coverage`).
    """

    tolerances = tolerances or Tolerances()
    if require_coverage:
        origin_limit, boundary_limit = COVERAGE
        if np.min(samples.r_origin) > origin_limit * (1.0 + 1e-9) or np.min(samples.t_boundary) > boundary_limit * (
            1.0 + 1e-9
        ):
            raise SampleCoverageError(
                f"kernel samples must reach r <= {origin_limit:g} and 1 - r^2 <= {boundary_limit:g}"
            )
    if not np.any(samples.origin_values) and not np.any(samples.boundary_values):
        return KernelClass(
            kappa=kappa,
            kind=KernelKind.ADMISSIBLE,
            origin_exponent=math.inf,
            boundary_exponent=math.inf,
            origin_constant=0.0,
            boundary_constant=0.0,
            fit_residual=0.0,
        )
    origin = fit_power_law(samples.r_origin, samples.origin_values)
    boundary = fit_power_law(samples.t_boundary, samples.boundary_values)
    origin_ok = origin.exponent >= 1 - n - tolerances.exponent
    boundary_ok = boundary.exponent >= n - kappa - 1 - tolerances.exponent
    kind = KernelKind.ADMISSIBLE if origin_ok and boundary_ok else KernelKind.UNBOUNDED
    _LOGGER.debug(
        "classified kernel: origin %.3f, boundary %.3f -> %s (kappa %d)",
        origin.exponent,
        boundary.exponent,
        kind.value,
        kappa,
    )
    return KernelClass(
        kappa=kappa,
        kind=kind,
        origin_exponent=origin.exponent,
        boundary_exponent=boundary.exponent,
        origin_constant=origin.prefactor,
        boundary_constant=boundary.prefactor,
        fit_residual=max(origin.residual, boundary.residual),
    )


def cz_cancellation(omega: SphereFunction, n: int, nodes: int = 8, azimuth: int = 16) -> float:
    """int_{S^(n-1)} Omega dsigma per Produkt-Gauss-Regel."""

    dirs, weights = sphere_rule(n, nodes, azimuth)
    return float(np.sum(weights * omega(dirs)))


def calderon_zygmund_class(omega: SphereFunction, n: int, kappa: int, tolerance: float = 1e-10) -> KernelClass:
    """Klasse eines Kerns Omega(w) r^(-n) (1-r^2)^(n-kappa-1), sofern int Omega = 0.

    Raises:
        KernelClassError: Die Ausloeschungsbedingung ist verletzt.
    """

    mean = cz_cancellation(omega, n)
    if abs(mean) > tolerance:
        raise KernelClassError(f"Calderon-Zygmund kernel needs int Omega = 0, got {mean:.3e}")
    return KernelClass(
        kappa=kappa,
        kind=KernelKind.CALDERON_ZYGMUND,
        origin_exponent=-float(n),
        boundary_exponent=float(n - kappa - 1),
        origin_constant=1.0,
        boundary_constant=1.0,
        fit_residual=0.0,
        omega=omega,
    )
