"""Empirische Operatornormen hyperbolischer Faltungen und Sobolev-Quotienten von L.

Alle Werte sind untere Schranken aus endlich vielen Testfunktionen; sie zeigen
Trends, keine Beschraenktheit."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from config import HYPR_SEED
from double_forms.forms import FormField
from estimates.auxiliary import invariant_jet
from estimates.errors import ExponentRangeError
from estimates.lp_range import lp_range
from geometry.isometries import pseudo_distance_half_space, translate_inverse
from geometry.sphere import geodesic_polar_points
from models.types import FDScheme, QuadratureSpec
from operators.bump import bump_profile
from operators.decay import potential_field
from operators.green import polar_volume_rule
from operators.potential import SupportViolationError
from riesz_kernel.kernel_spec import KernelSpec
from riesz_kernel.profiles import RadialProfiles

_LOGGER = logging.getLogger(__name__)

ScalarKernel = Callable[[np.ndarray], np.ndarray]

# Gitter der diskretisierten Faltung
OPNORM_GRID = QuadratureSpec(radial_nodes=4, radial_panels=3)
SOBOLEV_GRID = QuadratureSpec(radial_nodes=3, radial_panels=2)
SOBOLEV_SCHEME = FDScheme(step=1e-2)
DIAGONAL_EXCLUSION = 1e-7
ROW_BLOCK = 256


@dataclass(frozen=True)
class SobolevRatios:
    """||L eta||_p, ||X L eta||_p und ||X X L eta||_p, jeweils geteilt durch ||eta||_p."""

    p: float
    potential: float
    first: float
    second: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.potential, self.first, self.second)


def _base(n: int) -> np.ndarray:
    base = np.zeros(n)
    base[-1] = 1.0
    return base


def _require_exponent(p: float) -> None:
    if not 1.0 < p < np.inf:
        raise ExponentRangeError(f"p must lie in (1, inf), got {p}")


def lp_norm(values: np.ndarray, weights: np.ndarray, p: float) -> float:
    """(sum_k w_k |f_k|^p)^(1/p); `values` (k,) oder (k, C) mit punktweiser Euklidnorm."""

    values = np.asarray(values, dtype=float)
    pointwise = np.abs(values) if values.ndim == 1 else np.linalg.norm(values.reshape(values.shape[0], -1), axis=1)
    return float(np.sum(weights * pointwise**p) ** (1.0 / p))


def convolution_matrix(
    kernel_fn: ScalarKernel, points: np.ndarray, weights: np.ndarray, exclusion: float = DIAGONAL_EXCLUSION
) -> np.ndarray:
    """B[i, j] = b(S_v e) w_j mit v = S_{x_i} y_j; Paare mit r(x_i, y_j) < exclusion entfallen."""

    count, n = points.shape
    e = _base(n)
    matrix = np.zeros((count, count))
    for start in range(0, count, ROW_BLOCK):
        rows = points[start : start + ROW_BLOCK]
        v = translate_inverse(rows[:, None, :], points[None, :, :])
        z = translate_inverse(v, e)
        values = np.asarray(kernel_fn(z.reshape(-1, n)), dtype=float).reshape(rows.shape[0], count)
        close = pseudo_distance_half_space(rows[:, None, :], points[None, :, :]) < exclusion
        values[close] = 0.0
        matrix[start : start + rows.shape[0]] = values * weights[None, :]
    return matrix


def _bump_family(rng: np.random.Generator, points: np.ndarray, reach: float) -> np.ndarray:
    n = points.shape[-1]
    direction = rng.normal(size=n)
    direction /= np.linalg.norm(direction)
    center = geodesic_polar_points(np.array(rng.uniform(0.0, 0.5 * reach)), direction)
    radius = rng.uniform(0.2, 0.8)
    return bump_profile(pseudo_distance_half_space(points, center) / radius)


def empirical_opnorm(
    kernel_fn: ScalarKernel,
    n: int,
    p: float,
    trials: int = 16,
    seed: int = HYPR_SEED,
    reach: float = 2.5,
    grid: QuadratureSpec = OPNORM_GRID,
    sphere_nodes: int = 3,
    azimuth: int = 6,
) -> float:
    """Monte-Carlo-Untergrenze von sup ||C_b f||_p / ||f||_p.

    Die Faltung wird auf einer Polarregel um e mit geodaetischem Radius `reach`
    diskretisiert; die Testfunktionen sind zufaellige Buckel mit Traegerradius
    (pseudohyperbolisch) in (0.2, 0.8). Jeder Versuch bekommt einen eigenen, aus
    `seed` abgespaltenen Generator.

    Raises:
        ExponentRangeError: p nicht in (1, inf).
    """

    _require_exponent(p)
    points, weights = polar_volume_rule(_base(n), 0.0, reach, grid, sphere_nodes, azimuth)
    matrix = convolution_matrix(kernel_fn, points, weights)
    ratios = []
    for child in np.random.SeedSequence(seed).spawn(trials):
        f = _bump_family(np.random.default_rng(child), points, reach)
        norm = lp_norm(f, weights, p)
        if norm == 0.0:
            continue
        ratios.append(lp_norm(matrix @ f, weights, p) / norm)
    if not ratios:
        return 0.0
    _LOGGER.debug("opnorm p=%g: %d trials, ratios in [%.3e, %.3e]", p, len(ratios), min(ratios), max(ratios))
    return float(max(ratios))


def sobolev_ratio(
    eta: FormField,
    spec: KernelSpec,
    profiles: RadialProfiles,
    p: float,
    q: QuadratureSpec,
    scheme: FDScheme = SOBOLEV_SCHEME,
    margin: float = 1.5,
    grid: QuadratureSpec = SOBOLEV_GRID,
    sphere_nodes: int = 2,
    azimuth: int = 4,
) -> SobolevRatios:
    """Quotienten ||X^k L eta||_p / ||eta||_p fuer k = 0, 1, 2.

    L eta wird auf der geodaetischen Kugel um den Traegermittelpunkt mit Radius
    Traegerradius + `margin` integriert, eta ueber seinen Traeger. X_i = x_n d_i
    wird translationsinvariant um e differenziert.

    Raises:
        ExponentRangeError: p nicht in (p1, p2).
        SupportViolationError: eta ohne Traeger.
    """

    window = lp_range(spec.n, spec.m)
    if not window.contains(p):
        raise ExponentRangeError(f"p={p} outside ({window.p1:.4g}, {window.p2:.4g})")
    if eta.support is None:
        raise SupportViolationError("sobolev_ratio needs a compactly supported form")
    center = eta.support.center.coords
    reach = 2.0 * float(np.arctanh(eta.support.radius))
    inner_points, inner_weights = polar_volume_rule(center, 0.0, reach, grid, sphere_nodes, azimuth)
    base = lp_norm(eta(inner_points), inner_weights, p)
    points, weights = polar_volume_rule(center, 0.0, reach + margin, grid, sphere_nodes, azimuth)
    values, first, second = invariant_jet(potential_field(eta, spec, profiles, q), points, scheme)
    ratios = SobolevRatios(
        p=p,
        potential=lp_norm(values, weights, p) / base,
        first=lp_norm(first, weights, p) / base,
        second=lp_norm(second, weights, p) / base,
    )
    _LOGGER.info("sobolev ratios p=%g: %.3e %.3e %.3e", p, *ratios.as_tuple())
    return ratios
