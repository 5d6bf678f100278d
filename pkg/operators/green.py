"""Volumen- und Sphaerenquadraturen in geodaetischen Polarkoordinaten.

Grundlage der Adjungiertheitspruefung <d alpha, beta> = <alpha, delta beta> und der
zweiten Green'schen Formel auf einem Kreisring um e:

    <Delta w, h> - <w, Delta h> = int_dA ( <delta w, i_nu h> - <h, i_nu dw>
                                          - <delta h, i_nu w> + <w, i_nu dh> ) dS."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from double_forms.forms import FormField, inner_product, interior_coefficients
from geometry.isometries import cayley_to_half_space_jacobian, translate_forward
from geometry.points import Frame
from geometry.sphere import geodesic_polar_points, sphere_rule
from models.types import FDScheme, QuadratureSpec
from operators.exterior import codifferential, exterior_derivative
from operators.laplacian import laplacian_field
from operators.potential import SupportViolationError
from util.quadrature import composite_rule

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Annulus:
    """{inner < d(e, y) < outer} mit geodaetischen Radien."""

    inner: float
    outer: float

    def __post_init__(self) -> None:
        if not 0.0 < self.inner < self.outer:
            raise ValueError("annulus needs 0 < inner < outer")


@dataclass(frozen=True)
class GreenIdentityResult:
    volume: float
    boundary: float

    @property
    def relative_defect(self) -> float:
        return abs(self.volume - self.boundary) / max(abs(self.volume), abs(self.boundary), 1e-14)


def _require_w_frame(*forms: FormField) -> None:
    for form in forms:
        if form.frame is not Frame.INVARIANT_W:
            raise SupportViolationError("integral identities are evaluated in the w-frame")


def polar_volume_rule(
    center: np.ndarray,
    lower: float,
    upper: float,
    q: QuadratureSpec,
    sphere_nodes: int,
    azimuth: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Punkte (N, n) und Gewichte fuer int dmu ueber {lower < d(center, y) < upper}."""

    n = center.shape[-1]
    knots = np.linspace(lower, upper, q.radial_panels + 1)
    radii, radial_w = composite_rule(knots, q.radial_nodes)
    dirs, sphere_w = sphere_rule(n, sphere_nodes, azimuth)
    local = geodesic_polar_points(radii[:, None], dirs[None, :, :])
    weights = (radial_w * np.sinh(radii) ** (n - 1))[:, None] * sphere_w[None, :]
    return translate_forward(center, local.reshape(-1, n)), weights.ravel()


def radial_normals(distance: float, directions: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Punkte auf der geodaetischen Sphaere um e und ihre auswaerts zeigenden Normalen (w-Rahmen)."""

    ball = np.tanh(0.5 * distance) * directions
    points = geodesic_polar_points(np.full(directions.shape[0], distance), directions)
    jacobian = cayley_to_half_space_jacobian(ball)
    velocity = 0.5 / np.cosh(0.5 * distance) ** 2 * np.einsum("kij,kj->ki", jacobian, directions)
    return points, velocity / points[:, -1:]


def inner_product_integral(
    alpha: FormField,
    beta: FormField,
    q: QuadratureSpec,
    sphere_nodes: int = 6,
    azimuth: int = 12,
) -> float:
    """<alpha, beta> = int <alpha, beta>_y dmu(y) ueber den Traeger von alpha (sonst beta).

    Raises:
        SupportViolationError: Keine der beiden Formen ist kompakt getragen.
    """

    _require_w_frame(alpha, beta)
    support = alpha.support or beta.support
    if support is None:
        raise SupportViolationError("inner_product_integral needs at least one compactly supported form")
    reach = 2.0 * float(np.arctanh(support.radius))
    points, weights = polar_volume_rule(support.center.coords, 0.0, reach, q, sphere_nodes, azimuth)
    return float(np.sum(weights * inner_product(alpha(points), beta(points))))


def adjointness_defect(
    alpha: FormField,
    beta: FormField,
    q: QuadratureSpec,
    scheme: FDScheme,
    sphere_nodes: int = 6,
    azimuth: int = 12,
) -> tuple[float, float, float]:
    """(<d alpha, beta>, <alpha, delta beta>, relativer Defekt) fuer Grade p-1 und p."""

    if beta.degree != alpha.degree + 1:
        raise SupportViolationError("adjointness needs forms of degrees p-1 and p")
    left = inner_product_integral(exterior_derivative(alpha, scheme), beta, q, sphere_nodes, azimuth)
    right = inner_product_integral(alpha, codifferential(beta, scheme), q, sphere_nodes, azimuth)
    defect = abs(left - right) / max(abs(left), abs(right), 1e-14)
    _LOGGER.debug("adjointness: <d a, b> = %.6e, <a, delta b> = %.6e", left, right)
    return left, right, defect


def _contracted(form: FormField, points: np.ndarray, normals: np.ndarray) -> np.ndarray:
    if form.degree == 0:
        return np.zeros((points.shape[0], 1))
    return interior_coefficients(normals, form(points), form.n, form.degree)


def _boundary_density(
    omega: FormField, eta: FormField, points: np.ndarray, normals: np.ndarray, scheme: FDScheme
) -> np.ndarray:
    d_omega = exterior_derivative(omega, scheme)
    d_eta = exterior_derivative(eta, scheme)
    total = -inner_product(eta(points), _contracted(d_omega, points, normals))
    total += inner_product(omega(points), _contracted(d_eta, points, normals))
    if omega.degree > 0:
        total += inner_product(codifferential(omega, scheme)(points), _contracted(eta, points, normals))
        total -= inner_product(codifferential(eta, scheme)(points), _contracted(omega, points, normals))
    return total


def green_identity_defect(
    omega: FormField,
    eta: FormField,
    annulus: Annulus,
    q: QuadratureSpec,
    scheme: FDScheme,
    sphere_nodes: int = 6,
    azimuth: int = 12,
) -> GreenIdentityResult:
    """Beide Seiten der zweiten Green'schen Formel auf dem Kreisring um e."""

    _require_w_frame(omega, eta)
    if omega.degree != eta.degree or omega.n != eta.n:
        raise SupportViolationError("Green's identity pairs forms of equal degree")
    n = omega.n
    e = np.zeros(n)
    e[-1] = 1.0
    points, weights = polar_volume_rule(e, annulus.inner, annulus.outer, q, sphere_nodes, azimuth)
    integrand = inner_product(laplacian_field(omega, scheme)(points), eta(points))
    integrand -= inner_product(omega(points), laplacian_field(eta, scheme)(points))
    volume = float(np.sum(weights * integrand))

    dirs, sphere_w = sphere_rule(n, sphere_nodes, azimuth)
    boundary = 0.0
    for distance, orientation in ((annulus.outer, 1.0), (annulus.inner, -1.0)):
        shell, normals = radial_normals(distance, dirs)
        density = _boundary_density(omega, eta, shell, orientation * normals, scheme)
        boundary += float(np.sum(sphere_w * np.sinh(distance) ** (n - 1) * density))
    _LOGGER.info("Green's identity: volume %.6e, boundary %.6e", volume, boundary)
    return GreenIdentityResult(volume, boundary)
