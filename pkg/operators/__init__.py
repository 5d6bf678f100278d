"""Differentialoperatoren per Differenzen und das Riesz-Potential per singulaerer Quadratur."""

from operators.bump import bump_form, bump_profile
from operators.convolution import (
    ExchangeResult,
    convolution_derivative_exchange,
    frame_derivative_kernel,
    truncated_test_kernel,
)
from operators.decay import (
    BoundaryDecay,
    kernel_boundary_decay,
    kernel_column_field,
    potential_decay_exponents,
    potential_field,
)
from operators.exterior import (
    codifferential,
    codifferential_frame,
    d_form,
    delta_form,
    exterior_coefficients,
    exterior_derivative,
    star_field,
)
from operators.green import (
    Annulus,
    GreenIdentityResult,
    adjointness_defect,
    green_identity_defect,
    inner_product_integral,
    polar_volume_rule,
    radial_normals,
)
from operators.harmonicity import harmonicity_residual, kernel_row_field
from operators.laplacian import (
    coupling_table,
    laplacian_coefficients,
    laplacian_field,
    laplacian_form_halfspace,
    laplacian_scalar_ball,
    laplacian_scalar_halfspace,
)
from operators.potential import (
    PolarNodes,
    QuadratureError,
    SupportViolationError,
    convolve_once,
    hyperbolic_convolution,
    inner_correction,
    polar_nodes,
    riesz_potential,
)

__all__ = [
    "Annulus",
    "BoundaryDecay",
    "ExchangeResult",
    "GreenIdentityResult",
    "PolarNodes",
    "QuadratureError",
    "SupportViolationError",
    "adjointness_defect",
    "bump_form",
    "bump_profile",
    "codifferential",
    "codifferential_frame",
    "convolution_derivative_exchange",
    "convolve_once",
    "coupling_table",
    "d_form",
    "delta_form",
    "exterior_coefficients",
    "exterior_derivative",
    "frame_derivative_kernel",
    "green_identity_defect",
    "harmonicity_residual",
    "hyperbolic_convolution",
    "inner_correction",
    "inner_product_integral",
    "kernel_boundary_decay",
    "kernel_column_field",
    "kernel_row_field",
    "laplacian_coefficients",
    "laplacian_field",
    "laplacian_form_halfspace",
    "laplacian_scalar_ball",
    "laplacian_scalar_halfspace",
    "polar_nodes",
    "polar_volume_rule",
    "potential_decay_exponents",
    "potential_field",
    "radial_normals",
    "riesz_potential",
    "star_field",
]
