"""Radiale Profile, Normierung und punktweise Auswertung des Riesz-Kerns k_m(x, y)."""

from riesz_kernel.assembly import (
    SINGULARITY_RADIUS,
    KernelSingularityError,
    kernel_coefficients,
    kernel_eval,
    kernel_parts,
    relative_radius,
    star_dual_coefficients,
    star_dual_kernel,
)
from riesz_kernel.asymptotics import DecayExponents, a2_cancellation_ratio, b_residuals, decay_exponents
from riesz_kernel.half_dim import HalfDimProfiles, half_dim_profiles
from riesz_kernel.kernel_spec import (
    CriticalDegreeError,
    KernelCase,
    KernelSpec,
    KernelSpecError,
    analytic_normalization,
)
from riesz_kernel.normalization import (
    CalibrationError,
    CalibrationResult,
    ReferenceBump,
    calibrate,
    calibrate_normalization,
)
from riesz_kernel.profiles import GenericProfiles, ProfileValues, RadialProfiles, XValues, radial_profiles
from riesz_kernel.quadrature import GradedTable, ProfileConstructionError
from riesz_kernel.scalar import ScalarProfiles, scalar_green

__all__ = [
    "SINGULARITY_RADIUS",
    "CalibrationError",
    "CalibrationResult",
    "CriticalDegreeError",
    "DecayExponents",
    "GenericProfiles",
    "GradedTable",
    "HalfDimProfiles",
    "KernelCase",
    "KernelSingularityError",
    "KernelSpec",
    "KernelSpecError",
    "ProfileConstructionError",
    "ProfileValues",
    "RadialProfiles",
    "ReferenceBump",
    "ScalarProfiles",
    "XValues",
    "a2_cancellation_ratio",
    "analytic_normalization",
    "b_residuals",
    "calibrate",
    "calibrate_normalization",
    "decay_exponents",
    "half_dim_profiles",
    "kernel_coefficients",
    "kernel_eval",
    "kernel_parts",
    "radial_profiles",
    "relative_radius",
    "scalar_green",
    "star_dual_coefficients",
    "star_dual_kernel",
]
