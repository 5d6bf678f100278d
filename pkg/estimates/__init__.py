"""Kernklassen, L^p-Bereich, Schur-Test und empirische Pruefungen der Abschaetzungen von L."""

from estimates.auxiliary import (
    AuxiliaryBounds,
    AuxiliaryDerivatives,
    auxiliary_bounds,
    auxiliary_derivatives,
    invariant_jet,
)
from estimates.decomposition import (
    ADMISSIBLE_PARTS,
    BallResidualSplit,
    SecondDerivativeDecomposition,
    decompose_second_derivative,
    lipschitz_ratio,
)
from estimates.diagnostics import (
    AQuantityCheck,
    CZDiagnostics,
    K3WeightResult,
    a_quantity,
    a_quantity_identities,
    cz_cutoff_sensitivity,
    cz_diagnostics,
    k3_weight_test,
    truncated_kernel_bound,
)
from estimates.errors import (
    CriticalRangeError,
    EstimateError,
    ExponentRangeError,
    KernelClassError,
    SampleCoverageError,
)
from estimates.exponents import ExponentRow, exponent_table
from estimates.kernel_classes import (
    KernelClass,
    KernelKind,
    KernelSamples,
    calderon_zygmund_class,
    classify_kernel,
    cz_cancellation,
    ray_points,
    sample_kernel,
)
from estimates.lp_range import LpRange, closed_form_p1, lp_range
from estimates.opnorm import SobolevRatios, convolution_matrix, empirical_opnorm, lp_norm, sobolev_ratio
from estimates.schur import (
    SchurScanRow,
    SchurTestResult,
    conjugate,
    feasible_alpha_interval,
    schur_scan,
    schur_weight_test,
    weight_integral,
    weight_integral_exact,
)

__all__ = [
    "ADMISSIBLE_PARTS",
    "AQuantityCheck",
    "AuxiliaryBounds",
    "AuxiliaryDerivatives",
    "BallResidualSplit",
    "CZDiagnostics",
    "CriticalRangeError",
    "EstimateError",
    "ExponentRangeError",
    "ExponentRow",
    "K3WeightResult",
    "KernelClass",
    "KernelClassError",
    "KernelKind",
    "KernelSamples",
    "LpRange",
    "SampleCoverageError",
    "SchurScanRow",
    "SchurTestResult",
    "SecondDerivativeDecomposition",
    "SobolevRatios",
    "a_quantity",
    "a_quantity_identities",
    "auxiliary_bounds",
    "auxiliary_derivatives",
    "calderon_zygmund_class",
    "classify_kernel",
    "closed_form_p1",
    "conjugate",
    "convolution_matrix",
    "cz_cancellation",
    "cz_cutoff_sensitivity",
    "cz_diagnostics",
    "decompose_second_derivative",
    "empirical_opnorm",
    "exponent_table",
    "feasible_alpha_interval",
    "invariant_jet",
    "k3_weight_test",
    "lipschitz_ratio",
    "lp_norm",
    "lp_range",
    "ray_points",
    "sample_kernel",
    "schur_scan",
    "schur_weight_test",
    "sobolev_ratio",
    "truncated_kernel_bound",
    "weight_integral",
    "weight_integral_exact",
]
