"""Hypergeometrische Funktionen und Fundamentalsysteme der Profilgleichungen."""

from special_functions.fundamental import (
    FundamentalSolutions,
    WronskianValues,
    fundamental_solutions,
    g_operator,
    g_source,
    h_operator,
    liouville_constant,
    u3_direct,
    wronskian,
)
from special_functions.hypergeometric import (
    AccuracyLossError,
    Hyp2F1Params,
    HypergeometricError,
    ParameterPoleError,
    hyp2f1,
    hyp2f1_values,
    terminating_coefficients,
    termination_degree,
)

__all__ = [
    "AccuracyLossError",
    "FundamentalSolutions",
    "Hyp2F1Params",
    "HypergeometricError",
    "ParameterPoleError",
    "WronskianValues",
    "fundamental_solutions",
    "g_operator",
    "g_source",
    "h_operator",
    "hyp2f1",
    "hyp2f1_values",
    "liouville_constant",
    "terminating_coefficients",
    "termination_degree",
    "u3_direct",
    "wronskian",
]
