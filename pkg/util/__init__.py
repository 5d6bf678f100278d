"""Hilfsfunktionen fuer Tracing, Ausgabe, Fits, Quadratur und Differenzenquotienten."""

from .finite_differences import (
    StencilError,
    axis_derivatives,
    directional_first,
    directional_second,
    gradient,
    hessian,
)
from .fitting import FitError, PowerLawFit, fit_power_law, log_window
from .output import format_value, render_csv, write_csv, write_json, write_text
from .quadrature import composite_rule, gauss_gegenbauer, gauss_legendre, graded_knots, panel_rule
from .tracing import traced_check

__all__ = [
    "FitError",
    "PowerLawFit",
    "StencilError",
    "axis_derivatives",
    "composite_rule",
    "directional_first",
    "directional_second",
    "fit_power_law",
    "format_value",
    "gauss_gegenbauer",
    "gauss_legendre",
    "gradient",
    "graded_knots",
    "hessian",
    "log_window",
    "panel_rule",
    "render_csv",
    "traced_check",
    "write_csv",
    "write_json",
    "write_text",
]
