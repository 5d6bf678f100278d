"""Aeussere Algebra von Formen und Doppelformen im invarianten Rahmen."""

from double_forms.double_form import DoubleForm, StarSlot, max_abs_difference, star_double, wedge_double, wedge_power
from double_forms.forms import (
    FormField,
    FormValue,
    FrameError,
    SupportDescriptor,
    compound_matrix,
    frame_change,
    hodge_star,
    inner_product,
    interior_coefficients,
    pointwise_norm,
    pullback_field,
    pullback_form,
    star_coefficients,
    wedge_coefficients,
)
from double_forms.generators import (
    alpha_beta,
    bounded_quotients,
    gamma_at,
    gamma_coefficients,
    gamma_power,
    gamma_power_coefficients,
    relative_point,
    tau_at,
    tau_coefficients,
    tau_gamma_power,
    tau_gamma_power_coefficients,
)
from double_forms.multi_index import (
    BidegreeError,
    FormError,
    complement_table,
    dimension,
    index_array,
    label,
    multi_indices,
    parse_label,
    permutation_sign,
    removal_table,
    wedge_tensor,
)
from double_forms.oracles import gamma_tau_oracle

__all__ = [
    "BidegreeError",
    "DoubleForm",
    "FormError",
    "FormField",
    "FormValue",
    "FrameError",
    "StarSlot",
    "SupportDescriptor",
    "alpha_beta",
    "bounded_quotients",
    "complement_table",
    "compound_matrix",
    "dimension",
    "frame_change",
    "gamma_at",
    "gamma_coefficients",
    "gamma_power",
    "gamma_power_coefficients",
    "gamma_tau_oracle",
    "hodge_star",
    "index_array",
    "inner_product",
    "interior_coefficients",
    "label",
    "max_abs_difference",
    "multi_indices",
    "parse_label",
    "permutation_sign",
    "pointwise_norm",
    "pullback_field",
    "pullback_form",
    "relative_point",
    "removal_table",
    "star_coefficients",
    "star_double",
    "tau_at",
    "tau_coefficients",
    "tau_gamma_power",
    "tau_gamma_power_coefficients",
    "wedge_coefficients",
    "wedge_double",
    "wedge_power",
]
