"""Modelle des H^n, Isometrien, Distanzen, Mass und invariante Rahmen."""

from .frames import commutator_residual, domain_check, frame_derivative, frame_scale, frame_vectors
from .isometries import (
    CayleyDirection,
    CayleyMap,
    Composition,
    Isometry,
    PhiMap,
    Rotation,
    Translation,
    TranslationDirection,
    apply_isometry,
    cayley,
    cayley_to_ball,
    cayley_to_ball_jacobian,
    cayley_to_half_space,
    cayley_to_half_space_jacobian,
    compose,
    phi,
    phi_jacobian,
    phi_map,
    pseudo_distance_ball,
    pseudo_distance_half_space,
    random_ball_points,
    random_half_space_points,
    random_rotation,
    rotation_to_axis,
    translate,
    translate_forward,
    translate_inverse,
)
from .metric import (
    conformal_factor,
    geodesic_distance,
    metric_coefficients,
    pseudo_distance,
    pseudo_distance_array,
    pullback_metric,
    volume_density,
    volume_density_array,
)
from .points import (
    BOUNDARY_GUARD,
    BoundaryProximityError,
    Frame,
    GeometryError,
    HyperbolicModel,
    ModelMismatchError,
    Point,
    interior_mask,
    require_interior,
)
from .sphere import cap_rule, geodesic_polar_points, sphere_area, sphere_rule

__all__ = [
    "BOUNDARY_GUARD",
    "BoundaryProximityError",
    "CayleyDirection",
    "CayleyMap",
    "Composition",
    "Frame",
    "GeometryError",
    "HyperbolicModel",
    "Isometry",
    "ModelMismatchError",
    "PhiMap",
    "Point",
    "Rotation",
    "Translation",
    "TranslationDirection",
    "apply_isometry",
    "cap_rule",
    "cayley",
    "cayley_to_ball",
    "cayley_to_ball_jacobian",
    "cayley_to_half_space",
    "cayley_to_half_space_jacobian",
    "commutator_residual",
    "compose",
    "conformal_factor",
    "domain_check",
    "frame_derivative",
    "frame_scale",
    "frame_vectors",
    "geodesic_distance",
    "geodesic_polar_points",
    "interior_mask",
    "metric_coefficients",
    "phi",
    "phi_jacobian",
    "phi_map",
    "pseudo_distance",
    "pseudo_distance_array",
    "pseudo_distance_ball",
    "pseudo_distance_half_space",
    "pullback_metric",
    "random_ball_points",
    "random_half_space_points",
    "random_rotation",
    "require_interior",
    "rotation_to_axis",
    "sphere_area",
    "sphere_rule",
    "translate",
    "translate_forward",
    "translate_inverse",
    "volume_density",
    "volume_density_array",
]
