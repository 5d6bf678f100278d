"""Kompakt getragene Testformen beta(r(c, y) / r_s) * sum a_J w^J."""

from __future__ import annotations

from typing import Mapping

import numpy as np

from double_forms.forms import FormField, SupportDescriptor
from double_forms.multi_index import dimension, index_lookup, parse_label
from geometry.isometries import pseudo_distance_half_space
from geometry.points import Frame, Point


def bump_profile(t: np.ndarray) -> np.ndarray:
    """beta(t) = exp(1 - 1/(1 - t^2)) fuer |t| < 1, sonst 0; beta(0) = 1."""

    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    inside = np.abs(t) < 1.0
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - t[inside] ** 2))
    return out


def _coefficient_vector(n: int, degree: int, coefficients: Mapping[str, float] | np.ndarray) -> np.ndarray:
    if isinstance(coefficients, np.ndarray):
        return np.asarray(coefficients, dtype=float).reshape(dimension(n, degree))
    lookup = index_lookup(n, degree)
    vector = np.zeros(dimension(n, degree))
    for key, value in coefficients.items():
        vector[lookup[parse_label(key, n)]] = float(value)
    return vector


def bump_form(
    n: int,
    degree: int,
    center: Point,
    radius: float,
    coefficients: Mapping[str, float] | np.ndarray,
) -> FormField:
    """Glatte m-Form im w-Rahmen mit Traeger {r(center, y) < radius}.

    Args:
        coefficients: Konstante Koeffizienten a_J, als Array oder Labels ("1,3").
    """

    support = SupportDescriptor(center, radius)
    vector = _coefficient_vector(n, degree, coefficients)
    origin = center.coords

    def values(points: np.ndarray) -> np.ndarray:
        t = pseudo_distance_half_space(points, origin) / radius
        return bump_profile(t)[:, None] * vector[None, :]

    return FormField(n, degree, Frame.INVARIANT_W, values, support)
