"""Skalarer Fall m = 0: A(r) = c_n int_r^1 (1 - s^2)^(n-2) s^(1-n) ds."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from riesz_kernel.kernel_spec import KernelCase, KernelSpec, KernelSpecError, analytic_normalization
from riesz_kernel.profiles import ProfileValues, RadialProfiles, XValues
from riesz_kernel.quadrature import GradedTable, ProfileConstructionError

_LOGGER = logging.getLogger(__name__)


@lru_cache(maxsize=16)
def _green_table(n: int) -> GradedTable:
    def integrand(s: np.ndarray, tail: np.ndarray) -> np.ndarray:
        return (tail * (1.0 + s)) ** (n - 2) * s ** (1.0 - n)

    return GradedTable(integrand, anchor=1.0)


def scalar_green(n: int, r: np.ndarray | float, c_n: float | None = None) -> np.ndarray:
    """A(r) fuer den skalaren Laplace; c_n = None waehlt den analytischen Wert 2^(2-n)/omega_{n-1}.

    Raises:
        ProfileConstructionError: r ausserhalb (0, 1).
    """

    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0) or np.any(r >= 1.0):
        raise ProfileConstructionError("scalar Green's function is defined for r in (0, 1)")
    constant = analytic_normalization(n, 0) if c_n is None else c_n
    return -constant * _green_table(n)(r, 1.0 - r)


def _green_derivatives(n: int, r: np.ndarray, constant: float) -> tuple[np.ndarray, np.ndarray]:
    tail = (1.0 - r) * (1.0 + r)
    first = -constant * tail ** (n - 2) * r ** (1.0 - n)
    second = -constant * (
        -2.0 * (n - 2) * r * tail ** (n - 3) * r ** (1.0 - n) + (1.0 - n) * tail ** (n - 2) * r ** (-float(n))
    )
    return first, second


@dataclass(frozen=True)
class ScalarProfiles(RadialProfiles):
    """Nur A1 = A ist belegt; A2, A3, A4 verschwinden."""

    _table: GradedTable = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.spec.case is not KernelCase.SCALAR:
            raise KernelSpecError("scalar profiles need m = 0")
        object.__setattr__(self, "_table", _green_table(self.spec.n))
        _LOGGER.info("constructed scalar Green's function for n = %d", self.spec.n)

    def x_values(self, x: np.ndarray, one_minus_x: np.ndarray | None = None) -> XValues:
        x = np.asarray(x, dtype=float)
        r = np.sqrt(x)
        tail = 1.0 - x if one_minus_x is None else np.asarray(one_minus_x, dtype=float)
        g = scalar_green(self.spec.n, r, self.a0)
        first, second = _green_derivatives(self.spec.n, r, self.a0)
        zero = np.zeros_like(x)
        return XValues(x, tail, g, first / (2.0 * r), (second - first / r) / (4.0 * x), zero, zero, zero)

    def evaluate(self, r: np.ndarray | float) -> ProfileValues:
        r = np.asarray(r, dtype=float)
        if np.any(r <= 0.0) or np.any(r >= 1.0):
            raise ProfileConstructionError("profiles are defined for r in (0, 1)")
        a = scalar_green(self.spec.n, r, self.a0)
        first, _ = _green_derivatives(self.spec.n, r, self.a0)
        zero = np.zeros_like(r)
        return ProfileValues(r, a, zero, zero, zero, first, zero, zero)
