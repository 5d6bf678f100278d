"""Kernparameter (n, m) und Fallunterscheidung Skalar / generisch / halbe Dimension."""

from __future__ import annotations

from enum import Enum
from math import factorial

from pydantic import BaseModel, ConfigDict, Field, model_validator

from geometry.sphere import sphere_area


class KernelSpecError(Exception):
    """Unzulaessige Kombination von Dimension und Formgrad."""


class CriticalDegreeError(KernelSpecError):
    """m = (n +- 1)/2: fuer diese Grade gibt es keine L^p-Theorie des Kerns."""


class KernelCase(str, Enum):
    SCALAR = "scalar"
    GENERIC = "generic"
    HALF_DIM = "half_dim"


def analytic_normalization(n: int, m: int) -> float:
    """Startwert a0 = -4^m 2^(2-n) / (m! omega_{n-1}); fuer m = 0 ist das c_n."""

    value = 2.0 ** (2 - n) / sphere_area(n)
    if m == 0:
        return value
    return -(4.0**m) * value / factorial(m)


class KernelSpec(BaseModel):
    """Dimension, Formgrad und Normierung eines Riesz-Kerns.

    Attributes:
        n: Dimension des H^n.
        m: Formgrad mit m <= n/2.
        a0: Normierung; None bedeutet den analytischen Startwert.
        harmonic_shift: Koeffizient lambda des global harmonischen Zusatzterms lambda*u4 in G.
        a2_perturbation: Relative Stoerung epsilon von A2 (nur fuer Sensitivitaetspruefungen).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(ge=2, le=10)
    m: int = Field(ge=0)
    a0: float | None = None
    harmonic_shift: float = 0.0
    a2_perturbation: float = 0.0

    @model_validator(mode="after")
    def _validate_degree(self) -> "KernelSpec":
        if 2 * self.m > self.n:
            raise KernelSpecError(
                f"m = {self.m} exceeds n/2 = {self.n / 2:g}; use the star-dual evaluator for m > n/2"
            )
        if self.m > 0 and abs(self.n - 2 * self.m) == 1:
            raise CriticalDegreeError(
                f"(n, m) = ({self.n}, {self.m}) is critical (m = (n +- 1)/2); "
                "only weighted estimates exist there and they are not implemented"
            )
        return self

    @property
    def case(self) -> KernelCase:
        if self.m == 0:
            return KernelCase.SCALAR
        if 2 * self.m == self.n:
            return KernelCase.HALF_DIM
        return KernelCase.GENERIC

    @property
    def exponent_gap(self) -> int:
        """e = n - 2m."""

        return self.n - 2 * self.m

    @property
    def normalization(self) -> float:
        return analytic_normalization(self.n, self.m) if self.a0 is None else self.a0

    def with_normalization(self, a0: float) -> "KernelSpec":
        return self.model_copy(update={"a0": a0})
