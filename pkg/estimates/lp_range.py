"""Der L^p-Bereich p1 < p < p2 des Riesz-Potentials auf m-Formen."""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, model_validator

from estimates.errors import CriticalRangeError

IDENTITY_TOLERANCE = 1e-12


def closed_form_p1(n: int, m: int) -> float:
    """p1 in der Form 2(n-1)/(n-2+|n-2m|)."""

    return 2.0 * (n - 1) / (n - 2 + abs(n - 2 * m))


class LpRange(BaseModel):
    """p1 = (n-1)/(n-1-m), p2 = (n-1)/m (unendlich fuer m = 0), mu = (n-1-2m)^2/4.

    Bei der Konstruktion werden 1/p1 + 1/p2 = 1, die Gleichheit mit
    `closed_form_p1` und |1/p1 - 1/2| = sqrt(mu)/(n-1) geprueft.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    m: int
    p1: float
    p2: float
    spectral_bound: float

    @model_validator(mode="after")
    def _check_identities(self) -> "LpRange":
        inverse_p2 = 0.0 if math.isinf(self.p2) else 1.0 / self.p2
        if abs(1.0 / self.p1 + inverse_p2 - 1.0) > IDENTITY_TOLERANCE:
            raise CriticalRangeError("p1 and p2 are not conjugate")
        if abs(self.p1 - closed_form_p1(self.n, self.m)) > IDENTITY_TOLERANCE * self.p1:
            raise CriticalRangeError("p1 disagrees with 2(n-1)/(n-2+|n-2m|)")
        gap = abs(1.0 / self.p1 - 0.5)
        if abs(gap - math.sqrt(self.spectral_bound) / (self.n - 1)) > IDENTITY_TOLERANCE:
            raise CriticalRangeError("range endpoints do not match the spectral bound")
        return self

    def contains(self, p: float) -> bool:
        return self.p1 < p < self.p2

    def spectral_contains(self, p: float) -> bool:
        """|1/p - 1/2| < sqrt(mu)/(n-1)."""

        return abs(1.0 / p - 0.5) < math.sqrt(self.spectral_bound) / (self.n - 1)


def lp_range(n: int, m: int) -> LpRange:
    """L^p-Bereich fuer nichtkritische Grade.

    Raises:
        CriticalRangeError: |n - 2m| <= 1 oder m ausserhalb [0, n/2].
    """

    if m < 0 or 2 * m > n:
        raise CriticalRangeError(f"form degree m = {m} must lie in [0, n/2] for n = {n}")
    if abs(n - 2 * m) <= 1:
        raise CriticalRangeError(f"(n, m) = ({n}, {m}) is critical: no L^p range")
    p1 = (n - 1) / (n - 1 - m)
    p2 = math.inf if m == 0 else (n - 1) / m
    return LpRange(n=n, m=m, p1=p1, p2=p2, spectral_bound=(n - 1 - 2 * m) ** 2 / 4.0)
