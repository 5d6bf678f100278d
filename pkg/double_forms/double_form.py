"""Doppelformen vom Bigrad (p, q) im Produktrahmen w^I(x) (x) w^J(y)."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from double_forms.multi_index import BidegreeError, FormError, check_degree, complement_table, dimension, wedge_tensor
from geometry.points import Point


class StarSlot(str, Enum):
    X = "x"
    Y = "y"
    BOTH = "xy"


@dataclass(frozen=True)
class DoubleForm:
    """Dichte Koeffizienten (..., C(n,p), C(n,q)); fuehrende Achsen sind Batches."""

    n: int
    p: int
    q: int
    coeffs: np.ndarray
    basepair: tuple[Point, Point] | None = None

    def __post_init__(self) -> None:
        check_degree(self.n, self.p)
        check_degree(self.n, self.q)
        coeffs = np.asarray(self.coeffs, dtype=float)
        expected = (dimension(self.n, self.p), dimension(self.n, self.q))
        if coeffs.shape[-2:] != expected:
            raise FormError(f"coefficient block {coeffs.shape[-2:]} does not match bidegree {expected}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, n: int, p: int, q: int, basepair: tuple[Point, Point] | None = None) -> "DoubleForm":
        return cls(n, p, q, np.zeros((dimension(n, p), dimension(n, q))), basepair)

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.p, self.q

    def __add__(self, other: "DoubleForm") -> "DoubleForm":
        if self.bidegree != other.bidegree or self.n != other.n:
            raise BidegreeError("cannot add double forms of different bidegree")
        return DoubleForm(self.n, self.p, self.q, self.coeffs + other.coeffs, self.basepair)

    def __sub__(self, other: "DoubleForm") -> "DoubleForm":
        return self + other.scaled(-1.0)

    def scaled(self, factor: float | np.ndarray) -> "DoubleForm":
        factor = np.asarray(factor, dtype=float)[..., None, None]
        return DoubleForm(self.n, self.p, self.q, factor * self.coeffs, self.basepair)

    def transpose(self) -> "DoubleForm":
        """Vertauscht die Rollen von x und y."""

        swapped = None if self.basepair is None else (self.basepair[1], self.basepair[0])
        return DoubleForm(self.n, self.q, self.p, np.swapaxes(self.coeffs, -1, -2), swapped)


def _same_basepair(a: DoubleForm, b: DoubleForm) -> tuple[Point, Point] | None:
    if a.basepair is None or b.basepair is None:
        return a.basepair or b.basepair
    if not (a.basepair[0].allclose(b.basepair[0]) and a.basepair[1].allclose(b.basepair[1])):
        raise FormError("double forms live at different base pairs")
    return a.basepair


def wedge_double(a: DoubleForm, b: DoubleForm) -> DoubleForm:
    """(alpha1 (x) beta1) ^ (alpha2 (x) beta2) = (alpha1 ^ alpha2) (x) (beta1 ^ beta2).

    Raises:
        BidegreeError: Summe der Bigrade ueberschreitet (n, n).
    """

    if a.n != b.n:
        raise FormError("double forms of different dimension")
    n = a.n
    if a.p + b.p > n or a.q + b.q > n:
        raise BidegreeError(f"bidegree overflow ({a.p}+{b.p}, {a.q}+{b.q}) > ({n}, {n})")
    basepair = _same_basepair(a, b)
    tx = wedge_tensor(n, a.p, b.p)
    ty = wedge_tensor(n, a.q, b.q)
    coeffs = np.einsum("kac,lbd,...ab,...cd->...kl", tx, ty, a.coeffs, b.coeffs, optimize=True)
    return DoubleForm(n, a.p + b.p, a.q + b.q, coeffs, basepair)


def wedge_power(a: DoubleForm, power: int) -> DoubleForm:
    """a ^ ... ^ a (power Faktoren); power = 0 liefert die Einheit vom Bigrad (0, 0)."""

    result = DoubleForm(a.n, 0, 0, np.ones(a.coeffs.shape[:-2] + (1, 1)), a.basepair)
    for _ in range(power):
        result = wedge_double(result, a)
    return result


def star_double(form: DoubleForm, slot: StarSlot = StarSlot.BOTH) -> DoubleForm:
    """Hodge-Stern im x-Slot, y-Slot oder beiden (orthonormaler Produktrahmen)."""

    coeffs = form.coeffs
    p, q = form.p, form.q
    if slot in (StarSlot.X, StarSlot.BOTH):
        targets, signs = complement_table(form.n, p)
        moved = np.zeros(coeffs.shape[:-2] + (dimension(form.n, form.n - p), coeffs.shape[-1]))
        moved[..., targets, :] = coeffs * signs[:, None]
        coeffs, p = moved, form.n - p
    if slot in (StarSlot.Y, StarSlot.BOTH):
        targets, signs = complement_table(form.n, q)
        moved = np.zeros(coeffs.shape[:-1] + (dimension(form.n, form.n - q),))
        moved[..., targets] = coeffs * signs
        coeffs, q = moved, form.n - q
    return DoubleForm(form.n, p, q, coeffs, form.basepair)


def max_abs_difference(a: DoubleForm, b: DoubleForm) -> float:
    if a.bidegree != b.bidegree:
        raise BidegreeError("bidegrees differ")
    return float(np.max(np.abs(a.coeffs - b.coeffs)))
