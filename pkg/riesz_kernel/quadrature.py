"""Tabellierte Stammfunktionen auf (0, 1) mit Verdichtung zu beiden Enden.

Das Intervall wird in Paneele zerlegt, deren Laengen zu 0 und zu 1 hin geometrisch
schrumpfen; auf jedem Paneel wird mit Gauss-Legendre integriert. Knoten nahe 1
werden ueber ihren Abstand 1 - t gefuehrt, damit Integranden wie (1-t)^k auch
bei 1 - t ~ 1e-15 volle relative Genauigkeit behalten."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

import config
from util.quadrature import gauss_legendre

_LOGGER = logging.getLogger(__name__)

# f(t, 1 - t) -> Werte, vektorisiert
Integrand = Callable[[np.ndarray, np.ndarray], np.ndarray]


class ProfileConstructionError(ArithmeticError):
    """Profiltabellierung lieferte nichtendliche oder ungueltige Werte."""


def _graded_half(panels: int, ratio: float) -> np.ndarray:
    return 0.5 * ratio ** np.arange(panels, -1, -1, dtype=float)


@dataclass(frozen=True)
class GradedTable:
    """Stammfunktion F(x) = int_anchor^x f(t) dt mit anchor in {0, 1/2, 1}.

    Attributes:
        integrand: f(t, 1 - t), vektorisiert.
        anchor: Nullpunkt der Stammfunktion.
        panels: Paneele je Haelfte.
        ratio: Verhaeltnis benachbarter Paneellaengen.
        nodes: Gauss-Legendre-Knoten je Paneel.
    """

    integrand: Integrand
    anchor: float = 0.0
    panels: int = config.HYPR_GRADED_PANELS
    ratio: float = config.HYPR_GRADING_RATIO
    nodes: int = config.HYPR_PANEL_NODES
    _t: np.ndarray = field(init=False, repr=False)
    _tail: np.ndarray = field(init=False, repr=False)
    _cumulative: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.anchor not in (0.0, 0.5, 1.0):
            raise ValueError("anchor must be 0, 1/2 or 1")
        left = np.concatenate(([0.0], _graded_half(self.panels, self.ratio)))
        right_tail = _graded_half(self.panels, self.ratio)[::-1][1:]
        t = np.concatenate((left, 1.0 - right_tail, [1.0]))
        tail = np.concatenate((1.0 - left, right_tail, [0.0]))
        object.__setattr__(self, "_t", t)
        object.__setattr__(self, "_tail", tail)
        pieces = self._panel_integrals(np.arange(t.size - 1), t[1:], tail[1:])
        if not np.all(np.isfinite(pieces[1:-1])):
            raise ProfileConstructionError("non-finite panel integral while tabulating a profile")
        # Summation laeuft vom Anker nach aussen; die Randpaneele duerfen divergieren.
        origin = int(np.argmin(np.abs(t - self.anchor)))
        cumulative = np.zeros(t.size)
        cumulative[origin + 1 :] = np.cumsum(pieces[origin:])
        cumulative[:origin] = -np.cumsum(pieces[:origin][::-1])[::-1]
        object.__setattr__(self, "_cumulative", cumulative)
        _LOGGER.debug("tabulated %d panels (anchor %.1f)", t.size - 1, self.anchor)

    def _panel_integrals(self, index: np.ndarray, upper: np.ndarray, upper_tail: np.ndarray) -> np.ndarray:
        """int_{t[index]}^{upper} f fuer jedes Paneel (vektorisiert)."""

        xi, w = gauss_legendre(self.nodes)
        xi = 0.5 * (xi + 1.0)
        w = 0.5 * w
        start = self._t[index]
        start_tail = self._tail[index]
        right = start >= 0.5
        length = np.where(right, start_tail - upper_tail, upper - start)
        offset = length[:, None] * xi[None, :]
        tail = np.where(right[:, None], start_tail[:, None] - offset, 1.0 - (start[:, None] + offset))
        t = np.where(right[:, None], 1.0 - tail, start[:, None] + offset)
        values = np.asarray(self.integrand(t.ravel(), tail.ravel()), dtype=float).reshape(t.shape)
        return length * (values @ w)

    def __call__(self, x: np.ndarray | float, one_minus_x: np.ndarray | float | None = None) -> np.ndarray:
        """F(x) = int_anchor^x f; one_minus_x liefert 1 - x mit voller Genauigkeit."""

        x = np.asarray(x, dtype=float)
        shape = x.shape
        x = x.reshape(-1)
        if one_minus_x is None:
            tail = 1.0 - x
        else:
            tail = np.broadcast_to(np.asarray(one_minus_x, dtype=float), shape).reshape(-1)
        if np.any(x <= 0.0) or np.any(tail <= 0.0):
            raise ProfileConstructionError("profile argument must lie in (0, 1)")
        index = np.where(
            x < 0.5,
            np.searchsorted(self._t, x, side="right") - 1,
            self._tail.size - 1 - np.searchsorted(self._tail[::-1], tail, side="left"),
        )
        index = np.clip(index, 0, self._t.size - 2)
        partial = self._panel_integrals(index, x, tail)
        return (self._cumulative[index] + partial).reshape(shape)
