"""Gauss-Regeln und geometrisch verdichtete Paneelzerlegungen."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi


@lru_cache(maxsize=64)
def gauss_legendre(count: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre-Knoten und -Gewichte auf [-1, 1]."""

    nodes, weights = np.polynomial.legendre.leggauss(count)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


@lru_cache(maxsize=64)
def gauss_gegenbauer(count: int, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Jacobi-Regel mit Gewicht (1-t^2)^alpha auf [-1, 1]."""

    nodes, weights = roots_jacobi(count, alpha, alpha)
    nodes = np.asarray(nodes, dtype=float)
    weights = np.asarray(weights, dtype=float)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def panel_rule(a: float, b: float, count: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre-Regel auf dem Intervall [a, b]."""

    nodes, weights = gauss_legendre(count)
    half = 0.5 * (b - a)
    return a + half * (nodes + 1.0), half * weights


def composite_rule(knots: np.ndarray, count: int) -> tuple[np.ndarray, np.ndarray]:
    """Zusammengesetzte Gauss-Legendre-Regel ueber aufeinanderfolgende Knoten."""

    knots = np.asarray(knots, dtype=float)
    nodes, weights = gauss_legendre(count)
    left = knots[:-1, None]
    half = 0.5 * np.diff(knots)[:, None]
    return (left + half * (nodes + 1.0)).ravel(), (half * weights).ravel()


def graded_knots(a: float, b: float, panels: int, ratio: float, toward: str = "left") -> np.ndarray:
    """Knoten auf [a, b], deren Paneellaengen geometrisch zu einem Ende schrumpfen.

    Args:
        a, b: Intervallgrenzen.
        panels: Anzahl Paneele.
        ratio: Verhaeltnis benachbarter Paneellaengen (0 < ratio < 1).
        toward: "left" verdichtet bei a, "right" bei b.
    """

    if panels < 1:
        raise ValueError("panels must be positive")
    lengths = ratio ** np.arange(panels)[::-1]
    cumulative = np.concatenate(([0.0], np.cumsum(lengths))) / lengths.sum()
    if toward == "right":
        cumulative = 1.0 - cumulative[::-1]
    elif toward != "left":
        raise ValueError("toward must be 'left' or 'right'")
    return a + (b - a) * cumulative
