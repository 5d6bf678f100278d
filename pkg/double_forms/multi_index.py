"""Aufsteigende Multiindizes, Permutationsparitaet und Vorzeichentabellen.

Intern sind Indizes 0-basiert; Labels fuer Dateien und Ausgaben sind 1-basiert
("1,3" fuer w^1 ^ w^3)."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np


class FormError(ValueError):
    """Basisfehler fuer Formen und Doppelformen."""


class BidegreeError(FormError):
    """Grad oder Bigrad ausserhalb von [0, n]."""


def check_degree(n: int, degree: int) -> None:
    if not 0 <= degree <= n:
        raise BidegreeError(f"degree {degree} outside [0, {n}]")


@lru_cache(maxsize=256)
def multi_indices(n: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Alle aufsteigenden Multiindizes der Laenge `degree`, lexikographisch."""

    check_degree(n, degree)
    return tuple(combinations(range(n), degree))


@lru_cache(maxsize=256)
def index_array(n: int, degree: int) -> np.ndarray:
    indices = multi_indices(n, degree)
    table = np.array(indices, dtype=np.intp).reshape(len(indices), degree)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=256)
def index_lookup(n: int, degree: int) -> dict[tuple[int, ...], int]:
    return {index: position for position, index in enumerate(multi_indices(n, degree))}


def dimension(n: int, degree: int) -> int:
    check_degree(n, degree)
    return comb(n, degree)


def inversion_count(sequence: Sequence[int]) -> int:
    """Anzahl der Vertauschungen beim Insertion-Sort."""

    items = list(sequence)
    swaps = 0
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            swaps += 1
            j -= 1
    return swaps


def permutation_sign(sequence: Sequence[int]) -> int:
    """Vorzeichen der sortierenden Permutation; 0 bei Wiederholungen."""

    if len(set(sequence)) != len(sequence):
        return 0
    return -1 if inversion_count(sequence) % 2 else 1


@lru_cache(maxsize=256)
def wedge_tensor(n: int, p: int, q: int) -> np.ndarray:
    """Dichter Tensor T[K, I, J] mit (a ^ b)_K = sum T[K, I, J] a_I b_J."""

    if p + q > n:
        raise BidegreeError(f"wedge degree {p}+{q} exceeds n={n}")
    lookup = index_lookup(n, p + q)
    tensor = np.zeros((dimension(n, p + q), dimension(n, p), dimension(n, q)))
    for i, left in enumerate(multi_indices(n, p)):
        for j, right in enumerate(multi_indices(n, q)):
            joined = left + right
            sign = permutation_sign(joined)
            if sign:
                tensor[lookup[tuple(sorted(joined))], i, j] = sign
    tensor.setflags(write=False)
    return tensor


@lru_cache(maxsize=256)
def complement_table(n: int, degree: int) -> tuple[np.ndarray, np.ndarray]:
    """Fuer jedes I: Position von I^c und sgn(I, I^c)."""

    lookup = index_lookup(n, n - degree)
    targets = np.empty(dimension(n, degree), dtype=np.intp)
    signs = np.empty(dimension(n, degree))
    for position, index in enumerate(multi_indices(n, degree)):
        rest = tuple(k for k in range(n) if k not in index)
        targets[position] = lookup[rest]
        signs[position] = permutation_sign(index + rest)
    targets.setflags(write=False)
    signs.setflags(write=False)
    return targets, signs


@lru_cache(maxsize=256)
def removal_table(n: int, degree: int) -> tuple[np.ndarray, np.ndarray]:
    """R[I, k] = Position von I ohne I_k (Grad degree-1), S[I, k] = (-1)^k."""

    if degree < 1:
        raise BidegreeError("removal needs degree >= 1")
    lookup = index_lookup(n, degree - 1)
    table = np.empty((dimension(n, degree), degree), dtype=np.intp)
    for position, index in enumerate(multi_indices(n, degree)):
        for k in range(degree):
            table[position, k] = lookup[index[:k] + index[k + 1 :]]
    signs = (-1.0) ** np.arange(degree)
    table.setflags(write=False)
    signs.setflags(write=False)
    return table, signs


def label(index: Sequence[int]) -> str:
    """1-basiertes Label, z. B. (0, 2) -> "1,3"; leerer Index -> "0"."""

    return ",".join(str(k + 1) for k in index) if index else "0"


def parse_label(text: str, n: int) -> tuple[int, ...]:
    """Gegenstueck zu `label`; prueft Aufsteigen und Bereich."""

    text = text.strip()
    if text in {"", "0"}:
        return ()
    try:
        index = tuple(int(part) - 1 for part in text.split(","))
    except ValueError as exc:
        raise FormError(f"invalid multi-index label {text!r}") from exc
    if any(k < 0 or k >= n for k in index) or list(index) != sorted(set(index)):
        raise FormError(f"multi-index {text!r} must be strictly increasing within 1..{n}")
    return index
