"""Fehlerhierarchie der L^p-Abschaetzungen."""

from __future__ import annotations


class EstimateError(Exception):
    """Basisklasse fuer Fehler der Kernklassifikation und der L^p-Pruefungen."""


class CriticalRangeError(EstimateError):
    """|n - 2m| <= 1: kein L^p-Bereich."""


class SampleCoverageError(EstimateError):
    """Samples decken den verlangten r-Bereich nicht ab."""


class KernelClassError(EstimateError):
    """Ein Kernanteil verletzt die behauptete Klasse."""


class ExponentRangeError(EstimateError):
    """p liegt nicht im offenen Bereich (p1, p2) bzw. nicht in (1, inf)."""
