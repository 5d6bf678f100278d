"""Configuration helpers for the hyperbolic Riesz kernel toolkit."""

from .settings import (
    HYPR_AZIMUTH_NODES,
    HYPR_FD_STEP,
    HYPR_GRADED_PANELS,
    HYPR_GRADING_RATIO,
    HYPR_INNER_CUTOFF,
    HYPR_JET_POINTS,
    HYPR_LOG_LEVEL,
    HYPR_PANEL_NODES,
    HYPR_POLAR_NODES,
    HYPR_POTENTIAL_POINTS,
    HYPR_RADIAL_NODES,
    HYPR_RADIAL_PANELS,
    HYPR_SAMPLE_PAIRS,
    HYPR_SAMPLE_POINTS,
    HYPR_SEED,
    HYPR_THREADS,
    HYPR_TRACE_ENABLED,
    HYPR_TRANSVERSE_NODES,
    LOG_DIR,
)

__all__ = [
    "HYPR_AZIMUTH_NODES",
    "HYPR_FD_STEP",
    "HYPR_GRADED_PANELS",
    "HYPR_GRADING_RATIO",
    "HYPR_INNER_CUTOFF",
    "HYPR_JET_POINTS",
    "HYPR_LOG_LEVEL",
    "HYPR_PANEL_NODES",
    "HYPR_POLAR_NODES",
    "HYPR_POTENTIAL_POINTS",
    "HYPR_RADIAL_NODES",
    "HYPR_RADIAL_PANELS",
    "HYPR_SAMPLE_PAIRS",
    "HYPR_SAMPLE_POINTS",
    "HYPR_SEED",
    "HYPR_THREADS",
    "HYPR_TRACE_ENABLED",
    "HYPR_TRANSVERSE_NODES",
    "LOG_DIR",
]
