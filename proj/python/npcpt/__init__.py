"""Nonparametric changepoint detection with pruned dynamic programming."""

from ._npcpt import (
    ConfigError,
    CostModel,
    DataError,
    PathEntry,
    PenaltyPath,
    Segmentation,
    benchmark,
    crops,
    cvm_statistic,
    default_quantile_count,
    elbow_curve,
    optimal_partitioning,
    pelt,
    screen_candidates,
    segment_neighbourhood,
    simulate,
    suggest_elbow,
    tp_fp,
)

__all__ = [
    "ConfigError",
    "CostModel",
    "DataError",
    "PathEntry",
    "PenaltyPath",
    "Segmentation",
    "benchmark",
    "crops",
    "cvm_statistic",
    "default_quantile_count",
    "elbow_curve",
    "optimal_partitioning",
    "pelt",
    "screen_candidates",
    "segment_neighbourhood",
    "simulate",
    "suggest_elbow",
    "tp_fp",
]
