"""Nearest-neighbor goodness-of-fit testing on flat and curved spaces.

The test statistic sums powers of the volumes of k-nearest-neighbor balls,
weighted by the hypothesized density. The package provides the statistic
on the torus-square, circle, and sphere, six classical competitor tests,
seeded samplers for the study's alternative models, and a deterministic
Monte Carlo engine for critical values, power estimates, and reproduction
of the reference tables.
"""
from .geometry import (CIRCLE, SPHERE, SPACES, TORUS_SQUARE, SampleSet, Space,
                       distance, knn_brute, knn_fast, space_by_name,
                       unit_ball_volume)
from .mc import (CriticalValueRow, CriticalValueTable, NNStatistic,
                 NormalityReport, PowerResult, TestSpec, clt_diagnostic,
                 estimate_power, reproduce_tables, simulate_critical_values)
from .sampling import (BimodalVonMisesFisher, Clustering, Contamination, Kent,
                       RngStream, UniformNull, VonMisesFisher, density, sample)
from .scores import (LimitValue, ScoreParams, StatisticResult, alpha_entropy,
                     lln_limit, null_limit_mean, rescaled_score, statistic,
                     weighted_measure)

__version__ = "0.1.0"

__all__ = [
    "CIRCLE", "SPHERE", "SPACES", "TORUS_SQUARE", "SampleSet", "Space",
    "distance", "knn_brute", "knn_fast", "space_by_name", "unit_ball_volume",
    "CriticalValueRow", "CriticalValueTable", "NNStatistic", "NormalityReport",
    "PowerResult", "TestSpec", "clt_diagnostic", "estimate_power",
    "reproduce_tables", "simulate_critical_values",
    "BimodalVonMisesFisher", "Clustering", "Contamination", "Kent",
    "RngStream", "UniformNull", "VonMisesFisher", "density", "sample",
    "LimitValue", "ScoreParams", "StatisticResult", "alpha_entropy",
    "lln_limit", "null_limit_mean", "rescaled_score", "statistic",
    "weighted_measure",
]
