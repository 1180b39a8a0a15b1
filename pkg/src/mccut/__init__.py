"""Spectral-partitioning approximation solver for Max Cut and Maximum
Colored Cut, with the full approximation-guarantee analysis curves and a
brute-force oracle for small instances."""

from .graph import ColoredGraph, EdgeColor, GraphError, build, generate, induced_subgraph, parse, serialize, total_weight
from .spectral import SpectralResult, leading_relaxation_vector, quadratic_forms
from .rounding import (ExpectedStats, PartitionStats, best_tripartition,
                       exact_rounding_expectations, partition_stats,
                       recoverable_ratio, threshold_round)
from .solver import SolveParams, SolveReport, good_weight, half_cut, solve
from .oracle import OracleResult, brute_force, verify_report
from . import guarantee

__version__ = "0.1.0"
