"""Exact Monte Carlo simulation of the reset telegraph process."""

from .engine import (
    BatchSummary,
    Estimate,
    PathOutcome,
    SampleArrays,
    SimConfig,
    run_batch,
    simulate_path,
    simulate_samples,
    summarize,
)
from .histogram import Histogram, empirical_density

__all__ = [
    "BatchSummary",
    "Estimate",
    "Histogram",
    "PathOutcome",
    "SampleArrays",
    "SimConfig",
    "empirical_density",
    "run_batch",
    "simulate_path",
    "simulate_samples",
    "summarize",
]
