"""Oracle harness: quadrature consistency and Monte Carlo agreement checks."""

from .analytic import (
    check_decomposition,
    check_flow_identity,
    check_flow_integral,
    check_mgf_closed_vs_quadrature,
    check_mgf_moments,
    check_msd_assemblies,
    check_normalization,
    check_reflection,
    check_stationary_limit,
    check_stationary_normalization,
    check_symmetry,
)
from .report import CheckReport, sort_reports
from .statistical import check_mc_agreement, check_mc_msd, check_mc_noreset, check_mc_stationary
from .suites import DEFAULT_SEED, run_suite

__all__ = [
    "DEFAULT_SEED",
    "CheckReport",
    "check_decomposition",
    "check_flow_identity",
    "check_flow_integral",
    "check_mc_agreement",
    "check_mc_msd",
    "check_mc_noreset",
    "check_mc_stationary",
    "check_mgf_closed_vs_quadrature",
    "check_mgf_moments",
    "check_msd_assemblies",
    "check_normalization",
    "check_reflection",
    "check_stationary_limit",
    "check_stationary_normalization",
    "check_symmetry",
    "run_suite",
    "sort_reports",
]
