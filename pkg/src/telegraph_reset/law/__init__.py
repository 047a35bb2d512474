"""Closed-form laws of the telegraph process with Poissonian resets."""

from .density import (
    FlowValue,
    LawValue,
    atom_mass,
    flow,
    pdf,
    pdf_ac,
    pdf_lambda_inf,
    pdf_random_lambda_inf,
    pdf_random_stationary,
    stationary_pdf,
)
from .kernels import AuxKernels, aux_kernels, breakpoints, support
from .moments import (
    Extremum,
    MomentLimits,
    MomentSet,
    mean,
    mean_extremum,
    mean_lambda_inf,
    mean_square_distance,
    mean_square_distance_from_moments,
    mean_t_inf,
    mgf,
    mgf_quadrature,
    moment_limits,
    moments,
    noreset_mean,
    noreset_second_moment,
    noreset_variance,
    second_lambda_inf,
    second_moment,
    second_t_inf,
    variance,
    variance_t_inf,
)
from .subdensity import noreset_subdensity, subdensity, subdensity_ac

__all__ = [
    "AuxKernels",
    "Extremum",
    "FlowValue",
    "LawValue",
    "MomentLimits",
    "MomentSet",
    "atom_mass",
    "aux_kernels",
    "breakpoints",
    "flow",
    "mean",
    "mean_extremum",
    "mean_lambda_inf",
    "mean_square_distance",
    "mean_square_distance_from_moments",
    "mean_t_inf",
    "mgf",
    "mgf_quadrature",
    "moment_limits",
    "moments",
    "noreset_mean",
    "noreset_second_moment",
    "noreset_subdensity",
    "noreset_variance",
    "pdf",
    "pdf_ac",
    "pdf_lambda_inf",
    "pdf_random_lambda_inf",
    "pdf_random_stationary",
    "second_lambda_inf",
    "second_moment",
    "second_t_inf",
    "stationary_pdf",
    "subdensity",
    "subdensity_ac",
    "support",
    "variance",
    "variance_t_inf",
]
