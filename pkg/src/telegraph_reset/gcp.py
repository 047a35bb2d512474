"""Geometric counting process: law, epochs, intertimes, and the mixed-Poisson sampler.

A GCP with intensity lam is a Poisson process whose rate alpha is itself
exponential with mean lam. Sampling alpha once and then drawing Exp(alpha)
sojourns reproduces the dependent, Pareto-type intertimes exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class GcpLaw:
    lam: float

    def __post_init__(self):
        if not (math.isfinite(self.lam) and self.lam > 0):
            raise DomainError(f"GCP intensity must be positive, got {self.lam}")


@dataclass(frozen=True)
class MixedRatePair:
    """Poisson rates of the v1-sojourn and v2-sojourn clocks in one reset cycle."""

    alpha1: float
    alpha2: float

    def __post_init__(self):
        if not (self.alpha1 > 0 and self.alpha2 > 0):
            raise DomainError(f"mixing rates must be positive, got {self.alpha1}, {self.alpha2}")


def increment_pmf(k: int, s: float, law: GcpLaw) -> float:
    """P(N(s) = k): geometric with success probability 1/(1 + lam s)."""
    if k < 0:
        raise DomainError(f"count must be nonnegative, got {k}")
    if not s > 0:
        raise DomainError(f"increment length must be positive, got {s}")
    ls = law.lam * s
    return math.exp(k * math.log(ls / (1.0 + ls)) - math.log1p(ls))


def epoch_pdf(n: int, t: float, law: GcpLaw) -> float:
    """Density of the n-th event time."""
    if n < 1:
        raise DomainError(f"epoch index must be >= 1, got {n}")
    if t < 0:
        raise DomainError(f"time must be nonnegative, got {t}")
    lt = law.lam * t
    ratio = lt / (1.0 + lt)
    return n * ratio ** (n - 1) * law.lam / (1.0 + lt) ** 2


def intertime_pdf(t: float, law: GcpLaw) -> float:
    """Marginal density of every intertime (modified Pareto type I)."""
    if t < 0:
        raise DomainError(f"time must be nonnegative, got {t}")
    return law.lam / (1.0 + law.lam * t) ** 2


def intertime_cdf(t: float, law: GcpLaw) -> float:
    if t < 0:
        return 0.0
    lt = law.lam * t
    return lt / (1.0 + lt)


def draw_rate_pair(law: GcpLaw, rng: np.random.Generator) -> MixedRatePair:
    a1, a2 = rng.exponential(law.lam, size=2)
    # Exp draws are 0 with probability ~2^-53; resample rather than break the invariant
    while a1 <= 0 or a2 <= 0:
        a1, a2 = rng.exponential(law.lam, size=2)
    return MixedRatePair(float(a1), float(a2))


def sample_counts(law: GcpLaw, s: float, size: int, rng: np.random.Generator) -> np.ndarray:
    """Counts N(s) of independent GCPs, via the mixed-Poisson representation."""
    if not s > 0:
        raise DomainError(f"increment length must be positive, got {s}")
    alphas = rng.exponential(law.lam, size=size)
    return rng.poisson(alphas * s)


def sample_first_sojourns(law: GcpLaw, size: int, rng: np.random.Generator) -> np.ndarray:
    """First intertimes: Exp(alpha) with alpha ~ Exp(mean lam)."""
    alphas = rng.exponential(law.lam, size=size)
    return rng.exponential(1.0, size=size) / alphas
