"""Auxiliary kernels shared by the densities: tau, I, Theta, Gamma_lambda^xi.

All x-indicators are right-continuous (``[lo, hi)``), so at the jump points
x = 0 and x = v2 t the densities return their right-hand limits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DomainError, OutOfSupportError
from ..params import MotionParams, VelocityRegime
from ..specfun import scaled_gen_gamma0


def check_time(t: float, allow_zero: bool = False) -> None:
    if not math.isfinite(t) or t < 0 or (t == 0 and not allow_zero):
        raise DomainError(f"time must be {'nonnegative' if allow_zero else 'positive'}, got {t}")


def support(t: float, p: MotionParams) -> tuple[float, float]:
    """Closed hull of the support of the reset process at time t."""
    return min(p.v2 * t, 0.0), max(p.v1 * t, 0.0)


def breakpoints(t: float, p: MotionParams) -> list[float]:
    """Sorted points where some density of the law is non-smooth."""
    lo, hi = support(t, p)
    return sorted({lo, hi, 0.0, p.v1 * t, p.v2 * t})


def check_in_support(x: float, t: float, p: MotionParams) -> None:
    lo, hi = support(t, p)
    if not lo <= x <= hi:
        raise OutOfSupportError(f"x={x} outside [{lo}, {hi}] at t={t}")


def tau(x: float, t: float, p: MotionParams) -> float:
    """Time spent with velocity v1 by a reset-free path that reaches x at time t."""
    return (x - p.v2 * t) / (p.v1 - p.v2)


def in_diffusion_interval(x: float, t: float, p: MotionParams) -> bool:
    return p.v2 * t <= x < p.v1 * t


def indicator_I(x: float, t: float, p: MotionParams) -> bool:
    return min(p.v2 * t, 0.0) <= x < p.v1 * t


def m_x(x: float, p: MotionParams) -> float:
    return max(x / p.v1, x / p.v2)


def m_xt(x: float, t: float, p: MotionParams) -> float:
    return min(x / p.v2, t)


def _reset_window(x: float, t: float, p: MotionParams) -> tuple[float, float]:
    # range of times-since-last-reset s for which x lies strictly inside (v2 s, v1 s)
    if p.regime is VelocityRegime.STRADDLING:
        return m_x(x, p), t
    return x / p.v1, m_xt(x, t, p)


def theta(x: float, t: float, p: MotionParams) -> float:
    if not indicator_I(x, t, p):
        return 0.0
    lo, hi = _reset_window(x, t, p)
    if lo >= hi:
        return 0.0
    lam, xi = p.lam, p.xi
    return math.exp(-xi * lo) / (1.0 + lam * lo) - math.exp(-xi * hi) / (1.0 + lam * hi)


def scaled_gamma_xt(x: float, t: float, p: MotionParams) -> float:
    """exp(xi / lam) * Gamma_lambda^xi(x, t), the form every density uses."""
    if p.xi == 0:
        raise DomainError("Gamma_lambda^xi is undefined at xi = 0")
    if not indicator_I(x, t, p):
        return 0.0
    lo, hi = _reset_window(x, t, p)
    if lo >= hi:
        return 0.0
    lam, xi = p.lam, p.xi
    z0 = (lo + 1.0 / lam) * xi
    z1 = (hi + 1.0 / lam) * xi
    return math.exp(-xi * lo) * scaled_gen_gamma0(z0, z1)


def gamma_xt(x: float, t: float, p: MotionParams) -> float:
    return math.exp(-p.xi / p.lam) * scaled_gamma_xt(x, t, p)


def ballistic(x: float, t: float, vj: float, p: MotionParams) -> float:
    """Density at x of a path with no velocity change since its last reset.

    ``t = inf`` gives the stationary version (any time since reset).
    """
    inside = 0.0 <= x < vj * t if vj > 0 else vj * t <= x < 0.0
    if not inside:
        return 0.0
    return p.xi * math.exp(-p.xi * x / vj) / abs(vj + p.lam * x)


@dataclass(frozen=True)
class AuxKernels:
    tau: float
    indicator_I: bool
    theta: float
    gamma_xt: float
    Mx: float
    mxt: float


def aux_kernels(x: float, t: float, p: MotionParams) -> AuxKernels:
    """All auxiliary quantities at (x, t) for a straddling or both-positive p."""
    check_time(t)
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        raise DomainError("aux kernels are defined for straddling or both-positive velocities")
    return AuxKernels(
        tau=tau(x, t, p),
        indicator_I=indicator_I(x, t, p),
        theta=theta(x, t, p),
        gamma_xt=gamma_xt(x, t, p) if p.xi > 0 else 0.0,
        Mx=m_x(x, p),
        mxt=m_xt(x, t, p),
    )
