"""Exponential integral E1 and the generalized incomplete gamma function at a = 0.

Every closed-form law in this package is written in terms of

    Gamma(0, z0, z1) = int_{z0}^{z1} t^{-1} e^{-t} dt = E1(z0) - E1(z1),

usually multiplied by a large exponential prefactor. The ``scaled_*`` variants
return ``exp(z0) * Gamma(0, z0, z1)`` so callers can fold that prefactor in
without overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

EULER_GAMMA = 0.57721566490153286060651209008240243

# Relative width below which E1(z0) - E1(z1) is replaced by direct quadrature.
CANCELLATION_GUARD = 1e-3

_E1_ZERO_BEYOND = 740.0
_EPS = 2.220446049250313e-16
_FPMIN = 1e-300
_MAX_ITER = 10_000

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(20)
_GL_NODES = tuple(float(v) for v in _GL_NODES)
_GL_WEIGHTS = tuple(float(v) for v in _GL_WEIGHTS)


def _e1_series(x: float) -> float:
    # E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
    total = 0.0
    term = 1.0
    for k in range(1, _MAX_ITER):
        term *= -x / k
        contrib = term / k
        total += contrib
        if abs(contrib) < _EPS * abs(total):
            break
    return -EULER_GAMMA - math.log(x) - total


def _e1_scaled_cf(x: float) -> float:
    # exp(x) E1(x) by the modified Lentz continued fraction, valid for x > 1
    b = x + 1.0
    c = 1.0 / _FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        a = -float(i * i)
        b += 2.0
        d = a * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = b + a / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = c * d
        h *= delta
        if abs(delta - 1.0) <= _EPS:
            return h
    raise ArithmeticError(f"E1 continued fraction did not converge at x={x}")


def exp_integral_e1(x: float) -> float:
    """E1(x) for x > 0; exactly 0.0 once it would underflow (x > 740)."""
    if not x > 0:
        raise DomainError(f"E1 needs x > 0, got {x}")
    if x <= 1.0:
        return _e1_series(x)
    if x > _E1_ZERO_BEYOND:
        return 0.0
    return math.exp(-x) * _e1_scaled_cf(x)


def scaled_e1(x: float) -> float:
    """exp(x) * E1(x) for x > 0; finite for every x, tends to 1/x."""
    if not x > 0:
        raise DomainError(f"E1 needs x > 0, got {x}")
    if math.isinf(x):
        return 0.0
    if x <= 1.0:
        return math.exp(x) * _e1_series(x)
    return _e1_scaled_cf(x)


@dataclass(frozen=True)
class GammaArgs:
    """Validated limits ``0 < z0 <= z1 <= inf`` of Gamma(0, z0, z1)."""

    z0: float
    z1: float = math.inf

    def __post_init__(self):
        if not self.z0 > 0:
            raise DomainError(f"Gamma(0, z0, z1) diverges for z0 <= 0 (z0={self.z0})")
        if math.isnan(self.z1) or self.z1 < self.z0:
            raise DomainError(f"need z1 >= z0, got z0={self.z0}, z1={self.z1}")


def _shifted_quadrature(z0: float, z1: float) -> float:
    # int_{z0}^{z1} exp(-(t - z0)) / t dt, composite Gauss-Legendre on panels of width <= 2;
    # beyond z0 + 50 the integrand is below exp(-50) relative and is dropped
    upper = min(z1, z0 + 50.0)
    width = upper - z0
    panels = max(1, math.ceil(width / 2.0))
    h = width / panels
    total = 0.0
    for k in range(panels):
        a = z0 + k * h
        half = 0.5 * h
        mid = a + half
        acc = 0.0
        for node, weight in zip(_GL_NODES, _GL_WEIGHTS):
            t = mid + half * node
            acc += weight * math.exp(z0 - t) / t
        total += half * acc
    return total


def scaled_gen_gamma0(z0: float, z1: float = math.inf) -> float:
    """exp(z0) * Gamma(0, z0, z1), computed without forming exp(z0)."""
    GammaArgs(z0, z1)
    if z1 == z0:
        return 0.0
    if z1 - z0 <= CANCELLATION_GUARD * z0:
        return _shifted_quadrature(z0, z1)
    if math.isinf(z1):
        return scaled_e1(z0)
    return scaled_e1(z0) - math.exp(z0 - z1) * scaled_e1(z1)


def gen_gamma0(z0: float, z1: float = math.inf) -> float:
    """Generalized incomplete gamma Gamma(0, z0, z1) = E1(z0) - E1(z1) >= 0.

    Narrow intervals (``z1 - z0 <= CANCELLATION_GUARD * z0``) are integrated
    directly, since the difference of two nearly equal E1 values would cancel.
    """
    GammaArgs(z0, z1)
    if z1 == z0:
        return 0.0
    if z1 - z0 <= CANCELLATION_GUARD * z0:
        if z0 > _E1_ZERO_BEYOND:
            return 0.0
        return math.exp(-z0) * _shifted_quadrature(z0, z1)
    if z0 <= 1.0:
        return _e1_series(z0) - (exp_integral_e1(z1) if math.isfinite(z1) else 0.0)
    if z0 > _E1_ZERO_BEYOND:
        return 0.0
    return math.exp(-z0) * scaled_gen_gamma0(z0, z1)
