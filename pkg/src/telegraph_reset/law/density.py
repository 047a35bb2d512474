"""Unconditional density, flow, and limiting laws of the reset process."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DomainError, NoStationaryLawError, SingularPointError
from ..params import MotionParams, VelocityRegime, VelocityStart, check_index, reflect
from ..specfun import scaled_e1, scaled_gen_gamma0
from .kernels import (
    ballistic,
    check_in_support,
    check_time,
    in_diffusion_interval,
    indicator_I,
    m_x,
    m_xt,
    scaled_gamma_xt,
    tau,
    theta,
)
from .subdensity import subdensity_ac


@dataclass(frozen=True)
class LawValue:
    """Law of X(t) at a point: density ``ac``, point mass ``atom``, and the
    split of ``ac`` by current velocity (``by_velocity[0]`` is v1)."""

    ac: float
    atom: float
    by_velocity: tuple[float, float]


@dataclass(frozen=True)
class FlowValue:
    """Probability flow w = p~_1 - p~_2 at a point; ``atom`` is signed."""

    ac: float
    atom: float


def atom_mass(j: int, t: float, p: MotionParams) -> float:
    """Probability that the path started from v_j never reset and never switched."""
    check_index(j)
    check_time(t, allow_zero=True)
    return math.exp(-p.xi * t) / (1.0 + p.lam * t)


def _pdf_fixed(x: float, t: float, j: int, p: MotionParams) -> float:
    # sum of the two sub-densities, in a form with a single Theta/Gamma evaluation
    lam, xi, d = p.lam, p.xi, p.v1 - p.v2
    value = 0.0
    if in_diffusion_interval(x, t, p):
        value += math.exp(-xi * t) * lam / (d * (1.0 + lam * t))
    if xi == 0:
        return value
    value += ballistic(x, t, p.velocity(j), p)
    if indicator_I(x, t, p):
        value += xi / d * scaled_gamma_xt(x, t, p)
    return value


def _atom_at(x: float, t: float, start: VelocityStart, p: MotionParams) -> float:
    mass = atom_mass(1, t, p)
    return mass * sum(start.weight(j) for j in (1, 2) if x == p.velocity(j) * t)


def pdf_ac(x: float, t: float, start: VelocityStart, p: MotionParams) -> float:
    """Absolutely continuous part of the density only; cheaper than :func:`pdf`."""
    check_time(t)
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        q, _, _ = reflect(p, 1)
        return pdf_ac(-x, t, start.reflected(), q)
    check_in_support(x, t, p)
    return sum(start.weight(j) * _pdf_fixed(x, t, j, p) for j in (1, 2) if start.weight(j))


def pdf(x: float, t: float, start: VelocityStart, p: MotionParams) -> LawValue:
    """Law of X(t) at x for a fixed or random initial velocity."""
    check_time(t)
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        q, _, _ = reflect(p, 1)
        mirrored = pdf(-x, t, start.reflected(), q)
        return LawValue(mirrored.ac, mirrored.atom, mirrored.by_velocity[::-1])
    check_in_support(x, t, p)
    ac = 0.0
    split = [0.0, 0.0]
    for j in (1, 2):
        w = start.weight(j)
        if w == 0:
            continue
        ac += w * _pdf_fixed(x, t, j, p)
        for i in (1, 2):
            split[i - 1] += w * subdensity_ac(i, j, x, t, p)
    return LawValue(ac=ac, atom=_atom_at(x, t, start, p), by_velocity=(split[0], split[1]))


def _flow_closed(x: float, t: float, j: int, p: MotionParams) -> float:
    # assembled directly, not as a difference of the sub-densities
    lam, xi, d = p.lam, p.xi, p.v1 - p.v2
    vk = p.velocity(3 - j)
    value = 0.0
    if in_diffusion_interval(x, t, p):
        parity = -1.0 if j == 1 else 1.0
        tilt = lam * (2.0 * tau(x, t, p) - t) + parity
        value += lam * math.exp(-xi * t) * tilt / (d * (1.0 + lam * t) ** 2)
    if xi == 0:
        return value
    sign = 1.0 if j == 1 else -1.0
    value += sign * ballistic(x, t, p.velocity(j), p)
    if indicator_I(x, t, p):
        value += 2.0 * xi * (vk + lam * x) / d**2 * theta(x, t, p)
        weight = 2.0 * xi * x + 2.0 * vk * xi / lam + p.v1 + p.v2
        value -= xi / d**2 * weight * scaled_gamma_xt(x, t, p)
    return value


def flow(x: float, t: float, j: int, p: MotionParams) -> FlowValue:
    """Flow p~_1 - p~_2 at x, plus the signed atom at x = v_j t."""
    check_index(j)
    check_time(t)
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        q, j_ref, _ = reflect(p, j)
        mirrored = flow(-x, t, j_ref, q)
        return FlowValue(-mirrored.ac, -mirrored.atom)
    check_in_support(x, t, p)
    atom = 0.0
    if x == p.velocity(j) * t:
        atom = (1.0 if j == 1 else -1.0) * atom_mass(j, t, p)
    return FlowValue(ac=_flow_closed(x, t, j, p), atom=atom)


def pdf_lambda_inf(x: float, t: float, p: MotionParams) -> float:
    """Density of X(t) in the limit of infinitely frequent velocity switching.

    The limit does not depend on the initial velocity and has no atom.
    """
    check_time(t)
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        q, _, _ = reflect(p, 1)
        return pdf_lambda_inf(-x, t, q)
    check_in_support(x, t, p)
    xi, d = p.xi, p.v1 - p.v2
    value = 0.0
    if in_diffusion_interval(x, t, p):
        value += math.exp(-xi * t) / (d * t)
    if xi == 0 or not indicator_I(x, t, p):
        return value
    if p.regime is VelocityRegime.STRADDLING:
        if x == 0:
            raise SingularPointError("the infinite-switching density has a log singularity at x = 0")
        lo, hi = m_x(x, p), t
    else:
        if x == 0:
            # right limit: Gamma(0, eps xi / v1, eps xi / v2) -> ln(v1 / v2)
            return value + xi * math.log(p.v1 / p.v2) / d
        lo, hi = x / p.v1, m_xt(x, t, p)
    if lo < hi:
        value += xi / d * math.exp(-xi * lo) * scaled_gen_gamma0(xi * lo, xi * hi)
    return value


def pdf_random_lambda_inf(x: float, t: float, q: float, p: MotionParams) -> float:
    """Infinite-switching density for a random start; identical for every q."""
    VelocityStart.random(q)
    return pdf_lambda_inf(x, t, p)


def _stationary_shared(x: float, p: MotionParams) -> float:
    lam, xi, d = p.lam, p.xi, p.v1 - p.v2
    if p.regime is VelocityRegime.STRADDLING:
        lo = m_x(x, p)
        return xi / d * math.exp(-xi * lo) * scaled_e1((lo + 1.0 / lam) * xi)
    if x < 0:
        return 0.0
    lo, hi = x / p.v1, x / p.v2
    return xi / d * math.exp(-xi * lo) * scaled_gen_gamma0((lo + 1.0 / lam) * xi, (hi + 1.0 / lam) * xi)


def _check_stationary(x: float, p: MotionParams) -> None:
    if p.xi == 0:
        raise NoStationaryLawError("without resets the process has no stationary law")
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x}")


def stationary_pdf(x: float, j: int, p: MotionParams) -> float:
    """Density of the stationary law reached as t -> inf, starting from v_j."""
    check_index(j)
    _check_stationary(x, p)
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        q, j_ref, _ = reflect(p, j)
        return stationary_pdf(-x, j_ref, q)
    return ballistic(x, math.inf, p.velocity(j), p) + _stationary_shared(x, p)


def pdf_random_stationary(x: float, q: float, p: MotionParams) -> float:
    """Stationary density for a random start, v1 with probability q."""
    start = VelocityStart.random(q)
    _check_stationary(x, p)
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        mirrored, _, _ = reflect(p, 1)
        return pdf_random_stationary(-x, 1.0 - q, mirrored)
    value = _stationary_shared(x, p)
    for j in (1, 2):
        if start.weight(j):
            value += start.weight(j) * ballistic(x, math.inf, p.velocity(j), p)
    return value


__all__ = [
    "FlowValue",
    "LawValue",
    "atom_mass",
    "flow",
    "pdf",
    "pdf_ac",
    "pdf_lambda_inf",
    "pdf_random_lambda_inf",
    "pdf_random_stationary",
    "stationary_pdf",
]
