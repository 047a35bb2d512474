"""Velocity sub-densities, with and without resets."""

from __future__ import annotations

import math

from ..errors import OutOfSupportError
from ..params import MotionParams, VelocityRegime, check_index, reflect
from .kernels import (
    ballistic,
    check_in_support,
    check_time,
    in_diffusion_interval,
    indicator_I,
    scaled_gamma_xt,
    tau,
    theta,
)


def _c_entry(i: int, j: int, tau_: float, t: float, lam: float) -> float:
    s = t - tau_
    if i == 1:
        return lam * tau_ if j == 1 else 1.0 + lam * tau_
    return 1.0 + lam * s if j == 1 else lam * s


def _noreset(i: int, j: int, x: float, t: float, p: MotionParams) -> float:
    tau_ = tau(x, t, p)
    return p.lam * _c_entry(i, j, tau_, t, p.lam) / ((p.v1 - p.v2) * (1.0 + p.lam * t) ** 2)


def noreset_subdensity(i: int, j: int, x: float, t: float, p: MotionParams) -> float:
    """Sub-density p_i(x, t | v_j) of the reset-free process for v2 t < x < v1 t."""
    check_index(i)
    check_index(j)
    check_time(t)
    if not p.v2 * t < x < p.v1 * t:
        raise OutOfSupportError(f"x={x} outside ({p.v2 * t}, {p.v1 * t})")
    return _noreset(i, j, x, t, p)


def _same_velocity(j: int, x: float, t: float, p: MotionParams) -> float:
    # density of ending with the starting velocity v_j, absolutely continuous part
    lam, xi, d = p.lam, p.xi, p.v1 - p.v2
    vk = p.velocity(3 - j)
    value = 0.0
    if in_diffusion_interval(x, t, p):
        tau_ = tau(x, t, p)
        weight = tau_ if j == 1 else t - tau_
        value += math.exp(-xi * t) * lam * lam * weight / (d * (1.0 + lam * t) ** 2)
    if xi == 0:
        return value
    value += ballistic(x, t, p.velocity(j), p)
    if indicator_I(x, t, p):
        sign = 1.0 if j == 1 else -1.0
        value += sign * xi * (vk + lam * x) / d**2 * theta(x, t, p)
        value -= sign * xi / d**2 * (vk * (lam + xi) / lam + x * xi) * scaled_gamma_xt(x, t, p)
    return value


def _other_velocity(j: int, x: float, t: float, p: MotionParams) -> float:
    # density of ending with v_{3-j} after starting from v_j
    lam, xi, d = p.lam, p.xi, p.v1 - p.v2
    vj, vk = p.velocity(j), p.velocity(3 - j)
    value = 0.0
    if in_diffusion_interval(x, t, p):
        tau_ = tau(x, t, p)
        weight = t - tau_ if j == 1 else tau_
        value += math.exp(-xi * t) * lam * (1.0 + lam * weight) / (d * (1.0 + lam * t) ** 2)
    if xi == 0:
        return value
    if indicator_I(x, t, p):
        sign = -1.0 if j == 1 else 1.0
        value += sign * xi * (vk + lam * x) / d**2 * theta(x, t, p)
        value -= sign * xi / d**2 * (vj * (lam + xi) / lam + x * xi + sign * xi * d / lam) * scaled_gamma_xt(x, t, p)
    return value


def subdensity_ac(i: int, j: int, x: float, t: float, p: MotionParams) -> float:
    """Absolutely continuous part of the sub-density p~_i(x, t | v_j)."""
    check_index(i)
    check_index(j)
    check_time(t)
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        q, j_ref, _ = reflect(p, j)
        return subdensity_ac(3 - i, j_ref, -x, t, q)
    check_in_support(x, t, p)
    return _same_velocity(j, x, t, p) if i == j else _other_velocity(j, x, t, p)


def subdensity(i: int, j: int, x: float, t: float, p: MotionParams):
    """Sub-density p~_i(x, t | v_j) as a :class:`LawValue`.

    Only velocity ``i`` is populated in ``by_velocity``; the atom is non-zero
    only for ``i == j`` at ``x == v_j t``.
    """
    from .density import LawValue, atom_mass

    ac = subdensity_ac(i, j, x, t, p)
    atom = atom_mass(j, t, p) if i == j and x == p.velocity(j) * t else 0.0
    split = (ac, 0.0) if i == 1 else (0.0, ac)
    return LawValue(ac=ac, atom=atom, by_velocity=split)
