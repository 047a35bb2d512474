"""MGF, moments, limiting moments, and the mean-square distance.

Every 1/xi and 1/xi^2 prefactor is folded into

    phi1(u) = (1 - e^{-u}) / u,   phi2(u) = (1 - e^{-u}(1 + u)) / u^2,   u = xi t,

so the reset formulas stay accurate down to xi ~ 1e-12. Products
e^{a} Gamma(0, a, b) go through ``scaled_gen_gamma0``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ..errors import DomainError, NoStationaryLawError
from ..params import MotionParams, VelocityRegime, check_index, reflect
from ..quadrature import integrate_piecewise
from ..specfun import scaled_e1, scaled_gen_gamma0
from .kernels import breakpoints, check_time

_GL8_NODES = (-0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
              0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363)
_GL8_WEIGHTS = (0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
                0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763)


def phi1(u: float) -> float:
    if u == 0:
        return 1.0
    return -math.expm1(-u) / u


def phi2(u: float) -> float:
    if u < 0.5:
        # sum_{k>=2} (-1)^k (k-1) u^{k-2} / k!
        total, term, k = 0.0, 0.5, 2
        while True:
            contrib = (k - 1) * term
            total += contrib
            if abs(contrib) < 1e-17 * abs(total):
                return total
            k += 1
            term *= -u / k
    return (1.0 - math.exp(-u) * (1.0 + u)) / (u * u)


def _q_gamma(t: float, p: MotionParams) -> float:
    # e^{xi/lam} Gamma(0, xi/lam, xi/lam (1 + lam t))
    a = p.xi / p.lam
    return scaled_gen_gamma0(a, a * (1.0 + p.lam * t)) if t > 0 else 0.0


def _shape(j: int, p: MotionParams) -> tuple[float, float, float, float]:
    # (v_j, v_{3-j}, S, B) with S = v1^2 + v1 v2 + v2^2 and B = 2 v_j^2 - v1 v2 - v_{3-j}^2
    vj, vk = p.velocity(j), p.velocity(3 - j)
    s = p.v1 * p.v1 + p.v1 * p.v2 + p.v2 * p.v2
    b = 2.0 * vj * vj - p.v1 * p.v2 - vk * vk
    return vj, vk, s, b


def _prepare(t: float, j: int, p: MotionParams) -> tuple[MotionParams, int, float]:
    check_index(j)
    check_time(t, allow_zero=True)
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        return reflect(p, j)
    return p, j, 1.0


# reset-free process


def noreset_mean(t: float, j: int, p: MotionParams) -> float:
    """Mean of the reset-free position started from v_j."""
    check_index(j)
    check_time(t, allow_zero=True)
    vj, vk = p.velocity(j), p.velocity(3 - j)
    return 0.5 * (p.v1 + p.v2) * t + (vj - vk) * t / (2.0 * (1.0 + p.lam * t))


def noreset_second_moment(t: float, j: int, p: MotionParams) -> float:
    """Second moment of the reset-free position started from v_j."""
    check_index(j)
    check_time(t, allow_zero=True)
    vj, _, s, _ = _shape(j, p)
    lt = p.lam * t
    return t * t * (3.0 * vj * vj + lt * s) / (3.0 * (1.0 + lt))


def noreset_variance(t: float, p: MotionParams) -> float:
    """Variance of the reset-free position; the same for both starting velocities."""
    check_time(t, allow_zero=True)
    lt = p.lam * t
    return lt * t * t * (4.0 + lt) * p.spread**2 / (12.0 * (1.0 + lt) ** 2)


# reset process


def _mean_closed(t: float, j: int, p: MotionParams) -> float:
    # valid as written for every sign pattern of the velocities
    lam, xi = p.lam, p.xi
    vj, vk = p.velocity(j), p.velocity(3 - j)
    u = xi * t
    diff = vj - vk
    value = 0.5 * (p.v1 + p.v2) * t * phi1(u)
    value += diff / (2.0 * lam) * (-math.expm1(-u))
    value -= xi * diff / (2.0 * lam * lam) * _q_gamma(t, p)
    value += t * math.exp(-u) * diff / (2.0 * (1.0 + lam * t))
    return value


def mean(t: float, j: int, p: MotionParams) -> float:
    """E_j[X(t)] for the process with resets, started from v_j."""
    q, jj, sign = _prepare(t, j, p)
    if q.xi == 0:
        return sign * noreset_mean(t, jj, q)
    return sign * _mean_closed(t, jj, q)


def _second_closed(t: float, j: int, p: MotionParams) -> float:
    lam, xi = p.lam, p.xi
    _, _, s, b = _shape(j, p)
    u = xi * t
    value = 2.0 * s * t * t / 3.0 * phi2(u)
    value += b * t * t / 3.0 * (xi / lam * phi2(u) + math.exp(-u) / (1.0 + lam * t))
    value += b * xi / (3.0 * lam * lam) * (_q_gamma(t, p) / lam - t * phi1(u))
    return value


def second_moment(t: float, j: int, p: MotionParams) -> float:
    """E_j[X(t)^2] for the process with resets, started from v_j."""
    q, jj, _ = _prepare(t, j, p)
    if q.xi == 0:
        return noreset_second_moment(t, jj, q)
    return _second_closed(t, jj, q)


def variance(t: float, j: int, p: MotionParams) -> float:
    """Var_j[X(t)].

    With resets and v1 != -v2 the variance depends on the starting velocity,
    so ``j`` is required; it drops out when xi = 0 or v1 = -v2.
    """
    return max(second_moment(t, j, p) - mean(t, j, p) ** 2, 0.0)


@dataclass(frozen=True)
class MomentSet:
    mean: float
    second: float
    variance: float


def moments(t: float, j: int, p: MotionParams) -> MomentSet:
    m, s = mean(t, j, p), second_moment(t, j, p)
    return MomentSet(mean=m, second=s, variance=max(s - m * m, 0.0))


# limiting forms


def mean_lambda_inf(t: float, p: MotionParams) -> float:
    """Mean in the infinite-switching limit; independent of the start."""
    check_time(t, allow_zero=True)
    return 0.5 * (p.v1 + p.v2) * t * phi1(p.xi * t)


def second_lambda_inf(t: float, p: MotionParams) -> float:
    check_time(t, allow_zero=True)
    _, _, s, _ = _shape(1, p)
    return 2.0 * s * t * t / 3.0 * phi2(p.xi * t)


def _require_resets(p: MotionParams) -> None:
    if p.xi == 0:
        raise NoStationaryLawError("long-time moments need xi > 0")


def mean_t_inf(j: int, p: MotionParams) -> float:
    """Long-time limit of E_j[X(t)]."""
    check_index(j)
    _require_resets(p)
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        q, jj, sign = reflect(p, j)
        return sign * mean_t_inf(jj, q)
    lam, xi = p.lam, p.xi
    diff = p.velocity(j) - p.velocity(3 - j)
    return (p.v1 + p.v2) / (2.0 * xi) + diff / (2.0 * lam) - xi * diff / (2.0 * lam * lam) * scaled_e1(xi / lam)


def second_t_inf(j: int, p: MotionParams) -> float:
    """Long-time limit of E_j[X(t)^2]."""
    check_index(j)
    _require_resets(p)
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        q, jj, _ = reflect(p, j)
        return second_t_inf(jj, q)
    lam, xi = p.lam, p.xi
    _, _, s, b = _shape(j, p)
    return 2.0 * s / (3.0 * xi * xi) + b / (3.0 * lam) * (1.0 / xi - 1.0 / lam) + xi * b / (3.0 * lam**3) * scaled_e1(xi / lam)


def variance_t_inf(j: int, p: MotionParams) -> float:
    return second_t_inf(j, p) - mean_t_inf(j, p) ** 2


@dataclass(frozen=True)
class MomentLimits:
    """Limits of the first two moments; long-time entries are None when xi = 0."""

    t: float
    lambda_inf_mean: float
    lambda_inf_second: float
    xi_zero_mean: float
    xi_zero_second: float
    xi_inf_mean: float
    xi_inf_second: float
    t_inf_mean: float | None
    t_inf_second: float | None
    t_inf_variance: float | None


def moment_limits(p: MotionParams, j: int, t: float) -> MomentLimits:
    """Limiting moments at time t (lambda -> inf, xi -> 0, xi -> inf) and as t -> inf."""
    check_index(j)
    check_time(t, allow_zero=True)
    resets = p.xi > 0
    return MomentLimits(
        t=t,
        lambda_inf_mean=mean_lambda_inf(t, p),
        lambda_inf_second=second_lambda_inf(t, p),
        xi_zero_mean=noreset_mean(t, j, p),
        xi_zero_second=noreset_second_moment(t, j, p),
        xi_inf_mean=0.0,
        xi_inf_second=0.0,
        t_inf_mean=mean_t_inf(j, p) if resets else None,
        t_inf_second=second_t_inf(j, p) if resets else None,
        t_inf_variance=variance_t_inf(j, p) if resets else None,
    )


# moment generating function


def _in_closed_form_domain(z: float, p: MotionParams) -> bool:
    # both Gamma lower limits (xi - v_k z)/lam must be positive
    return p.xi - p.v1 * z > 0 and p.xi - p.v2 * z > 0


def _f_gamma(a: float, lt: float) -> float:
    # F(a) = e^{a} Gamma(0, a, a (1 + lam t))
    return scaled_gen_gamma0(a, a * (1.0 + lt))


def _f_gamma_prime(a: float, lt: float) -> float:
    return _f_gamma(a, lt) + math.expm1(-a * lt) / a


def _f_divided_difference(a1: float, a2: float, lt: float) -> float:
    lo, hi = min(a1, a2), max(a1, a2)
    if hi - lo > 0.25 * lo:
        return (_f_gamma(a1, lt) - _f_gamma(a2, lt)) / (a1 - a2)
    if hi == lo:
        return _f_gamma_prime(lo, lt)
    mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
    acc = sum(w * _f_gamma_prime(mid + half * x, lt) for x, w in zip(_GL8_NODES, _GL8_WEIGHTS))
    return 0.5 * acc


def _exp_difference_over_z(z: float, t: float, p: MotionParams) -> float:
    # (e^{v1 z t} - e^{v2 z t}) / z
    if z == 0:
        return p.spread * t
    return math.exp(p.v2 * z * t) * math.expm1(p.spread * z * t) / z


def _mgf_closed(z: float, t: float, j: int, p: MotionParams) -> float:
    lam, xi = p.lam, p.xi
    lt = lam * t
    value = math.exp((p.velocity(j) * z - xi) * t) / (1.0 + lt)
    value += lam * math.exp(-xi * t) / (p.spread * (1.0 + lt)) * _exp_difference_over_z(z, t, p)
    if xi == 0:
        return value
    a = [(xi - p.v1 * z) / lam, (xi - p.v2 * z) / lam]
    value += xi / lam * _f_gamma(a[j - 1], lt)
    value -= xi / lam * _f_divided_difference(a[0], a[1], lt)
    return value


def mgf_quadrature(z: float, t: float, j: int, p: MotionParams) -> float:
    """E_j[exp(z X(t))] by quadrature of the density plus the atom."""
    from .density import _pdf_fixed, atom_mass

    check_index(j)
    check_time(t)
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        q, jj, _ = reflect(p, j)
        return mgf_quadrature(-z, t, jj, q)
    vj = p.velocity(j)
    atom = atom_mass(j, t, p) * math.exp(z * vj * t)
    body = integrate_piecewise(lambda x: math.exp(z * x) * _pdf_fixed(x, t, j, p), breakpoints(t, p),
                               max_error=1e-9 * max(1.0, atom))
    return body + atom


def mgf(z: float, t: float, j: int, p: MotionParams) -> float:
    """Moment generating function E_j[exp(z X(t))].

    The closed form is used where both incomplete-gamma lower limits are
    positive (and for every z when xi = 0); elsewhere it falls back to
    quadrature, which always exists since the support is bounded.
    """
    check_index(j)
    check_time(t)
    if not math.isfinite(z):
        raise DomainError(f"z must be finite, got {z}")
    if p.regime is VelocityRegime.BOTH_NEGATIVE:
        q, jj, _ = reflect(p, j)
        return mgf(-z, t, jj, q)
    if p.xi == 0 or _in_closed_form_domain(z, p):
        return _mgf_closed(z, t, j, p)
    return mgf_quadrature(z, t, j, p)


# extremes of the mean


class ExtremumKind(enum.Enum):
    MAX = "max"
    MIN = "min"


@dataclass(frozen=True)
class Extremum:
    t: float
    kind: ExtremumKind


def mean_extremum(p: MotionParams, j: int) -> Extremum | None:
    """Interior extremum in t of E_j[X(t)] for straddling velocities, if any.

    Started from v1 the mean peaks when v1 < -v2; started from v2 it has a
    trough when -v2 < v1. The location does not depend on xi.
    """
    check_index(j)
    if p.regime is not VelocityRegime.STRADDLING:
        return None
    v1, v2, lam = p.v1, p.v2, p.lam
    if j == 1 and v1 < -v2:
        return Extremum(-(1.0 + math.sqrt(v2 * v2 - v1 * v1) / (v1 + v2)) / lam, ExtremumKind.MAX)
    if j == 2 and -v2 < v1:
        return Extremum(-(1.0 - math.sqrt(v1 * v1 - v2 * v2) / (v1 + v2)) / lam, ExtremumKind.MIN)
    return None


# mean-square distance between the reset and reset-free processes


def mean_square_distance(xi: float, t: float, j: int, p: MotionParams) -> float:
    """E_j|X_xi(t) - X_0(t)|^2 for independent copies, as a function of the reset rate.

    ``p.xi`` is ignored; ``xi`` sets the rate of the reset copy.
    """
    if not (math.isfinite(xi) and xi >= 0):
        raise DomainError(f"xi must be finite and nonnegative, got {xi}")
    check_index(j)
    check_time(t, allow_zero=True)
    q = MotionParams(p.lam, xi, p.v1, p.v2)
    if q.regime is VelocityRegime.BOTH_NEGATIVE:
        q, j, _ = reflect(q, j)
    if xi == 0:
        return 2.0 * noreset_variance(t, q)
    return noreset_second_moment(t, j, q) + _msd_excess(t, j, q)


def _msd_excess(t: float, j: int, p: MotionParams) -> float:
    # A_j: E_j[X_xi^2] - 2 E_j[X_xi] E_j[X_0], grouped so that no 1/xi survives
    lam, xi = p.lam, p.xi
    vj, vk, s, b = _shape(j, p)
    u, lt = xi * t, lam * t
    diff = vj - vk
    g = _q_gamma(t, p)
    two_mu0 = t * (2.0 * vj + lt * (p.v1 + p.v2)) / (1.0 + lt)
    quad = 2.0 * s * t * t / 3.0 * phi2(u)
    quad += b * t * t / 3.0 * (xi / lam * phi2(u) + math.exp(-u) / (1.0 + lt))
    quad += b * xi / (3.0 * lam * lam) * (g / lam - t * phi1(u))
    cross = t * math.exp(-u) * diff / (1.0 + lt)
    cross += -math.expm1(-u) * diff / lam + (p.v1 + p.v2) * t * phi1(u)
    cross -= xi * diff / (lam * lam) * g
    return quad - 0.5 * two_mu0 * cross


def mean_square_distance_from_moments(xi: float, t: float, j: int, p: MotionParams) -> float:
    """The same distance assembled from the marginal moments of both processes."""
    q = MotionParams(p.lam, xi, p.v1, p.v2)
    m_reset, m_free = mean(t, j, q), noreset_mean(t, j, q)
    return second_moment(t, j, q) + noreset_second_moment(t, j, q) - 2.0 * m_reset * m_free

