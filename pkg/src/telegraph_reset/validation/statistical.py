"""Monte Carlo against the closed forms, with k-standard-error gates."""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable

import numpy as np
from scipy import integrate, stats

from .. import law
from ..montecarlo import SampleArrays, SimConfig, run_batch, simulate_samples
from ..params import MotionParams, VelocityStart
from ..quadrature import integrate_piecewise
from .report import CheckReport

SE_GATE = 4.0
CHI2_LEVEL = 0.99
N_BINS = 40
MIN_EXPECTED = 5.0

SUITES = frozenset({"moments", "atom", "density", "subdensity", "resets"})


def _tag(p: MotionParams, start: VelocityStart, t: float) -> str:
    return f"lam={p.lam:g},xi={p.xi:g},v=({p.v1:g},{p.v2:g}),{start.label()},t={t:g}"


def _gate(check_id: str, target: float, estimate: float, se: float, detail: str = "") -> CheckReport:
    return CheckReport.compare(check_id, target, estimate, SE_GATE * se, detail or f"se={se:.3g}")


def bin_masses(f: Callable[[float], float], edges: np.ndarray, marks: Iterable[float]) -> np.ndarray:
    """Integral of f over each bin, splitting at any breakpoint inside it."""
    marks = list(marks)
    out = np.empty(edges.shape[0] - 1)
    for k, (a, b) in enumerate(zip(edges[:-1], edges[1:])):
        pts = [a, b] + [m for m in marks if a < m < b]
        out[k] = integrate_piecewise(f, pts, max_error=1e-7)
    return out


def chi_square(observed: np.ndarray, expected: np.ndarray, rest_observed: float, rest_expected: float) -> tuple[float, int]:
    """Pearson statistic over bins plus a rest cell; bins below MIN_EXPECTED merge into it."""
    small = expected < MIN_EXPECTED
    rest_o = rest_observed + float(observed[small].sum())
    rest_e = rest_expected + float(expected[small].sum())
    o, e = observed[~small].astype(np.float64), expected[~small]
    stat = float(np.sum((o - e) ** 2 / e))
    cells = o.shape[0]
    if rest_e >= MIN_EXPECTED:
        stat += (rest_o - rest_e) ** 2 / rest_e
        cells += 1
    elif rest_o > 0 and rest_e == 0:
        return math.inf, max(cells - 1, 1)
    return stat, max(cells - 1, 1)


def _density_chi2(check_id: str, samples: SampleArrays, f: Callable[[float], float], t: float,
                  p: MotionParams, atom_prob: float, velocity: int | None) -> CheckReport:
    n = len(samples)
    lo, hi = law.support(t, p)
    edges = np.linspace(lo, hi, N_BINS + 1)
    probs = bin_masses(f, edges, law.breakpoints(t, p))
    keep = ~samples.atom
    if velocity is not None:
        keep &= samples.velocity == velocity
    observed, _ = np.histogram(samples.position[keep], bins=edges)
    rest_o = float(n - observed.sum())
    rest_e = n * max(1.0 - probs.sum(), 0.0)
    stat, df = chi_square(observed, n * probs, rest_o, rest_e)
    crit = float(stats.chi2.ppf(CHI2_LEVEL, df))
    return CheckReport.upper_bound(check_id, stat, crit, f"df={df}, atom_prob={atom_prob:.6g}")


def check_mc_agreement(p: MotionParams, start: VelocityStart, cfg: SimConfig,
                       suite: Iterable[str] = SUITES) -> list[CheckReport]:
    """Compare one simulated batch with the closed-form laws at the horizon."""
    suite = set(suite)
    unknown = suite - SUITES
    if unknown:
        raise ValueError(f"unknown check groups: {sorted(unknown)}")
    t = cfg.horizon_t
    batch = run_batch(p, start, cfg)
    tag = _tag(p, start, t)
    weights = [(j, start.weight(j)) for j in (1, 2) if start.weight(j)]
    reports: list[CheckReport] = []
    if "moments" in suite:
        mean = sum(w * law.mean(t, j, p) for j, w in weights)
        second = sum(w * law.second_moment(t, j, p) for j, w in weights)
        reports.append(_gate(f"mc-mean[{tag}]", mean, batch.mean.value, batch.mean.se))
        reports.append(_gate(f"mc-second[{tag}]", second, batch.second.value, batch.second.se))
    if "atom" in suite:
        mass = law.atom_mass(1, t, p)
        se = math.sqrt(mass * (1.0 - mass) / batch.n_paths)
        reports.append(_gate(f"mc-atom[{tag}]", mass, batch.atom_freq.value, se, f"binomial se={se:.3g}"))
    if "resets" in suite and p.xi > 0:
        # dispersion index of Poisson counts: approx normal with se sqrt(2/(n-1))
        se = math.sqrt(2.0 / (batch.n_paths - 1))
        reports.append(_gate(f"mc-reset-dispersion[{tag}]", 1.0, batch.reset_dispersion, se))
    if "density" in suite:
        f = lambda x: law.pdf_ac(x, t, start, p)  # noqa: E731
        reports.append(_density_chi2(f"mc-density-chi2[{tag}]", batch.samples, f, t, p, law.atom_mass(1, t, p), None))
    if "subdensity" in suite:
        for i in (1, 2):
            f = lambda x, i=i: sum(w * law.subdensity_ac(i, j, x, t, p) for j, w in weights)  # noqa: E731
            reports.append(_density_chi2(f"mc-subdensity-chi2[{tag},i={i}]", batch.samples, f, t, p, 0.0, i))
    return reports


def check_mc_stationary(p: MotionParams, j: int, cfg: SimConfig) -> CheckReport:
    """Positions at a long horizon against the stationary law, with two tail cells."""
    samples = simulate_samples(p, VelocityStart.fixed(j), cfg)
    n = len(samples)
    span = 6.0 * max(abs(p.v1), abs(p.v2)) / p.xi
    lo = max(-span, min(p.v2, 0.0) * cfg.horizon_t)
    hi = min(span, p.v1 * cfg.horizon_t)
    edges = np.linspace(lo, hi, N_BINS + 1)
    f = lambda x: law.stationary_pdf(x, j, p)  # noqa: E731
    probs = bin_masses(f, edges, [0.0])
    observed, _ = np.histogram(samples.position, bins=edges)
    left = integrate.quad(f, -math.inf, lo, limit=400)[0] if lo < 0 else 0.0
    right = integrate.quad(f, hi, math.inf, limit=400)[0]
    exp_tails = np.array([left, right]) * n
    obs_tails = np.array([np.count_nonzero(samples.position < lo), np.count_nonzero(samples.position > hi)])
    o = np.concatenate([observed, obs_tails])
    e = np.concatenate([n * probs, exp_tails])
    stat, df = chi_square(o, e, 0.0, 0.0)
    crit = float(stats.chi2.ppf(CHI2_LEVEL, df))
    tag = _tag(p, VelocityStart.fixed(j), cfg.horizon_t)
    return CheckReport.upper_bound(f"mc-stationary-chi2[{tag}]", stat, crit, f"df={df}")


def _msd_estimate(reset: SampleArrays, free: SampleArrays) -> tuple[float, float]:
    # E X_r^2 + E X_0^2 - 2 E X_r E X_0 from independent batches, delta-method se
    xr, x0 = reset.position, free.position
    mr, m0 = float(xr.mean()), float(x0.mean())
    value = float((xr * xr).mean() + (x0 * x0).mean() - 2.0 * mr * m0)
    g = xr * xr - 2.0 * m0 * xr
    h = x0 * x0 - 2.0 * mr * x0
    se = math.sqrt(float(g.var(ddof=1)) / xr.shape[0] + float(h.var(ddof=1)) / x0.shape[0])
    return value, se


def check_mc_msd(p: MotionParams, j: int, cfg: SimConfig) -> CheckReport:
    """Mean-square distance from two independent batches (with and without resets)."""
    start = VelocityStart.fixed(j)
    reset = simulate_samples(p, start, cfg)
    free_cfg = SimConfig(cfg.horizon_t, cfg.n_paths, (cfg.seed + 1) & ((1 << 64) - 1), cfg.workers)
    free = simulate_samples(MotionParams(p.lam, 0.0, p.v1, p.v2), start, free_cfg)
    value, se = _msd_estimate(reset, free)
    target = law.mean_square_distance(p.xi, cfg.horizon_t, j, p)
    return _gate(f"mc-msd[{_tag(p, start, cfg.horizon_t)}]", target, value, se)


def check_mc_noreset(p: MotionParams, j: int, cfg: SimConfig) -> list[CheckReport]:
    """Reset-free batch against the reset-free moments and variance."""
    q = MotionParams(p.lam, 0.0, p.v1, p.v2)
    start = VelocityStart.fixed(j)
    x = simulate_samples(q, start, cfg).position
    n = x.shape[0]
    t = cfg.horizon_t
    tag = _tag(q, start, t)
    m = float(x.mean())
    centered = (x - m) ** 2
    return [
        _gate(f"mc-noreset-mean[{tag}]", law.noreset_mean(t, j, q), m, float(x.std(ddof=1)) / math.sqrt(n)),
        _gate(f"mc-noreset-second[{tag}]", law.noreset_second_moment(t, j, q), float((x * x).mean()),
              float((x * x).std(ddof=1)) / math.sqrt(n)),
        _gate(f"mc-noreset-variance[{tag}]", law.noreset_variance(t, q), float(centered.mean()) * n / (n - 1),
              float(centered.std(ddof=1)) / math.sqrt(n)),
    ]
