"""The fast and full validation suites."""

from __future__ import annotations

from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor

from ..montecarlo import SimConfig
from ..params import MotionParams, VelocityStart
from . import analytic as A
from . import statistical as S
from .report import CheckReport, sort_reports

DEFAULT_SEED = 20240601

STRADDLING = MotionParams(1.0, 2.0, 1.0, -1.0)
ASYMMETRIC = MotionParams(1.0, 2.0, 2.0, -4.0)
POSITIVE = MotionParams(1.0, 2.0, 4.0, 2.0)
NEGATIVE = MotionParams(1.3, 0.8, -1.0, -2.0)

Job = Callable[[], list[CheckReport]]


def _with_xi(p: MotionParams, xi: float) -> MotionParams:
    return MotionParams(p.lam, xi, p.v1, p.v2)


def _analytic_jobs(xis: tuple[float, ...], ts: tuple[float, ...]) -> list[Job]:
    starts = (VelocityStart.fixed(1), VelocityStart.fixed(2), VelocityStart.random(0.3))
    jobs: list[Job] = []
    for base in (STRADDLING, POSITIVE):
        for xi in xis:
            p = _with_xi(base, xi)
            for start in starts:
                for t in ts:
                    jobs.append(lambda p=p, s=start, t=t: A.guarded(A.check_normalization, p, s, t))
    for p in (STRADDLING, ASYMMETRIC, POSITIVE, _with_xi(ASYMMETRIC, 0.0)):
        for j in (1, 2):
            jobs.append(lambda p=p, j=j: A.guarded(A.check_decomposition, p, j, 1.5))
            jobs.append(lambda p=p, j=j: A.guarded(A.check_flow_identity, p, j, 1.5))
            jobs.append(lambda p=p, j=j: A.guarded(A.check_mgf_moments, p, j, 1.0))
    for p in (ASYMMETRIC, POSITIVE):
        for j in (1, 2):
            jobs.append(lambda p=p, j=j: A.guarded(A.check_flow_integral, p, j, 1.0))
            jobs.append(lambda p=p, j=j: A.guarded(A.check_mgf_closed_vs_quadrature, p, j, 1.0, 0.25))
            jobs.append(lambda p=p, j=j: A.guarded(A.check_stationary_normalization, p, j))
            jobs.append(lambda p=p, j=j: A.guarded(A.check_stationary_limit, p, j))
    for j in (1, 2):
        jobs.append(lambda j=j: A.guarded(A.check_reflection, NEGATIVE, j, 1.2))
        jobs.append(lambda j=j: A.guarded(A.check_msd_assemblies, MotionParams(1.0, 0.0, 3.0, -1.0), j, 3.0,
                                          [0.01, 0.1, 1.0, 10.0]))
    for p in (STRADDLING, ASYMMETRIC, POSITIVE, NEGATIVE):
        jobs.append(lambda p=p: A.guarded(A.check_symmetry, p, [0.1, 0.5, 1.0, 2.0, 5.0]))
    return jobs


def _mc_jobs(n_paths: int, seed: int, workers: int) -> list[Job]:
    def cfg(t: float) -> SimConfig:
        return SimConfig(t, n_paths, seed, workers)

    everything = S.SUITES
    jobs: list[Job] = [
        lambda: S.check_mc_agreement(ASYMMETRIC, VelocityStart.fixed(1), cfg(1.0), {"moments", "atom", "resets"}),
        lambda: S.check_mc_agreement(ASYMMETRIC, VelocityStart.fixed(2), cfg(1.0), {"moments", "atom"}),
        lambda: S.check_mc_agreement(STRADDLING, VelocityStart.fixed(1), cfg(1.5), everything),
        lambda: S.check_mc_agreement(POSITIVE, VelocityStart.fixed(1), cfg(1.5), {"density", "subdensity"}),
        lambda: S.check_mc_agreement(_with_xi(STRADDLING, 2.0), VelocityStart.fixed(1), cfg(0.5), {"atom"}),
        lambda: S.check_mc_agreement(_with_xi(ASYMMETRIC, 0.5), VelocityStart.random(0.3), cfg(1.5),
                                     {"moments", "density"}),
        lambda: S.check_mc_agreement(_with_xi(POSITIVE, 10.0), VelocityStart.fixed(2), cfg(1.0),
                                     {"moments", "density"}),
        lambda: S.check_mc_agreement(NEGATIVE, VelocityStart.fixed(1), cfg(1.2), {"moments", "density"}),
        lambda: S.check_mc_noreset(ASYMMETRIC, 1, cfg(1.0)),
        lambda: [S.check_mc_stationary(MotionParams(1.0, 2.0, 2.0, -2.0), 1, cfg(50.0))],
        lambda: [S.check_mc_msd(MotionParams(1.0, 0.5, 3.0, -1.0), 1, cfg(3.0))],
    ]
    return jobs


def run_suite(name: str, seed: int = DEFAULT_SEED, workers: int = 1) -> list[CheckReport]:
    """``fast``: full analytic grid, Monte Carlo at 1e5 paths. ``full``: Monte Carlo at 1e6."""
    if name == "fast":
        jobs = _analytic_jobs((0.0, 0.5, 2.0, 10.0), (1.5,)) + _mc_jobs(100_000, seed, workers)
    elif name == "full":
        jobs = _analytic_jobs((0.0, 0.5, 2.0, 10.0), (0.5, 1.5, 5.0)) + _mc_jobs(1_000_000, seed, workers)
    else:
        raise ValueError(f"unknown suite {name!r}")
    if workers == 1:
        results = [job() for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda job: job(), jobs))
    return sort_reports([r for batch in results for r in batch])
