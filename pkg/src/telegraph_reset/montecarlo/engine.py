"""Batch simulation, per-path access, and summaries."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from ..params import MotionParams, VelocityStart
from .kernel import simulate_range

_SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class SimConfig:
    horizon_t: float
    n_paths: int
    seed: int
    workers: int = 1

    def __post_init__(self):
        if not (math.isfinite(self.horizon_t) and self.horizon_t > 0):
            raise DomainError(f"horizon must be positive, got {self.horizon_t}")
        if self.n_paths < 1:
            raise DomainError(f"need at least one path, got {self.n_paths}")
        if not 0 <= self.seed <= _SEED_MASK:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.workers < 1:
            raise DomainError(f"workers must be positive, got {self.workers}")


@dataclass(frozen=True)
class PathOutcome:
    position: float
    velocity: int
    is_atom: bool
    resets: int


@dataclass(frozen=True)
class SampleArrays:
    position: np.ndarray
    velocity: np.ndarray
    atom: np.ndarray
    resets: np.ndarray

    def __len__(self) -> int:
        return self.position.shape[0]


def _rates(fixed_rates: tuple[float, float] | None) -> tuple[float, float]:
    if fixed_rates is None:
        return -1.0, -1.0
    a1, a2 = fixed_rates
    if a1 < 0 or a2 < 0:
        raise DomainError(f"fixed rates must be nonnegative, got {fixed_rates}")
    return float(a1), float(a2)


def _allocate(n: int) -> SampleArrays:
    return SampleArrays(
        position=np.empty(n, dtype=np.float64),
        velocity=np.empty(n, dtype=np.int8),
        atom=np.empty(n, dtype=np.bool_),
        resets=np.empty(n, dtype=np.int64),
    )


def _fill(p: MotionParams, start: VelocityStart, horizon: float, seed: int, first: int,
          out: SampleArrays, rates: tuple[float, float]) -> None:
    simulate_range(p.lam, p.xi, p.v1, p.v2, start.q, horizon, np.uint64(seed), first,
                   rates[0], rates[1], out.position, out.velocity, out.atom, out.resets)


def simulate_path(p: MotionParams, start: VelocityStart, horizon_t: float, path_index: int,
                  seed: int, fixed_rates: tuple[float, float] | None = None) -> PathOutcome:
    """One path at the horizon; identical to entry ``path_index`` of any batch."""
    SimConfig(horizon_t, 1, seed)
    if path_index < 0:
        raise DomainError(f"path index must be nonnegative, got {path_index}")
    out = _allocate(1)
    _fill(p, start, horizon_t, seed, path_index, out, _rates(fixed_rates))
    return PathOutcome(float(out.position[0]), int(out.velocity[0]), bool(out.atom[0]), int(out.resets[0]))


def simulate_samples(p: MotionParams, start: VelocityStart, cfg: SimConfig,
                     fixed_rates: tuple[float, float] | None = None) -> SampleArrays:
    """Raw samples of paths 0 .. n_paths - 1, in path order for any worker count."""
    rates = _rates(fixed_rates)
    out = _allocate(cfg.n_paths)
    workers = min(cfg.workers, cfg.n_paths)
    if workers == 1:
        _fill(p, start, cfg.horizon_t, cfg.seed, 0, out, rates)
        return out
    bounds = np.linspace(0, cfg.n_paths, workers + 1).astype(np.int64)

    def run(k: int) -> None:
        lo, hi = int(bounds[k]), int(bounds[k + 1])
        view = SampleArrays(out.position[lo:hi], out.velocity[lo:hi], out.atom[lo:hi], out.resets[lo:hi])
        _fill(p, start, cfg.horizon_t, cfg.seed, lo, view, rates)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(run, range(workers)))
    return out


@dataclass(frozen=True)
class Estimate:
    value: float
    se: float


def _estimate(values: np.ndarray) -> Estimate:
    n = values.shape[0]
    m = float(np.mean(values))
    se = float(np.std(values, ddof=1) / math.sqrt(n)) if n > 1 else math.inf
    return Estimate(m, se)


@dataclass(frozen=True)
class BatchSummary:
    samples: SampleArrays
    n_paths: int
    mean: Estimate
    second: Estimate
    atom_freq: Estimate
    reset_mean: float
    reset_dispersion: float
    count_v1: int
    count_v2: int


def summarize(samples: SampleArrays) -> BatchSummary:
    n = len(samples)
    resets = samples.resets.astype(np.float64)
    r_mean = float(np.mean(resets))
    r_var = float(np.var(resets, ddof=1)) if n > 1 else 0.0
    count_v1 = int(np.count_nonzero(samples.velocity == 1))
    return BatchSummary(
        samples=samples,
        n_paths=n,
        mean=_estimate(samples.position),
        second=_estimate(samples.position**2),
        atom_freq=_estimate(samples.atom.astype(np.float64)),
        reset_mean=r_mean,
        reset_dispersion=r_var / r_mean if r_mean > 0 else math.nan,
        count_v1=count_v1,
        count_v2=n - count_v1,
    )


def run_batch(p: MotionParams, start: VelocityStart, cfg: SimConfig,
              fixed_rates: tuple[float, float] | None = None) -> BatchSummary:
    return summarize(simulate_samples(p, start, cfg, fixed_rates))
