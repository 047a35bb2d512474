"""Empirical densities from simulated samples, atoms kept apart."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, EmptySamplesError
from .engine import SampleArrays


@dataclass(frozen=True)
class Histogram:
    """Density estimate over ``edges``; ``counts`` exclude atom samples.

    ``density`` is counts / (n_total * width), so it estimates the
    (sub-)density directly and sum(density * width) + atom_freq = 1 when no
    velocity filter is applied.
    """

    edges: np.ndarray
    counts: np.ndarray
    density: np.ndarray
    se: np.ndarray
    atom_count: int
    n_total: int

    @property
    def atom_freq(self) -> float:
        return self.atom_count / self.n_total


def empirical_density(samples: SampleArrays, edges: np.ndarray | int, support: tuple[float, float] | None = None,
                      velocity: int | None = None) -> Histogram:
    """Histogram of non-atom positions, optionally restricted to one final velocity.

    ``edges`` is either explicit bin edges or a bin count (>= 10) over ``support``.
    Positions outside the edges raise, since bins must cover the whole support.
    """
    n = len(samples)
    if n == 0:
        raise EmptySamplesError("no samples to bin")
    if isinstance(edges, (int, np.integer)):
        if edges < 10:
            raise DomainError(f"need at least 10 bins, got {edges}")
        if support is None:
            raise DomainError("a bin count needs the support interval")
        edges = np.linspace(support[0], support[1], int(edges) + 1)
    edges = np.asarray(edges, dtype=np.float64)
    if edges.ndim != 1 or edges.shape[0] < 11 or np.any(np.diff(edges) <= 0):
        raise DomainError("edges must be increasing with at least 10 bins")
    keep = ~samples.atom
    if velocity is not None:
        keep &= samples.velocity == velocity
    pos = samples.position[keep]
    if pos.size and (pos.min() < edges[0] or pos.max() > edges[-1]):
        raise DomainError("samples fall outside the histogram edges")
    counts, _ = np.histogram(pos, bins=edges)
    width = np.diff(edges)
    frac = counts / n
    atoms = samples.atom if velocity is None else samples.atom & (samples.velocity == velocity)
    return Histogram(
        edges=edges,
        counts=counts,
        density=frac / width,
        se=np.sqrt(frac * (1.0 - frac) / n) / width,
        atom_count=int(np.count_nonzero(atoms)),
        n_total=n,
    )
