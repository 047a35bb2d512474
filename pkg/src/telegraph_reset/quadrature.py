"""Piecewise adaptive quadrature over the known breakpoints of the law."""

from __future__ import annotations

import math
import warnings
from collections.abc import Callable, Iterable

from scipy import integrate

from .errors import QuadratureError


def _quad(f, a: float, b: float, epsabs: float, epsrel: float, limit: int) -> tuple[float, float, str]:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        value, err = integrate.quad(f, a, b, epsabs=epsabs, epsrel=epsrel, limit=limit)
    trouble = "; ".join(str(w.message) for w in caught if issubclass(w.category, integrate.IntegrationWarning))
    return value, err, trouble


def integrate_piecewise(
    f: Callable[[float], float],
    points: Iterable[float],
    epsabs: float = 1e-13,
    epsrel: float = 1e-12,
    max_error: float = 1e-9,
    limit: int = 400,
) -> float:
    """Sum of adaptive Gauss-Kronrod integrals of f between consecutive points.

    Endpoint singularities (log or 1/sqrt) are handled by QUADPACK's
    extrapolation, so singular points must be listed among ``points``.
    Raises QuadratureError when the reported error exceeds ``max_error`` or
    QUADPACK still warns after a retry with a larger subdivision limit; its
    error estimate is not trustworthy once it has flagged divergence.
    """
    nodes = sorted(set(points))
    total, error = 0.0, 0.0
    for a, b in zip(nodes[:-1], nodes[1:]):
        value, err, trouble = _quad(f, a, b, epsabs, epsrel, limit)
        if trouble:
            value, err, trouble = _quad(f, a, b, epsabs, epsrel, 4 * limit)
            if trouble:
                raise QuadratureError(f"quadrature on [{a}, {b}] did not converge: {trouble}")
        total += value
        error += err
    if not (math.isfinite(total) and error <= max_error):
        raise QuadratureError(f"quadrature error estimate {error:.3g} exceeds {max_error:.3g}")
    return total
