"""Quadrature and pointwise consistency checks of the closed-form laws."""

from __future__ import annotations

import math

import numpy as np

from .. import law
from ..errors import TelegraphError
from ..params import MotionParams, VelocityStart
from ..law.moments import phi1
from ..quadrature import integrate_piecewise
from .report import CheckReport


def _tag(p: MotionParams) -> str:
    return f"lam={p.lam:g},xi={p.xi:g},v=({p.v1:g},{p.v2:g})"


def interior_grid(t: float, p: MotionParams, n: int = 200) -> np.ndarray:
    """Points strictly inside the support, avoiding the breakpoints."""
    lo, hi = law.support(t, p)
    xs = lo + (hi - lo) * (np.arange(n) + 0.5) / n
    marks = law.breakpoints(t, p)
    return np.array([x for x in xs if min(abs(x - m) for m in marks) > 1e-9 * (hi - lo)])


def check_normalization(p: MotionParams, start: VelocityStart, t: float) -> CheckReport:
    """Quadrature of the density plus the atom; raises QuadratureError if unstable."""
    body = integrate_piecewise(lambda x: law.pdf_ac(x, t, start, p), law.breakpoints(t, p))
    atom = law.atom_mass(1, t, p)
    return CheckReport.compare(f"normalization[{_tag(p)},{start.label()},t={t:g}]", 1.0, body + atom, 1e-8)


def check_decomposition(p: MotionParams, j: int, t: float) -> CheckReport:
    start = VelocityStart.fixed(j)
    worst = 0.0
    for x in interior_grid(t, p):
        total = law.pdf_ac(x, t, start, p)
        parts = law.subdensity_ac(1, j, x, t, p) + law.subdensity_ac(2, j, x, t, p)
        worst = max(worst, abs(total - parts) / max(1.0, abs(total)))
    return CheckReport.compare(f"decomposition[{_tag(p)},j={j},t={t:g}]", 0.0, worst, 1e-12,
                               "max scaled |pdf - p1 - p2| on a 200-point grid")


def check_flow_identity(p: MotionParams, j: int, t: float) -> CheckReport:
    worst = 0.0
    for x in interior_grid(t, p):
        w = law.flow(x, t, j, p).ac
        diff = law.subdensity_ac(1, j, x, t, p) - law.subdensity_ac(2, j, x, t, p)
        worst = max(worst, abs(w - diff) / max(1.0, abs(w)))
    return CheckReport.compare(f"flow-identity[{_tag(p)},j={j},t={t:g}]", 0.0, worst, 1e-12,
                               "max scaled |w - (p1 - p2)| on a 200-point grid")


def check_flow_integral(p: MotionParams, j: int, t: float, h: float = 1e-5) -> CheckReport:
    """Total flow measures the mean drift: (v1+v2)/2 + (v1-v2)/2 * int w = dE/dt + xi E."""
    body = integrate_piecewise(lambda x: law.flow(x, t, j, p).ac, law.breakpoints(t, p))
    signed_atom = (1.0 if j == 1 else -1.0) * law.atom_mass(j, t, p)
    drift = 0.5 * (p.v1 + p.v2) + 0.5 * (p.v1 - p.v2) * (body + signed_atom)
    slope = (law.mean(t + h, j, p) - law.mean(t - h, j, p)) / (2.0 * h)
    return CheckReport.compare(f"flow-integral[{_tag(p)},j={j},t={t:g}]", slope + p.xi * law.mean(t, j, p),
                               drift, 1e-6)


def check_symmetry(p: MotionParams, ts: list[float]) -> CheckReport:
    worst = 0.0
    for t in ts:
        target = (p.v1 + p.v2) * t * phi1(p.xi * t)
        worst = max(worst, abs(law.mean(t, 1, p) + law.mean(t, 2, p) - target))
    return CheckReport.compare(f"mean-symmetry[{_tag(p)}]", 0.0, worst, 1e-10)


def check_mgf_moments(p: MotionParams, j: int, t: float) -> list[CheckReport]:
    h1, h2 = 1e-5, 1e-4
    d1 = (law.mgf(h1, t, j, p) - law.mgf(-h1, t, j, p)) / (2.0 * h1)
    d2 = (law.mgf(h2, t, j, p) - 2.0 * law.mgf(0.0, t, j, p) + law.mgf(-h2, t, j, p)) / (h2 * h2)
    tag = f"{_tag(p)},j={j},t={t:g}"
    return [
        CheckReport.compare(f"mgf-mean[{tag}]", law.mean(t, j, p), d1, 1e-5, relative=True),
        CheckReport.compare(f"mgf-second[{tag}]", law.second_moment(t, j, p), d2, 1e-5, relative=True),
    ]


def check_mgf_closed_vs_quadrature(p: MotionParams, j: int, t: float, z: float) -> CheckReport:
    return CheckReport.compare(f"mgf-closed-form[{_tag(p)},j={j},t={t:g},z={z:g}]",
                               law.mgf_quadrature(z, t, j, p), law.mgf(z, t, j, p), 1e-8, relative=True)


def check_reflection(p: MotionParams, j: int, t: float) -> list[CheckReport]:
    """Reflection-dispatched moments of a both-negative p against the unreflected closed forms."""
    from ..law.moments import _mean_closed, _second_closed

    tag = f"{_tag(p)},j={j},t={t:g}"
    return [
        CheckReport.compare(f"reflection-mean[{tag}]", _mean_closed(t, j, p), law.mean(t, j, p), 1e-12, relative=True),
        CheckReport.compare(f"reflection-second[{tag}]", _second_closed(t, j, p), law.second_moment(t, j, p),
                            1e-12, relative=True),
    ]


def check_stationary_limit(p: MotionParams, j: int) -> CheckReport:
    t = 200.0 / p.xi
    lo, hi = 10.0 * min(p.v2, 0.0) / p.xi, 10.0 * max(p.v1, 0.0) / p.xi
    worst = 0.0
    for x in np.linspace(lo, hi, 101):
        if x == 0.0:
            continue
        worst = max(worst, abs(law.pdf_ac(x, t, VelocityStart.fixed(j), p) - law.stationary_pdf(x, j, p)))
    return CheckReport.compare(f"stationary-limit[{_tag(p)},j={j}]", 0.0, worst, 1e-4)


def check_stationary_normalization(p: MotionParams, j: int) -> CheckReport:
    from scipy import integrate

    f = lambda x: law.stationary_pdf(x, j, p)  # noqa: E731
    left = integrate.quad(f, -math.inf, 0.0, epsabs=1e-13, limit=400)[0] if p.v2 < 0 else 0.0
    right = integrate.quad(f, 0.0, math.inf, epsabs=1e-13, limit=400)[0]
    return CheckReport.compare(f"stationary-normalization[{_tag(p)},j={j}]", 1.0, left + right, 1e-8)


def check_msd_assemblies(p: MotionParams, j: int, t: float, xis: list[float]) -> CheckReport:
    worst = 0.0
    for xi in xis:
        a = law.mean_square_distance(xi, t, j, p)
        b = law.mean_square_distance_from_moments(xi, t, j, p)
        worst = max(worst, abs(a - b))
    return CheckReport.compare(f"msd-assemblies[{_tag(p)},j={j},t={t:g}]", 0.0, worst, 1e-9)


def guarded(check, *args) -> list[CheckReport]:
    """Run a check, turning library errors into a failed report."""
    try:
        out = check(*args)
    except TelegraphError as exc:
        return [CheckReport(f"{check.__name__}{args!r}", math.nan, math.nan, 0.0, False, f"error: {exc}")]
    return out if isinstance(out, list) else [out]
