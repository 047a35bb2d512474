"""The ten acceptance criteria, each at its stated tolerance.

Every test prints one ``criterion NN: PASS|FAIL`` line; the conftest hook
repeats them in the terminal summary.
"""

import json
import math
import time

import numpy as np
import pytest
from scipy import optimize

from telegraph_reset import law
from telegraph_reset.cli import main
from telegraph_reset.law.moments import _in_closed_form_domain
from telegraph_reset.montecarlo import SimConfig, run_batch
from telegraph_reset.params import MotionParams, VelocityStart
from telegraph_reset.validation import statistical as S
from telegraph_reset.validation.analytic import check_normalization
from telegraph_reset.validation.suites import DEFAULT_SEED

N_MC = 1_000_000


def verdict(number: int, passed: bool, detail: str) -> None:
    print(f"criterion {number:02d}: {'PASS' if passed else 'FAIL'}  {detail}")
    assert passed, detail


def test_criterion_01_normalization():
    began = time.perf_counter()
    worst = 0.0
    count = 0
    for v1, v2 in ((1.0, -1.0), (4.0, 2.0)):
        for start in (VelocityStart.fixed(1), VelocityStart.fixed(2), VelocityStart.random(0.3)):
            for xi in (0.0, 0.5, 2.0, 10.0):
                for t in (0.5, 1.5, 5.0):
                    r = check_normalization(MotionParams(1.0, xi, v1, v2), start, t)
                    worst = max(worst, abs(r.observed - 1.0))
                    count += 1
    elapsed = time.perf_counter() - began
    verdict(1, worst < 1e-8 and elapsed < 10.0, f"{count} cases, max |mass - 1| = {worst:.2e}, {elapsed:.1f} s")


def test_criterion_02_atom_law():
    p = MotionParams(1.0, 2.0, 1.0, -1.0)
    t = 0.5
    began = time.perf_counter()
    batch = run_batch(p, VelocityStart.fixed(1), SimConfig(t, N_MC, DEFAULT_SEED))
    elapsed = time.perf_counter() - began
    mass = math.exp(-p.xi * t) / (1 + p.lam * t)
    se = math.sqrt(mass * (1 - mass) / N_MC)
    z = (batch.atom_freq.value - mass) / se
    verdict(2, abs(z) <= 4.0 and elapsed < 30.0,
            f"freq {batch.atom_freq.value:.6f} vs {mass:.6f}, z = {z:+.2f}, {elapsed:.1f} s")


@pytest.mark.parametrize("v1,v2", [(1.0, -1.0), (4.0, 2.0)])
def test_criterion_03_density_chi_square(v1, v2):
    p = MotionParams(1.0, 2.0, v1, v2)
    began = time.perf_counter()
    (report,) = S.check_mc_agreement(p, VelocityStart.fixed(1), SimConfig(1.5, N_MC, DEFAULT_SEED), {"density"})
    elapsed = time.perf_counter() - began
    verdict(3, report.passed and elapsed < 60.0,
            f"v=({v1:g},{v2:g}) chi2 {report.observed:.1f} < {report.tolerance:.1f} ({report.detail}), {elapsed:.1f} s")


@pytest.mark.parametrize("j", [1, 2])
def test_criterion_04_moments(j):
    p = MotionParams(1.0, 2.0, 2.0, -4.0)
    batch = run_batch(p, VelocityStart.fixed(j), SimConfig(1.0, N_MC, DEFAULT_SEED))
    z_mean = (batch.mean.value - law.mean(1.0, j, p)) / batch.mean.se
    z_second = (batch.second.value - law.second_moment(1.0, j, p)) / batch.second.se
    verdict(4, abs(z_mean) <= 4.0 and abs(z_second) <= 4.0,
            f"start v{j}: mean z = {z_mean:+.2f}, second z = {z_second:+.2f}")


def test_criterion_05_symmetry():
    rng = np.random.default_rng(DEFAULT_SEED)
    worst = 0.0
    for _ in range(100):
        lam, xi = rng.uniform(0.1, 5.0, 2)
        v1, v2 = sorted(rng.uniform(-5.0, 5.0, 2), reverse=True)
        t = rng.uniform(0.0, 10.0)
        p = MotionParams(lam, xi, v1, v2)
        worst = max(worst, abs(law.mean(t, 1, p) + law.mean(t, 2, p) - (v1 + v2) * (1 - math.exp(-xi * t)) / xi))
    verdict(5, worst < 1e-10, f"max deviation {worst:.2e} on 100 points")


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b) if b else abs(a)


def test_criterion_06_limits():
    sets = [(1.0, 1.0, -1.0), (1.3, 2.0, -0.5), (1.0, 4.0, 2.0)]
    ts = (0.5, 2.0)
    # (a) weak resets
    a = max(max(_rel(law.mean(t, j, MotionParams(lam, 1e-8, v1, v2)), law.noreset_mean(t, j, MotionParams(lam, 0.0, v1, v2))),
                _rel(law.second_moment(t, j, MotionParams(lam, 1e-8, v1, v2)),
                     law.noreset_second_moment(t, j, MotionParams(lam, 0.0, v1, v2))))
            for lam, v1, v2 in sets for t in ts for j in (1, 2))
    # (b) fast switching
    b = max(max(_rel(law.mean(t, j, MotionParams(1e8, 2.0, v1, v2)), law.mean_lambda_inf(t, MotionParams(1e8, 2.0, v1, v2))),
                _rel(law.second_moment(t, j, MotionParams(1e8, 2.0, v1, v2)),
                     law.second_lambda_inf(t, MotionParams(1e8, 2.0, v1, v2))))
            for _, v1, v2 in sets for t in ts for j in (1, 2))
    # (c) long horizon against the stationary law
    c = 0.0
    for lam, v1, v2 in sets:
        p = MotionParams(lam, 2.0, v1, v2)
        t = 200.0 / p.xi
        for x in np.linspace(10 * min(v2, 0.0) / p.xi, 10 * max(v1, 0.0) / p.xi, 101):
            if x != 0.0:
                for j in (1, 2):
                    c = max(c, abs(law.pdf_ac(float(x), t, VelocityStart.fixed(j), p) - law.stationary_pdf(float(x), j, p)))
    # (d) fast switching density away from the origin and the ballistic fronts
    d = 0.0
    for _, v1, v2 in sets:
        p, fast = MotionParams(1.0, 2.0, v1, v2), MotionParams(1e6, 2.0, v1, v2)
        t = 1.5
        for x in np.linspace(min(v2 * t, 0.0), max(v1 * t, 0.0), 61)[1:-1]:
            x = float(x)
            if abs(x) < 0.05 * t or min(abs(x - v1 * t), abs(x - v2 * t)) < 0.05 * t:
                continue
            d = max(d, abs(law.pdf_ac(x, t, VelocityStart.fixed(1), fast) - law.pdf_lambda_inf(x, t, p)))
    # (e) very fast resets
    e = max(_rel(law.mean_square_distance(1e6, t, j, MotionParams(lam, 0.0, v1, v2)),
                 law.noreset_second_moment(t, j, MotionParams(lam, 0.0, v1, v2)))
            for lam, v1, v2 in sets for t in ts for j in (1, 2))
    passed = a < 1e-5 and b < 1e-5 and c < 1e-4 and d < 1e-4 and e < 1e-4
    verdict(6, passed, f"(a) {a:.1e} (b) {b:.1e} (c) {c:.1e} (d) {d:.1e} (e) {e:.1e}")


def test_criterion_07_mgf():
    worst_closed, worst_fd = 0.0, 0.0
    for p in (MotionParams(1.0, 2.0, 1.0, -1.0), MotionParams(1.3, 0.7, 2.0, -0.5), MotionParams(1.0, 2.0, 4.0, 2.0)):
        lo = p.xi / p.v2 if p.v2 < 0 else -3.0
        hi = p.xi / p.v1
        for t in (0.5, 2.0):
            for j in (1, 2):
                for z in np.linspace(lo, hi, 11)[1:-1]:
                    z = float(z)
                    assert _in_closed_form_domain(z, p)
                    worst_closed = max(worst_closed, _rel(law.mgf(z, t, j, p), law.mgf_quadrature(z, t, j, p)))
                h1, h2 = 1e-5, 1e-4
                d1 = (law.mgf(h1, t, j, p) - law.mgf(-h1, t, j, p)) / (2 * h1)
                d2 = (law.mgf(h2, t, j, p) - 2 * law.mgf(0.0, t, j, p) + law.mgf(-h2, t, j, p)) / h2**2
                worst_fd = max(worst_fd, _rel(d1, law.mean(t, j, p)), _rel(d2, law.second_moment(t, j, p)))
    verdict(7, worst_closed < 1e-8 and worst_fd < 1e-5,
            f"closed vs quadrature {worst_closed:.1e}, finite differences {worst_fd:.1e}")


def test_criterion_08_mean_extremum():
    worst = 0.0
    for (v1, v2), j in (((2.0, -5.0), 1), ((5.0, -1.0), 2)):
        p = MotionParams(1.0, 2.0, v1, v2)
        ext = law.mean_extremum(p, j)
        sign = 1.0 if ext.kind.value == "max" else -1.0
        found = optimize.minimize_scalar(lambda t: -sign * law.mean(t, j, p), bounds=(1e-3, 5.0), method="bounded",
                                         options={"xatol": 1e-10})
        worst = max(worst, abs(found.x - ext.t))
    verdict(8, worst < 1e-6, f"max |numeric - formula| = {worst:.1e}")


def test_criterion_09_msd_shapes():
    xis = np.linspace(0.01, 20.0, 400)

    def curve(t, v1, v2, lam, j):
        base = MotionParams(lam, 0.0, v1, v2)
        return np.array([law.mean_square_distance(float(x), t, j, base) for x in xis])

    results = []
    for lam in (1.0, 5.0):
        dip = curve(3.0, 3.0, -1.0, lam, 1)
        k = int(np.argmin(dip))
        results.append(("interior minimum", lam, 0 < k < xis.size - 1))
        results.append(("increasing", lam, bool(np.all(np.diff(curve(3.0, 2.5, 1.0, lam, 1)) > 0))))
        results.append(("decreasing", lam, bool(np.all(np.diff(curve(3.0, 2.0, -1.0, lam, 2)) < 0))))
    failed = [f"{name} at lambda={lam:g}" for name, lam, ok in results if not ok]
    verdict(9, not failed, "all shapes hold" if not failed else "failed: " + ", ".join(failed))


def test_criterion_10_determinism(capsys):
    argv = ["simulate", "--lambda", "1", "--xi", "2", "--v1", "1", "--v2", "-1", "--t", "1.5",
            "--n-paths", "200000", "--seed", str(DEFAULT_SEED)]
    outputs = {}
    for w in (1, 4, 8):
        main(argv + ["--workers", str(w)])
        outputs[w] = capsys.readouterr().out
    same = outputs[1] == outputs[4] == outputs[8]
    mean = json.loads(outputs[1])["empirical_mean"]["value"]
    verdict(10, same, f"workers 1/4/8 byte-identical: {same} (mean {mean:.6f})")
