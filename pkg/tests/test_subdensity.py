import math

import numpy as np
import pytest
from oracles import law_integral, noreset_sub, renewal_sub

from telegraph_reset import law
from telegraph_reset.errors import OutOfSupportError
from telegraph_reset.params import MotionParams, VelocityRegime
from telegraph_reset.validation.analytic import interior_grid

from conftest import NEGATIVE_SETS, POSITIVE_SETS, STRADDLING_SETS


def _args(p):
    return p.lam, p.xi, p.v1, p.v2


@pytest.mark.parametrize("p", STRADDLING_SETS + POSITIVE_SETS + NEGATIVE_SETS)
@pytest.mark.parametrize("t", [0.4, 1.5, 4.0])
def test_subdensities_match_renewal_oracle(p, t):
    worst = 0.0
    for x in interior_grid(t, p, 31):
        for i in (1, 2):
            for j in (1, 2):
                ref = renewal_sub(i, j, float(x), t, *_args(p))
                worst = max(worst, abs(law.subdensity_ac(i, j, float(x), t, p) - ref) / max(1.0, abs(ref)))
    assert worst < 1e-10


def test_noreset_point_value():
    p = MotionParams(1.0, 5.0, 1.0, -1.0)  # xi ignored
    assert law.noreset_subdensity(2, 1, 0.0, 1.0, p) == pytest.approx(0.1875, rel=1e-15)
    assert law.noreset_subdensity(1, 1, -1.0 + 1e-12, 1.0, p) == pytest.approx(0.0, abs=1e-11)


def test_noreset_support():
    p = MotionParams(1.0, 0.0, 1.0, -1.0)
    for x in (-1.0, 1.0, 2.0):
        with pytest.raises(OutOfSupportError):
            law.noreset_subdensity(1, 1, x, 1.0, p)


@pytest.mark.parametrize("j", [1, 2])
def test_noreset_normalization(j):
    lam, v1, v2, t = 1.4, 2.0, -0.5, 1.3
    p = MotionParams(lam, 0.0, v1, v2)
    mass = law_integral(lambda x: sum(noreset_sub(i, j, x, t, lam, v1, v2) for i in (1, 2)), t, v1, v2)
    assert mass + 1.0 / (1.0 + lam * t) == pytest.approx(1.0, abs=1e-12)
    lib = law_integral(lambda x: sum(law.noreset_subdensity(i, j, x, t, p) for i in (1, 2))
                       if v2 * t < x < v1 * t else 0.0, t, v1, v2)
    assert lib == pytest.approx(mass, abs=1e-12)


@pytest.mark.parametrize("p", STRADDLING_SETS[:2] + POSITIVE_SETS[:1])
def test_small_xi_recovers_noreset(p):
    q = MotionParams(p.lam, 1e-10, p.v1, p.v2)
    free = MotionParams(p.lam, 0.0, p.v1, p.v2)
    t = 1.2
    xs = np.linspace(p.v2 * t, p.v1 * t, 23)[1:-1]
    for x in xs:
        if x == 0.0:
            continue
        for i in (1, 2):
            for j in (1, 2):
                got = law.subdensity_ac(i, j, float(x), t, q)
                ref = law.noreset_subdensity(i, j, float(x), t, free)
                assert got == pytest.approx(ref, rel=1e-6)


def _boundary_limits(p: MotionParams, j: int, t: float, h: float = 1e-9):
    # approach v_j t from inside the diffusion interval
    x = p.velocity(j) * t + (-h if j == 1 else h)
    k = 3 - j
    return [
        law.subdensity_ac(j, j, x, t, p),
        law.subdensity_ac(j, k, x, t, p),
        law.subdensity_ac(k, j, x, t, p),
        law.subdensity_ac(k, k, x, t, p),
    ]


def _stated_limits(p: MotionParams, j: int, t: float):
    lam, xi, d = p.lam, p.xi, p.v1 - p.v2
    e = math.exp(-xi * t)
    vj = p.velocity(j)
    last = xi * math.exp(-xi * p.v2 / p.v1 * t) / (p.v1 + lam * p.v2 * t) if (j == 2 and p.v2 > 0) else 0.0
    return [
        e / (1 + lam * t) * (xi / abs(vj) + lam * lam * t / (d * (1 + lam * t))),
        e * lam / (d * (1 + lam * t)),
        e * lam / (d * (1 + lam * t) ** 2),
        last,
    ]


@pytest.mark.parametrize(
    "p,j",
    [(p, j) for p in STRADDLING_SETS for j in (1, 2)] + [(p, 1) for p in POSITIVE_SETS],
)
def test_boundary_limits(p, j):
    t = 2.0
    assert _boundary_limits(p, j, t) == pytest.approx(_stated_limits(p, j, t), abs=1e-8)


def test_subdensity_value_fields():
    p = MotionParams(1.0, 2.0, 1.0, -1.0)
    t = 1.5
    v = law.subdensity(2, 1, 0.3, t, p)
    assert v.by_velocity == (0.0, v.ac) and v.atom == 0.0
    at_end = law.subdensity(1, 1, p.v1 * t, t, p)
    assert at_end.atom == pytest.approx(law.atom_mass(1, t, p))
    assert law.subdensity(2, 1, p.v1 * t, t, p).atom == 0.0


def test_out_of_support_raises():
    p = MotionParams(1.0, 2.0, 4.0, 2.0)
    with pytest.raises(OutOfSupportError):
        law.subdensity(1, 1, -0.1, 1.0, p)
    with pytest.raises(OutOfSupportError):
        law.subdensity(1, 1, 4.1, 1.0, p)
    assert p.regime is VelocityRegime.BOTH_POSITIVE
