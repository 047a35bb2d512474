import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate, stats

from telegraph_reset.errors import DomainError
from telegraph_reset.gcp import (
    GcpLaw,
    MixedRatePair,
    draw_rate_pair,
    epoch_pdf,
    increment_pmf,
    intertime_cdf,
    intertime_pdf,
    sample_counts,
    sample_first_sojourns,
)

UNIT = GcpLaw(1.0)


def test_increment_pmf_values():
    assert increment_pmf(0, 1.0, UNIT) == pytest.approx(0.5)
    assert increment_pmf(1, 1.0, UNIT) == pytest.approx(0.25)


@given(lam=st.floats(0.01, 50.0), s=st.floats(0.01, 50.0))
def test_increment_pmf_sums_to_one(lam, s):
    law = GcpLaw(lam)
    ratio = lam * s / (1 + lam * s)
    k_max = int(60 / max(-math.log(ratio), 1e-12)) + 50
    total = math.fsum(increment_pmf(k, s, law) for k in range(min(k_max, 200_000)))
    assert total == pytest.approx(1.0, abs=1e-10)


def test_increment_pmf_domain():
    with pytest.raises(DomainError):
        increment_pmf(0, 0.0, UNIT)
    with pytest.raises(DomainError):
        increment_pmf(-1, 1.0, UNIT)


def test_epoch_pdf_values_and_normalization():
    assert epoch_pdf(1, 0.0, GcpLaw(2.0)) == pytest.approx(2.0)
    assert epoch_pdf(2, 1.0, UNIT) == pytest.approx(0.25)
    tail = 1e7
    mass = integrate.quad(lambda t: epoch_pdf(1, t, UNIT), 0, tail, limit=400, points=[1, 10, 100, 1e3, 1e4, 1e5])[0]
    assert mass == pytest.approx(1.0 - 1.0 / (1.0 + tail), abs=1e-7)
    with pytest.raises(DomainError):
        epoch_pdf(0, 1.0, UNIT)


def test_intertime_pdf_values():
    assert intertime_pdf(0.0, GcpLaw(3.0)) == pytest.approx(3.0)
    assert intertime_pdf(1.0, UNIT) == pytest.approx(0.25)
    assert integrate.quad(lambda t: intertime_pdf(t, UNIT), 0, math.inf)[0] == pytest.approx(1.0, abs=1e-8)


def test_rate_pair_validation():
    with pytest.raises(DomainError):
        MixedRatePair(0.0, 1.0)
    with pytest.raises(DomainError):
        GcpLaw(0.0)


def test_rate_pair_mean_and_independence():
    rng = np.random.default_rng(5)
    law = GcpLaw(1.7)
    pairs = np.array([(r.alpha1, r.alpha2) for r in (draw_rate_pair(law, rng) for _ in range(100_000))])
    n = pairs.shape[0]
    assert abs(pairs[:, 0].mean() - 1.7) <= 4 * pairs[:, 0].std() / math.sqrt(n)
    assert abs(np.corrcoef(pairs.T)[0, 1]) <= 4 / math.sqrt(n)


def test_conditional_counts_are_poisson():
    rng = np.random.default_rng(6)
    alpha, t, n = 2.5, 3.0, 200_000
    counts = rng.poisson(alpha * t, size=n)
    dispersion = counts.var(ddof=1) / counts.mean()
    assert abs(dispersion - 1.0) <= 4 * math.sqrt(2.0 / (n - 1))


def test_zero_event_probability():
    rng = np.random.default_rng(7)
    law, s, n = GcpLaw(1.3), 0.8, 400_000
    zero = np.mean(sample_counts(law, s, n, rng) == 0)
    target = 1.0 / (1.0 + 1.3 * 0.8)
    assert abs(zero - target) <= 4 * math.sqrt(target * (1 - target) / n)


def test_count_marginal_is_geometric():
    rng = np.random.default_rng(8)
    law, s, n = GcpLaw(0.9), 1.5, 200_000
    counts = sample_counts(law, s, n, rng)
    for k in range(4):
        target = increment_pmf(k, s, law)
        assert abs(np.mean(counts == k) - target) <= 4 * math.sqrt(target * (1 - target) / n)


def test_first_sojourn_marginal_ks():
    rng = np.random.default_rng(9)
    law = GcpLaw(1.2)
    sample = sample_first_sojourns(law, 100_000, rng)
    res = stats.kstest(sample, lambda t: np.vectorize(intertime_cdf)(t, law))
    assert res.pvalue > 0.01
