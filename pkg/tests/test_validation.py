import importlib
import math

import pytest

from telegraph_reset import law
from telegraph_reset.errors import QuadratureError
from telegraph_reset.montecarlo import SimConfig
from telegraph_reset.params import MotionParams, VelocityStart
from telegraph_reset.quadrature import integrate_piecewise
from telegraph_reset.validation import CheckReport, run_suite, sort_reports
from telegraph_reset.validation import analytic as A
from telegraph_reset.validation import statistical as S


@pytest.fixture(scope="module")
def fast_reports():
    return run_suite("fast")


def test_fast_suite_passes(fast_reports):
    failed = [r.check_id for r in fast_reports if not r.passed]
    assert not failed


def test_fast_suite_coverage(fast_reports):
    ids = [r.check_id for r in fast_reports]
    assert len(ids) >= 25 and len(set(ids)) == len(ids)
    for xi in ("xi=0,", "xi=0.5,", "xi=2,", "xi=10,"):
        assert any(xi in i for i in ids)
    assert any("random:0.3" in i for i in ids)
    assert any("v=(4,2)" in i for i in ids) and any("v=(1,-1)" in i for i in ids)
    assert ids == sorted(ids)


def test_reports_reproducible(fast_reports):
    again = run_suite("fast")
    assert [r.to_dict() for r in again] == [r.to_dict() for r in fast_reports]


def test_worker_count_does_not_change_reports(fast_reports):
    threaded = run_suite("fast", workers=3)
    assert [r.to_dict() for r in threaded] == [r.to_dict() for r in fast_reports]


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nightly")


def test_flipped_reset_term_is_caught(monkeypatch):
    subdensity_module = importlib.import_module("telegraph_reset.law.subdensity")
    p = MotionParams(1.0, 2.0, 1.0, -1.0)
    assert A.check_flow_identity(p, 1, 1.5).passed
    original = subdensity_module.theta
    monkeypatch.setattr(subdensity_module, "theta", lambda x, t, q: -original(x, t, q))
    assert not A.check_flow_identity(p, 1, 1.5).passed


def test_statistical_gate_rejects_wrong_law(monkeypatch):
    p = MotionParams(1.0, 2.0, 1.0, -1.0)
    cfg = SimConfig(1.5, 100_000, 5)
    assert all(r.passed for r in S.check_mc_agreement(p, VelocityStart.fixed(1), cfg, {"moments"}))
    monkeypatch.setattr(law, "mean", lambda t, j, q: 0.05)
    monkeypatch.setattr(S.law, "mean", lambda t, j, q: 0.05)
    assert not all(r.passed for r in S.check_mc_agreement(p, VelocityStart.fixed(1), cfg, {"moments"}))


def test_unknown_statistical_suite():
    with pytest.raises(ValueError):
        S.check_mc_agreement(MotionParams(1.0, 2.0, 1.0, -1.0), VelocityStart.fixed(1), SimConfig(1.0, 10, 1),
                             {"bogus"})


def test_quadrature_failure_is_reported():
    with pytest.raises(QuadratureError):
        integrate_piecewise(lambda x: 1.0 / abs(x) ** 1.05 if x else 0.0, [-1.0, 0.0, 1.0])


def test_guarded_turns_errors_into_failures():
    def broken(*_):
        raise QuadratureError("no convergence")

    out = A.guarded(broken, 1)
    assert len(out) == 1 and not out[0].passed and "no convergence" in out[0].detail


def test_check_report_helpers():
    r = CheckReport.compare("b", 1.0, 1.0 + 1e-9, 1e-8)
    assert r.passed
    rel = CheckReport.compare("a", 100.0, 100.5, 1e-2, relative=True)
    assert rel.passed
    bound = CheckReport.upper_bound("c", 3.0, 2.0)
    assert not bound.passed
    assert [x.check_id for x in sort_reports([r, rel, bound])] == ["a", "b", "c"]
    nan = CheckReport.compare("d", 0.0, math.nan, 1.0)
    assert not nan.passed
    assert set(r.to_dict()) >= {"check_id", "target", "observed", "tolerance", "passed"}
