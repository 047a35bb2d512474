"""Check reports and their gate logic."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check: passed iff |observed - target| <= tolerance.

    With ``relative=True`` the tolerance is scaled by |target|. Statistical
    checks report the gate (k standard errors) as their tolerance.
    """

    check_id: str
    target: float
    observed: float
    tolerance: float
    passed: bool
    detail: str = ""
    relative: bool = False

    @classmethod
    def compare(cls, check_id: str, target: float, observed: float, tolerance: float,
                detail: str = "", relative: bool = False) -> CheckReport:
        bound = tolerance * abs(target) if relative else tolerance
        ok = math.isfinite(observed) and abs(observed - target) <= bound
        return cls(check_id, float(target), float(observed), float(tolerance), bool(ok), detail, relative)

    @classmethod
    def upper_bound(cls, check_id: str, observed: float, limit: float, detail: str = "") -> CheckReport:
        """Passes iff 0 <= observed <= limit (e.g. a chi-square statistic)."""
        ok = math.isfinite(observed) and observed <= limit
        return cls(check_id, 0.0, float(observed), float(limit), bool(ok), detail, False)

    def to_dict(self) -> dict:
        return asdict(self)


def sort_reports(reports: list[CheckReport]) -> list[CheckReport]:
    return sorted(reports, key=lambda r: r.check_id)
