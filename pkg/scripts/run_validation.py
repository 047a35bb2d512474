"""Run a validation suite and print one line per check.

    python scripts/run_validation.py --suite full --out report.json

Exits 1 if any check fails.
"""

import argparse
import json
import sys

from telegraph_reset.validation import run_suite
from telegraph_reset.validation.suites import DEFAULT_SEED


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", choices=("fast", "full"), default="full")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", help="also write the reports as JSON")
    args = ap.parse_args(argv)

    reports = run_suite(args.suite, seed=args.seed, workers=args.workers)
    width = max(len(r.check_id) for r in reports)
    for r in reports:
        mark = "ok  " if r.passed else "FAIL"
        print(f"{mark} {r.check_id:<{width}}  observed={r.observed:.6g}  target={r.target:.6g}  tol={r.tolerance:.3g}")
    failed = sum(not r.passed for r in reports)
    print(f"{len(reports) - failed}/{len(reports)} checks passed")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2, default=str)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
