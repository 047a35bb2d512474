"""Write the CSV data behind the density, moment and distance plots.

Every file carries a manifest line, so ``telegraph-reset replay FILE``
regenerates it exactly.

    python scripts/figure_data.py --out figure-data
"""

import argparse
import pathlib
import sys

from telegraph_reset.cli import main as cli

# (lambda, xi, v1, v2) families; strings go straight to the CLI
PDF_STRADDLING = [("1", "2", v, f"-{v}") for v in ("1", "2", "3")]
PDF_POSITIVE = [("1", "2", "1", "0.5"), ("1", "2", "2", "1"), ("1", "2", "4", "2")]
FAST_SWITCHING = [(v1, v2, xi) for v1, v2 in (("1", "-1"), ("2", "1")) for xi in ("0.5", "1", "10")]
STATIONARY_STRADDLING = [(lam, v1, v2) for v1, v2 in (("10", "-10"), ("2", "-10"), ("2", "-2"), ("2", "-0.1"))
                         for lam in ("0.1", "1", "10")]
STATIONARY_POSITIVE = [(lam, v1, "1") for v1 in ("2", "10") for lam in ("0.1", "5", "20")]
# v1 = v2 leaves a single velocity, outside the model; v2 = 1 stands in for the top curve
MEAN_CURVES = [("2", v2) for v2 in ("1", "-2", "-5", "-10")] + [("5", v2) for v2 in ("1", "-1", "-2", "-5")]
VARIANCE_XI = ("0.1", "0.5", "0.85", "1", "1.3", "2")
DISTANCE_SETS = [("3", "-1"), ("2.5", "1"), ("2", "-1"), ("2", "1")]
DISTANCE_LAMBDA = ("1", "1.5", "2", "3", "5")


def _params(lam, xi, v1, v2):
    return ["--lambda", lam, "--xi", xi, "--v1", v1, "--v2", v2]


def runs(out: pathlib.Path) -> list[list[str]]:
    jobs = []
    for lam, xi, v1, v2 in PDF_STRADDLING + PDF_POSITIVE:
        for t in ("0.5", "1.5"):
            jobs.append(["density", *_params(lam, xi, v1, v2), "--t", t, "--grid", "401",
                         "--out", str(out / f"pdf_v{v1}_{v2}_t{t}.csv")])
    for v1, v2, xi in FAST_SWITCHING:
        for t in ("0.5", "2"):
            jobs.append(["density", *_params("1", xi, v1, v2), "--t", t, "--law", "lambda-inf", "--grid", "400",
                         "--out", str(out / f"lambda_inf_v{v1}_{v2}_xi{xi}_t{t}.csv")])
    for lam, v1, v2 in STATIONARY_STRADDLING + STATIONARY_POSITIVE:
        jobs.append(["density", *_params(lam, "2", v1, v2), "--t", "1", "--law", "stationary", "--grid", "401",
                     "--out", str(out / f"stationary_v{v1}_{v2}_lam{lam}.csv")])
    for v1, v2 in MEAN_CURVES:
        jobs.append(["moments", *_params("1", "2", v1, v2), "--t-max", "5", "--steps", "200",
                     "--out", str(out / f"mean_v{v1}_{v2}.csv")])
    for xi in VARIANCE_XI:
        jobs.append(["moments", *_params("1", xi, "2", "-4"), "--t-max", "10", "--steps", "200",
                     "--out", str(out / f"variance_xi{xi}.csv")])
    for v1, v2 in DISTANCE_SETS:
        for lam in DISTANCE_LAMBDA:
            jobs.append(["moments", *_params(lam, "0", v1, v2), "--over", "xi", "--t", "3",
                         "--xi-min", "0.01", "--xi-max", "20", "--steps", "400",
                         "--out", str(out / f"msd_v{v1}_{v2}_lam{lam}.csv")])
    return jobs


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figure-data", help="output directory")
    args = ap.parse_args(argv)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    jobs = runs(out)
    for job in jobs:
        code = cli(job)
        if code:
            print(f"failed ({code}): {' '.join(job)}", file=sys.stderr)
            return code
    print(f"wrote {len(jobs)} files to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
