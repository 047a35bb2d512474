"""Command-line interface: density and moment curves, simulation, validation.

Data goes to stdout (or --out), logs to stderr. Exit codes: 0 ok, 1 a
validation check failed, 2 bad flags, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import shlex
import sys
from collections.abc import Callable, Sequence

import numpy as np

from . import law
from .errors import SingularPointError, TelegraphError
from .manifest import RunManifest, canonical_json, manifest_line, parse_manifest_line
from .montecarlo import SimConfig, empirical_density, run_batch
from .params import MotionParams, VelocityStart
from .validation import run_suite

log = logging.getLogger("telegraph_reset")

WORKERS_ENV = "TELEGRAPH_WORKERS"
EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

LAWS = ("pdf", "flow", "sub:1", "sub:2", "lambda-inf", "stationary", "random-stationary")
COMMANDS = ("density", "moments", "simulate", "validate")

# flags that change where output goes or how fast it is produced, not what it is
_NON_REPRODUCIBLE = {"out", "workers", "func", "samples_out", "verbose", "command"}


class UsageError(Exception):
    """Flags that parse but do not make sense together."""


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        value = int(raw)
    except ValueError:
        log.warning("ignoring %s=%r: not an integer", WORKERS_ENV, raw)
        return 1
    return max(value, 1)


def _fmt(value: float | None) -> str:
    if value is None:
        return ""
    return format(value, ".17g")


def _start(text: str) -> VelocityStart:
    try:
        return VelocityStart.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _add_params(sp: argparse.ArgumentParser, need_t: bool = True) -> None:
    sp.add_argument("--lambda", dest="lam", type=float, required=True, help="GCP intensity")
    sp.add_argument("--xi", type=float, required=True, help="reset rate")
    sp.add_argument("--v1", type=float, required=True)
    sp.add_argument("--v2", type=float, required=True)
    if need_t:
        sp.add_argument("--t", type=float, required=True, help="time horizon")
    sp.add_argument("--start", type=_start, default=VelocityStart.fixed(1), help="v1, v2 or random:q")
    sp.add_argument("--out", help="write data here instead of stdout")


def _recorded_args(args: argparse.Namespace) -> dict:
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in _NON_REPRODUCIBLE:
            continue
        out[key] = value.label() if isinstance(value, VelocityStart) else value
    return out


def _manifest(args: argparse.Namespace, p: MotionParams, seed: int | None = None,
              n_paths: int | None = None) -> RunManifest:
    m = RunManifest(params=p, start=args.start, command=args.command, args=_recorded_args(args),
                    seed=seed, n_paths=n_paths, workers=getattr(args, "workers", 1))
    log.info("manifest %s", canonical_json(m.full()))
    return m


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(manifest: RunManifest, header: Sequence[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    buf.write(manifest_line(manifest.reproducible()) + "\r\n")
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# density


def _grid(args: argparse.Namespace, p: MotionParams) -> np.ndarray:
    if args.law in ("stationary", "random-stationary"):
        scale = 10.0 / p.xi if p.xi > 0 else 1.0
        lo, hi = min(p.v2, 0.0) * scale, max(p.v1, 0.0) * scale
    else:
        lo, hi = law.support(args.t, p)
    lo = lo if args.x_min is None else args.x_min
    hi = hi if args.x_max is None else args.x_max
    if not lo < hi:
        raise UsageError(f"empty x range [{lo}, {hi}]")
    return np.linspace(lo, hi, args.grid)


def _start_weights(start: VelocityStart) -> list[tuple[int, float]]:
    return [(j, start.weight(j)) for j in (1, 2) if start.weight(j)]


def _density_row(args: argparse.Namespace, p: MotionParams, x: float) -> list[float | None]:
    t, start = args.t, args.start
    weights = _start_weights(start)
    if args.law == "pdf":
        v = law.pdf(x, t, start, p)
        return [v.ac, v.by_velocity[0], v.by_velocity[1], v.atom or None]
    if args.law == "flow":
        ac = sum(w * law.flow(x, t, j, p).ac for j, w in weights)
        atom = sum(w * law.flow(x, t, j, p).atom for j, w in weights)
        p1 = sum(w * law.subdensity_ac(1, j, x, t, p) for j, w in weights)
        p2 = sum(w * law.subdensity_ac(2, j, x, t, p) for j, w in weights)
        return [ac, p1, p2, atom or None]
    if args.law.startswith("sub:"):
        i = int(args.law[4:])
        parts = [law.subdensity(i, j, x, t, p) for j, _ in weights]
        ac = sum(w * v.ac for (_, w), v in zip(weights, parts))
        atom = sum(w * v.atom for (_, w), v in zip(weights, parts))
        return [ac, ac if i == 1 else None, ac if i == 2 else None, atom or None]
    if args.law == "lambda-inf":
        try:
            return [law.pdf_lambda_inf(x, t, p), None, None, None]
        except SingularPointError:
            return [math.inf, None, None, None]
    if args.law == "stationary":
        j = start.fixed_index
        if j is None:
            return [law.pdf_random_stationary(x, start.q, p), None, None, None]
        return [law.stationary_pdf(x, j, p), None, None, None]
    if start.fixed_index is not None:
        raise UsageError("--law random-stationary needs --start random:q")
    return [law.pdf_random_stationary(x, start.q, p), None, None, None]


def cmd_density(args: argparse.Namespace) -> int:
    p = MotionParams(args.lam, args.xi, args.v1, args.v2)
    manifest = _manifest(args, p)
    rows = []
    for x in _grid(args, p):
        x = float(x)
        rows.append([_fmt(x)] + [_fmt(v) for v in _density_row(args, p, x)])
    _emit(args, _csv_text(manifest, ["x", "ac", "p1", "p2", "atom_at"], rows))
    return EXIT_OK


# moments


def cmd_moments(args: argparse.Namespace) -> int:
    p = MotionParams(args.lam, args.xi, args.v1, args.v2)
    manifest = _manifest(args, p)
    rows = []
    if args.over == "t":
        axis = np.linspace(0.0, args.t_max, args.steps + 1)
        points = [(float(t), p) for t in axis]
    else:
        if args.t is None:
            raise UsageError("--over xi needs --t")
        axis = np.linspace(args.xi_min, args.xi_max, args.steps + 1)
        points = [(args.t, MotionParams(p.lam, float(xi), p.v1, p.v2)) for xi in axis]
    for (t, q), a in zip(points, axis):
        cells = [float(a)]
        cells += [law.mean(t, 1, q), law.mean(t, 2, q)]
        cells += [law.second_moment(t, 1, q), law.second_moment(t, 2, q)]
        cells += [law.variance(t, 1, q), law.variance(t, 2, q)]
        cells += [law.mean_square_distance(q.xi, t, 1, q), law.mean_square_distance(q.xi, t, 2, q)]
        rows.append([_fmt(c) for c in cells])
    header = [args.over, "mean_j1", "mean_j2", "second_j1", "second_j2", "variance", "variance_j2",
              "msd_j1", "msd_j2"]
    _emit(args, _csv_text(manifest, header, rows))
    return EXIT_OK


# simulate


def _estimate(e) -> dict:
    return {"value": e.value, "se": e.se}


def cmd_simulate(args: argparse.Namespace) -> int:
    p = MotionParams(args.lam, args.xi, args.v1, args.v2)
    cfg = SimConfig(args.t, args.n_paths, args.seed, args.workers)
    manifest = _manifest(args, p, cfg.seed, cfg.n_paths)
    batch = run_batch(p, args.start, cfg)
    hist = empirical_density(batch.samples, args.bins, law.support(args.t, p))
    summary = {
        "manifest": manifest.reproducible(),
        "empirical_mean": _estimate(batch.mean),
        "empirical_second": _estimate(batch.second),
        "atom_freq": _estimate(batch.atom_freq),
        "count_v1": batch.count_v1,
        "count_v2": batch.count_v2,
        "reset_mean": batch.reset_mean,
        "histogram": {
            "edges": hist.edges.tolist(),
            "density": hist.density.tolist(),
            "se": hist.se.tolist(),
            "atom_count": hist.atom_count,
        },
    }
    _emit(args, json.dumps(summary, indent=2, sort_keys=True) + "\n")
    if args.samples_out:
        s = batch.samples
        rows = [[_fmt(float(x)), str(int(v)), str(int(a)), str(int(r))]
                for x, v, a, r in zip(s.position, s.velocity, s.atom, s.resets)]
        with open(args.samples_out, "w", newline="") as fh:
            fh.write(_csv_text(manifest, ["position", "velocity", "atom", "resets"], rows))
    return EXIT_OK


# validate


def _report_dict(r) -> dict:
    d = r.to_dict()
    return {k: (None if isinstance(v, float) and not math.isfinite(v) else v) for k, v in d.items()}


def cmd_validate(args: argparse.Namespace) -> int:
    reports = run_suite(args.suite, seed=args.seed, workers=args.workers)
    failed = [r for r in reports if not r.passed]
    record = {"args": {"seed": args.seed, "suite": args.suite}, "command": "validate",
              "tool_version": RunManifest.tool_version}
    body = {"manifest": record, "n_checks": len(reports), "n_failed": len(failed),
            "checks": [_report_dict(r) for r in reports]}
    _emit(args, json.dumps(body, indent=2, sort_keys=True) + "\n")
    for r in failed:
        log.error("FAILED %s: observed %r, target %r, tolerance %r", r.check_id, r.observed, r.target, r.tolerance)
    log.info("%d/%d checks passed", len(reports) - len(failed), len(reports))
    return EXIT_FAILED if failed else EXIT_OK


# replay


def _argv_from_record(record: dict) -> list[str]:
    if not isinstance(record.get("args"), dict) or record.get("command") not in COMMANDS:
        raise UsageError("file has no replayable manifest")
    args = dict(record["args"])
    argv = [record["command"]]
    for key, value in args.items():
        if value is None:
            continue
        argv += [f"--{key.replace('_', '-')}" if key != "lam" else "--lambda", str(value)]
    return argv


def cmd_replay(args: argparse.Namespace) -> int:
    with open(args.file) as fh:
        text = fh.read()
    try:
        if text.startswith("#"):
            record = parse_manifest_line(text.splitlines()[0])
        else:
            record = json.loads(text)["manifest"]
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read a manifest from {args.file}: {exc}") from exc
    argv = _argv_from_record(record)
    if args.out:
        argv += ["--out", args.out]
    log.info("replaying: %s", shlex.join(argv))
    return main(argv)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="telegraph-reset", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log at INFO level")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("density", help="evaluate a density on an x-grid (CSV)")
    _add_params(d)
    d.add_argument("--law", choices=LAWS, default="pdf")
    d.add_argument("--grid", type=_positive_int, default=201, help="number of x points")
    d.add_argument("--x-min", type=float)
    d.add_argument("--x-max", type=float)
    d.set_defaults(func=cmd_density)

    m = sub.add_parser("moments", help="moments, variance and mean-square distance on a grid (CSV)")
    _add_params(m, need_t=False)
    m.add_argument("--over", choices=("t", "xi"), default="t", help="grid variable")
    m.add_argument("--t-max", type=float, default=5.0)
    m.add_argument("--t", type=float, help="fixed time for --over xi")
    m.add_argument("--xi-min", type=float, default=0.0)
    m.add_argument("--xi-max", type=float, default=20.0)
    m.add_argument("--steps", type=_positive_int, default=100)
    m.set_defaults(func=cmd_moments)

    s = sub.add_parser("simulate", help="Monte Carlo summary (JSON)")
    _add_params(s)
    s.add_argument("--n-paths", type=_positive_int, default=100_000)
    s.add_argument("--seed", type=_seed, default=0)
    s.add_argument("--workers", type=_positive_int, default=default_workers())
    s.add_argument("--bins", type=_positive_int, default=40)
    s.add_argument("--samples-out", help="also write raw samples as CSV")
    s.set_defaults(func=cmd_simulate)

    v = sub.add_parser("validate", help="run a validation suite (JSON); exit 1 on failure")
    v.add_argument("--suite", choices=("fast", "full"), default="fast")
    v.add_argument("--seed", type=_seed, default=20240601)
    v.add_argument("--workers", type=_positive_int, default=default_workers())
    v.add_argument("--out")
    v.set_defaults(func=cmd_validate)

    r = sub.add_parser("replay", help="rerun the command recorded in an output file's manifest")
    r.add_argument("file")
    r.add_argument("--out")
    r.set_defaults(func=cmd_replay)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    handler: Callable[[argparse.Namespace], int] = args.func
    try:
        return handler(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        log.error("%s", exc)
        return EXIT_USAGE
    except TelegraphError as exc:
        log.error("%s", exc)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
