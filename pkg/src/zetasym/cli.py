"""Command-line front end.

Subcommands: thresholds, counterexample, scan, eval, tau-table.
Exit codes: 0 = all claims verified, 1 = claim failed, 2 = usage error,
3 = numerical failure.  Configuration precedence: flags > ZS_* environment
variables > defaults; there is no config file, so every run is fully
described by its command line.
"""

from __future__ import annotations

import argparse
import cmath
import os
import sys
import time

from . import bounds, report, specfun, tau, verify
from .config import EvalConfig
from .errors import DomainError, ZetaSymError

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def _env_precision() -> float:
    raw = os.environ.get("ZS_PRECISION")
    return float(raw) if raw else 1e-12


def _env_workers() -> int:
    raw = os.environ.get("ZS_THREADS")
    return int(raw) if raw else 1


def _config(precision: float | None) -> EvalConfig:
    return EvalConfig(target_abs_err=precision if precision is not None
                      else _env_precision())


def parse_range(text: str) -> tuple[float, float, float]:
    """lo:hi:step in one token; a bare number is a single-point range."""
    parts = text.split(":")
    if len(parts) == 1:
        v = float(parts[0])
        return (v, v, 1.0)
    if len(parts) != 3:
        raise DomainError(f"range must be lo:hi:step, got {text!r}")
    lo, hi, step = (float(p) for p in parts)
    if step <= 0 or hi < lo:
        raise DomainError(f"invalid range {text!r}")
    return (lo, hi, step)


def parse_complex(text: str) -> complex:
    """Complex literal like 0.5+10i (i or j accepted)."""
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(cleaned)
    except ValueError as exc:
        raise DomainError(f"cannot parse complex literal {text!r}") from exc


def _positive(text: str) -> float:
    v = float(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def cmd_thresholds(args: argparse.Namespace) -> int:
    cfg_note = {"tol": args.tol}
    started = time.perf_counter()
    results: dict = {}
    ok = True
    wanted = ["G", "H"] if args.function == "both" else [args.function]
    for name in wanted:
        if name == "G":
            res = verify.find_threshold(bounds.G, 6.0, 7.0, args.tol)
            contained = 6.29072 <= res.lo and res.hi <= 6.29073
        else:
            res = verify.find_threshold(bounds.H, 3.5, 4.0, args.tol)
            contained = 3.8024 < res.lo and res.hi < 3.8085
        ok = ok and contained
        results[name] = {
            "bracket_lo": report.fmt(res.lo), "bracket_hi": report.fmt(res.hi),
            "f_lo": report.fmt(res.f_lo), "f_hi": report.fmt(res.f_hi),
            "iterations": res.iterations, "reference_bracket_contained": contained,
        }
        print(f"{name}: root in [{res.lo:.8f}, {res.hi:.8f}]  "
              f"({res.iterations} bisections, "
              f"{'contained in' if contained else 'OUTSIDE'} reference bracket)")
    if args.json:
        report.write_json(args.json, report.output_record(
            "thresholds", cfg_note, results))
    print(f"elapsed: {1000 * (time.perf_counter() - started):.2f} ms")
    return EXIT_OK if ok else EXIT_CLAIM_FAILED


def cmd_counterexample(args: argparse.Namespace) -> int:
    precision = args.precision if args.precision is not None else _env_precision()
    if precision > 1e-12:
        print(f"error: precision {precision:g} is insufficient for an 1e-8 "
              "scale claim (need <= 1e-12)", file=sys.stderr)
        return EXIT_USAGE
    cfg = EvalConfig(target_abs_err=precision)
    started = time.perf_counter()
    value = verify.verify_counterexample(cfg, t=args.t)
    at_star = abs(args.t - verify.COUNTEREXAMPLE_T) < 1e-12
    violated = value <= -8e-8
    status = "violation reproduced" if violated else "no violation"
    print(f"|zeta(0.48 - {args.t}i)| / |zeta(0.52 + {args.t}i)| - 1 = {value:.6e}")
    print(f"status: {status}")
    if args.json:
        report.write_json(args.json, report.output_record(
            "counterexample", {"t": report.fmt(args.t), "precision": report.fmt(precision)},
            {"ratio_minus_one": report.fmt(value), "violation": violated}))
    print(f"elapsed: {1000 * (time.perf_counter() - started):.2f} ms")
    if at_star:
        return EXIT_OK if violated else EXIT_CLAIM_FAILED
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    cfg = _config(args.precision)
    workers = args.workers if args.workers is not None else _env_workers()
    started = time.perf_counter()
    if args.target == "zeta":
        rep = verify.scan_zeta_inequality(args.sigma, args.t, cfg,
                                          workers=workers,
                                          allow_outside=args.allow_outside_region)
    else:
        table = tau.tau_table(args.nmax)
        rep = verify.scan_tau_inequality(args.sigma, args.t, table, cfg,
                                         workers=workers,
                                         allow_outside=args.allow_outside_region)
    elapsed_ms = 1000 * (time.perf_counter() - started)
    if args.csv:
        report.write_csv(args.csv, ("sigma", "t", "margin", "flag"), rep.points)
    summary = {
        "target": args.target,
        "sigma_range": [report.fmt(v) for v in rep.sigma_range],
        "t_range": [report.fmt(v) for v in rep.t_range],
        "points_checked": rep.points_checked,
        "violations": [[report.fmt(x) for x in v] for v in rep.violations],
        "violation_count": len(rep.violations),
        "min_margin": report.fmt(rep.min_margin),
        "min_margin_at": [report.fmt(v) for v in rep.min_margin_at]
        if rep.min_margin_at else None,
        "near_zero_flags": [[report.fmt(x) for x in v] for v in rep.near_zero_flags],
    }
    if args.json:
        report.write_json(args.json, report.output_record(
            "scan", {"target": args.target,
                     "sigma": ":".join(report.fmt(v) for v in args.sigma),
                     "t": ":".join(report.fmt(v) for v in args.t)}, summary))
    if args.figure:
        sigmas = verify.grid_points(*rep.sigma_range)
        ts = verify.grid_points(*rep.t_range)
        margins = [[m for (_, _, m, _) in rep.points[i * len(ts):(i + 1) * len(ts)]]
                   for i in range(len(sigmas))]
        report.render_margin_figure(
            args.figure, sigmas, ts, margins,
            f"{args.target} symmetry margin (min {rep.min_margin:.3e})")
    print(f"points: {rep.points_checked}  violations: {len(rep.violations)}  "
          f"flagged: {len(rep.near_zero_flags)}  min margin: {rep.min_margin:.6e}"
          f" at {rep.min_margin_at}")
    print(f"elapsed: {elapsed_ms:.1f} ms")
    return EXIT_OK if not rep.violations else EXIT_CLAIM_FAILED


def cmd_eval(args: argparse.Namespace) -> int:
    cfg = _config(args.precision)
    table = None
    for text in args.points:
        z = parse_complex(text)
        name = args.function
        if name == "zeta":
            value = specfun.zeta(z, cfg)
        elif name == "F":
            if table is None:
                table = tau.tau_table(cfg.series_nmax)
            value = tau.f_value(z, table, cfg)
        elif name == "log_gamma":
            value = specfun.log_gamma(z, cfg)
        elif name == "h":
            value = specfun.h_value(z, cfg)
        elif name == "re_digamma":
            value = specfun.re_digamma(z.real, z.imag, cfg)
        elif name == "G":
            value = bounds.G(z.real)
        elif name == "H":
            value = bounds.H(z.real)
        else:  # J(sigma, t) with sigma + i t packed as one literal
            value = bounds.J(z.real, z.imag)
        if isinstance(value, complex):
            rendered = f"{report.fmt(value.real)} + {report.fmt(value.imag)}i"
        else:
            rendered = report.fmt(value)
        print(f"{name}({text}) = {rendered}   [target_abs_err={cfg.target_abs_err:g}]")
    return EXIT_OK


def cmd_tau_table(args: argparse.Namespace) -> int:
    if args.nmax < 1:
        print("error: --nmax must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    table = tau.tau_table(args.nmax)
    rows = [(n, table.coeffs[n]) for n in range(1, args.nmax + 1)]
    if args.csv:
        report.write_csv(args.csv, ("n", "tau"), rows)
    else:
        print("n,tau")
        for n, value in rows:
            print(f"{n},{value}")
    if args.check:
        tau.check_table(table)
        print(f"check: multiplicativity, Hecke recurrence and size bound hold "
              f"for n <= {args.nmax}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetasym",
        description="Verify sharpened symmetry inequalities for zeta and the "
                    "Ramanujan tau Dirichlet series.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("thresholds", help="bisect the G/H threshold functions")
    p.add_argument("--function", choices=["G", "H", "both"], default="both")
    p.add_argument("--tol", type=_positive, default=1e-6)
    p.add_argument("--json", help="write a JSON report to this path")
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("counterexample",
                       help="evaluate the near-threshold zeta ratio")
    p.add_argument("--t", type=float, default=verify.COUNTEREXAMPLE_T)
    p.add_argument("--precision", type=_positive, default=None)
    p.add_argument("--json", help="write a JSON report to this path")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("scan", help="grid-scan a symmetry inequality")
    p.add_argument("--target", choices=["zeta", "tau"], required=True)
    p.add_argument("--sigma", type=parse_range, required=True,
                   metavar="LO:HI:STEP")
    p.add_argument("--t", type=parse_range, required=True, metavar="LO:HI:STEP")
    p.add_argument("--precision", type=_positive, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--nmax", type=int, default=64,
                   help="tau table length for --target tau")
    p.add_argument("--allow-outside-region", action="store_true",
                   help="permit grids outside the proven region (demonstrations)")
    p.add_argument("--csv", help="write per-point margins as CSV")
    p.add_argument("--json", help="write the scan summary as JSON")
    p.add_argument("--figure", help="render a margin heatmap image to this path")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("eval", help="evaluate one function at given points")
    p.add_argument("function",
                   choices=["zeta", "F", "G", "H", "J", "h", "log_gamma",
                            "re_digamma"])
    p.add_argument("points", nargs="+",
                   help="complex literals like 0.5+10i (two-variable "
                        "functions read sigma from the real and t from the "
                        "imaginary part)")
    p.add_argument("--precision", type=_positive, default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("tau-table", help="emit exact tau(n) values as CSV")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="verify multiplicativity and the Hecke recurrence")
    p.add_argument("--csv", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_tau_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ZetaSymError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
