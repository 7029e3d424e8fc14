"""Command-line front end: gen, sweep and bench.

Exit codes: 0 success, 2 usage error, 3 method-domain error (e.g.
maximum entropy at orness 0 or 1), 4 I/O error.
"""

import argparse
import json
import sys

from . import __version__
from .baselines import (
    CalibrationError,
    MaxentInstabilityError,
    UnsupportedOrnessError,
)
from .reports import (
    ALL_METHODS,
    METHOD_EXPONENTIAL,
    METHOD_EXPONENTIAL_NO_PRESET,
    METHOD_LINEAR,
    METHOD_MAXENT,
    STATUS_OK,
    bench,
    evaluate_method,
    report_to_dict,
    sweep,
    sweep_header,
    sweep_rows_as_records,
    write_sweep_csv,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_METHOD_DOMAIN = 3
EXIT_IO = 4

_METHOD_FLAG = {
    "linear": [METHOD_LINEAR],
    "exp": [METHOD_EXPONENTIAL],
    "exp-nopreset": [METHOD_EXPONENTIAL_NO_PRESET],
    "maxent": [METHOD_MAXENT],
    "all": list(ALL_METHODS),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="owakit",
        description="OWA operator weight determination for a desired orness",
    )
    parser.add_argument("--version", action="version", version=f"owakit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate one weight vector and its metrics")
    gen.add_argument("--n", type=int, required=True, help="operator size")
    gen.add_argument("--orness", type=float, required=True, help="desired orness in [0, 1]")
    gen.add_argument(
        "--method", choices=sorted(_METHOD_FLAG), default="linear", help="weight method"
    )
    gen.add_argument("--beta", type=float, default=1.5, help="linear-family shape in [1, 1.5]")
    gen.add_argument(
        "--format", choices=["plain", "json", "csv"], default="plain", help="output format"
    )

    sw = sub.add_parser("sweep", help="evaluate methods over an orness grid, write CSV")
    sw.add_argument("--n", type=int, required=True, help="operator size")
    sw.add_argument(
        "--method", choices=sorted(_METHOD_FLAG), default="all", help="method(s) to sweep"
    )
    sw.add_argument(
        "--beta",
        type=float,
        action="append",
        help="linear-family shape; repeat the flag for several (default 1.5)",
    )
    sw.add_argument("--steps", type=int, default=101, help="grid points over [0, 1]")
    sw.add_argument("--out", required=True, help="output CSV path (written atomically)")

    be = sub.add_parser("bench", help="time every method over a fixed orness grid")
    be.add_argument(
        "--n", type=int, action="append", required=True, help="operator size; repeatable"
    )
    be.add_argument("--reps", type=int, default=20, help="timed repetitions per method")
    be.add_argument(
        "--format", choices=["plain", "csv", "json"], default="plain", help="output format"
    )
    return parser


def _cmd_gen(args) -> int:
    if not 0.0 <= args.orness <= 1.0:
        print(f"orness must be in [0, 1]; got {args.orness}", file=sys.stderr)
        return EXIT_USAGE
    if args.n < 1:
        print(f"n must be >= 1; got {args.n}", file=sys.stderr)
        return EXIT_USAGE
    reports = []
    for method in _METHOD_FLAG[args.method]:
        try:
            if method == METHOD_MAXENT and args.orness in (0.0, 1.0):
                raise UnsupportedOrnessError(
                    "maximum-entropy weights are undefined at orness 0 and 1 "
                    "(every weight must be strictly positive)"
                )
            beta = args.beta if method == METHOD_LINEAR else None
            report = evaluate_method(method, args.orness, args.n, beta)
        except (UnsupportedOrnessError, MaxentInstabilityError, CalibrationError) as exc:
            print(f"{method}: {exc}", file=sys.stderr)
            return EXIT_METHOD_DOMAIN
        except ValueError as exc:
            print(f"{method}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if report.status != STATUS_OK:
            print(
                f"{method}: no valid weights at orness {args.orness} "
                f"(status {report.status})",
                file=sys.stderr,
            )
            return EXIT_METHOD_DOMAIN
        reports.append(report)

    if args.format == "json":
        payload = [report_to_dict(r) for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    elif args.format == "csv":
        print(",".join(sweep_header(args.n)))
        for record in sweep_rows_as_records(reports, args.n):
            print(",".join(record))
    else:
        for r in reports:
            print(f"method: {r.method}" + (f" (beta={r.beta})" if r.beta is not None else ""))
            print("weights: " + " ".join(format(v, ".10g") for v in r.w))
            print(f"orness: {r.achieved_orness:.10g}")
            print(f"dispersion: {r.dispersion:.10g}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if args.steps < 2:
        print(f"steps must be >= 2; got {args.steps}", file=sys.stderr)
        return EXIT_USAGE
    if args.n < 2:
        print(f"n must be >= 2 for a sweep; got {args.n}", file=sys.stderr)
        return EXIT_USAGE
    betas = args.beta if args.beta else [1.5]
    methods = _METHOD_FLAG[args.method]
    rows = sweep(args.n, methods, betas=betas, steps=args.steps)
    provenance = (
        f"sweep --n {args.n} --method {args.method} "
        f"--steps {args.steps} betas={','.join(format(b, 'g') for b in betas)}"
    )
    try:
        write_sweep_csv(rows, args.n, args.out, provenance)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_bench(args) -> int:
    if args.reps < 1:
        print(f"reps must be >= 1; got {args.reps}", file=sys.stderr)
        return EXIT_USAGE
    if any(n < 3 for n in args.n):
        print("benchmark sizes must be >= 3", file=sys.stderr)
        return EXIT_USAGE
    reports = bench(args.n, reps=args.reps)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "method": r.method,
                        "beta": r.beta,
                        "n": r.n,
                        "reps": r.reps,
                        "mean_time": r.mean_time,
                        "best_time": r.best_time,
                        "relative_time": r.relative_time,
                    }
                    for r in reports
                ],
                indent=2,
            )
        )
    elif args.format == "csv":
        print("method,beta,n,reps,mean_time,best_time,relative_time")
        for r in reports:
            beta = "" if r.beta is None else format(r.beta, "g")
            print(
                f"{r.method},{beta},{r.n},{r.reps},"
                f"{r.mean_time:.17g},{r.best_time:.17g},{r.relative_time:.17g}"
            )
    else:
        print(
            f"{'method':<24} {'n':>5} {'reps':>5} {'mean [s]':>12} "
            f"{'best [s]':>12} {'relative':>9}"
        )
        for r in reports:
            label = r.method if r.beta is None else f"{r.method} (beta={r.beta:g})"
            print(
                f"{label:<24} {r.n:>5} {r.reps:>5} "
                f"{r.mean_time:>12.6f} {r.best_time:>12.6f} {r.relative_time:>9.2f}"
            )
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen":
        return _cmd_gen(args)
    if args.command == "sweep":
        return _cmd_sweep(args)
    return _cmd_bench(args)


if __name__ == "__main__":
    sys.exit(main())
