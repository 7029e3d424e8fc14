"""Sweeps over orness grids and the timing benchmark, with CSV emission.

A sweep evaluates one or more weight-determination methods at every point
of an orness grid and records achieved orness, dispersion and the full
weight vector per point; this is the data behind the comparison plots.
Points where a method cannot deliver (maximum entropy at orness 0/1, or
its unstable region) are recorded with an explanatory status rather than
dropped.  CSV files are written atomically and deterministically: no
timestamps, numbers at 17 significant digits so parsing them back is
lossless.
"""

import csv
import os
import tempfile
import time
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .baselines import (
    CalibrationError,
    MaxentInstabilityError,
    UnsupportedOrnessError,
    _calibrated_exponential_array,
    _maxent_array,
    _no_preset_exponential_array,
    exponential_weights,
    exponential_weights_no_preset,
    maxent_weights,
)
from .core import WeightVector, dispersion, orness
from .linear import _weight_array, linear_weights
from .core import OrnessTarget

METHOD_LINEAR = "linear"
METHOD_EXPONENTIAL = "exponential"
METHOD_EXPONENTIAL_NO_PRESET = "exponential-no-preset"
METHOD_MAXENT = "maxent"

ALL_METHODS = (
    METHOD_LINEAR,
    METHOD_EXPONENTIAL,
    METHOD_EXPONENTIAL_NO_PRESET,
    METHOD_MAXENT,
)

STATUS_OK = "ok"
STATUS_UNSTABLE = "unstable"
STATUS_UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class MethodReport:
    """One method evaluated at one orness request."""

    method: str
    beta: Optional[float]
    n: int
    requested_orness: float
    achieved_orness: Optional[float]
    dispersion: Optional[float]
    w: Optional[tuple]
    status: str


@dataclass(frozen=True)
class BenchReport:
    """Wall time for one method over the benchmark grid.

    ``best_time`` is the minimum over reps -- the usual noise-robust
    statistic for microbenchmarks -- and is what ``relative_time`` is
    normalized from; ``mean_time`` is kept for context.
    """

    method: str
    beta: Optional[float]
    n: int
    reps: int
    mean_time: float
    best_time: float
    relative_time: float


def evaluate_method(
    method: str, requested: float, n: int, beta: Optional[float] = None
) -> MethodReport:
    """Run one method at one grid point, capturing failures as statuses."""
    try:
        if method == METHOD_LINEAR:
            b = 1.5 if beta is None else beta
            vec = linear_weights(OrnessTarget(requested, b), n)
            beta_out = b
        elif method == METHOD_EXPONENTIAL:
            vec, _ = exponential_weights(requested, n)
            beta_out = None
        elif method == METHOD_EXPONENTIAL_NO_PRESET:
            vec = exponential_weights_no_preset(requested, n)
            beta_out = None
        elif method == METHOD_MAXENT:
            vec = maxent_weights(requested, n)
            beta_out = None
        else:
            raise ValueError(f"unknown method {method!r}")
    except UnsupportedOrnessError:
        return MethodReport(method, beta, n, requested, None, None, None, STATUS_UNSUPPORTED)
    except (MaxentInstabilityError, CalibrationError):
        return MethodReport(method, beta, n, requested, None, None, None, STATUS_UNSTABLE)
    return MethodReport(
        method=method,
        beta=beta_out,
        n=n,
        requested_orness=requested,
        achieved_orness=orness(vec),
        dispersion=dispersion(vec),
        w=tuple(float(v) for v in vec.w),
        status=STATUS_OK,
    )


def sweep(
    n: int,
    methods: Sequence[str],
    betas: Sequence[float] = (1.5,),
    steps: int = 101,
) -> list:
    """Evaluate ``methods`` on the grid orness = k/(steps-1), k = 0..steps-1.

    Linear rows are produced once per beta; the other methods ignore
    betas.  Rows come back sorted by (method, requested_orness, beta).
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2; got {steps}")
    if not methods:
        raise ValueError("at least one method is required")
    grid = [k / (steps - 1) for k in range(steps)]
    rows = []
    for method in methods:
        if method == METHOD_LINEAR:
            for requested in grid:
                for beta in betas:
                    rows.append(evaluate_method(method, requested, n, beta))
        else:
            for requested in grid:
                rows.append(evaluate_method(method, requested, n))
    rows.sort(
        key=lambda r: (r.method, r.requested_orness, r.beta if r.beta is not None else -1.0)
    )
    return rows


def _fmt(value) -> str:
    if value is None:
        return ""
    return format(value, ".17g")


def sweep_header(n: int) -> list:
    return (
        ["method", "beta", "n", "requested_orness", "achieved_orness", "dispersion", "status"]
        + [f"w{i}" for i in range(1, n + 1)]
    )


def sweep_rows_as_records(rows, n: int):
    """Rows as flat string records matching :func:`sweep_header`."""
    records = []
    for r in rows:
        weights = list(r.w) if r.w is not None else [None] * n
        records.append(
            [
                r.method,
                _fmt(r.beta),
                str(r.n),
                _fmt(r.requested_orness),
                _fmt(r.achieved_orness),
                _fmt(r.dispersion),
                r.status,
            ]
            + [_fmt(v) for v in weights]
        )
    return records


def write_sweep_csv(rows, n: int, path: str, provenance: str = "") -> None:
    """Write a sweep to ``path`` atomically (temp file, then rename).

    The first line is a ``#`` comment carrying the tool version and the
    flags that produced the file; the data below it never varies between
    identical runs.
    """
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(f"# owakit {__version__} {provenance}".rstrip() + "\n")
            writer = csv.writer(fh)
            writer.writerow(sweep_header(n))
            writer.writerows(sweep_rows_as_records(rows, n))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_sweep_csv(path: str) -> list:
    """Parse a sweep CSV back into :class:`MethodReport` rows."""

    def opt_float(s):
        return None if s == "" else float(s)

    rows = []
    with open(path, newline="") as fh:
        lines = [line for line in fh if not line.startswith("#")]
    reader = csv.reader(lines)
    header = next(reader)
    n = len(header) - 7
    for rec in reader:
        weights = [opt_float(v) for v in rec[7:]]
        rows.append(
            MethodReport(
                method=rec[0],
                beta=opt_float(rec[1]),
                n=int(rec[2]),
                requested_orness=float(rec[3]),
                achieved_orness=opt_float(rec[4]),
                dispersion=opt_float(rec[5]),
                w=None if weights[0] is None else tuple(weights),
                status=rec[6],
            )
        )
    assert all(r.n == n for r in rows) or not rows
    return rows


def report_to_dict(r: MethodReport) -> dict:
    return {
        "method": r.method,
        "beta": r.beta,
        "n": r.n,
        "requested_orness": r.requested_orness,
        "achieved_orness": r.achieved_orness,
        "dispersion": r.dispersion,
        "status": r.status,
        "w": list(r.w) if r.w is not None else None,
    }


# ---------------------------------------------------------------------------
# Benchmark
# ---------------------------------------------------------------------------

def _bench_variants():
    # Six rows: the linear family at its three reference shapes, the
    # exponential with and without preset, and maximum entropy.
    return [
        (METHOD_LINEAR, 1.0),
        (METHOD_LINEAR, 1.25),
        (METHOD_LINEAR, 1.5),
        (METHOD_EXPONENTIAL, None),
        (METHOD_EXPONENTIAL_NO_PRESET, None),
        (METHOD_MAXENT, None),
    ]


def _timed_pass(method: str, beta: Optional[float], n: int, grid) -> float:
    """One timed traversal of the grid.  Only weight generation is inside
    the timed region; failures at unreachable points count as work done."""
    start = time.perf_counter()
    if method == METHOD_LINEAR:
        for a in grid:
            _weight_array(a, n, beta)
    elif method == METHOD_EXPONENTIAL:
        for a in grid:
            _calibrated_exponential_array(a, n)
    elif method == METHOD_EXPONENTIAL_NO_PRESET:
        for a in grid:
            _no_preset_exponential_array(a, n)
    elif method == METHOD_MAXENT:
        for a in grid:
            if a in (0.0, 1.0):
                continue
            try:
                _maxent_array(a, n)
            except (MaxentInstabilityError, ValueError):
                pass
    else:
        raise ValueError(f"unknown method {method!r}")
    return time.perf_counter() - start


def bench(n_list: Sequence[int], reps: int = 20, grid_points: int = 101) -> list:
    """Time every method over ``reps`` traversals of a fixed orness grid.

    Returns one :class:`BenchReport` per (method, n); within each n the
    relative time is normalized so the fastest method reads 1.0.
    """
    if reps < 1:
        raise ValueError(f"reps must be >= 1; got {reps}")
    for n in n_list:
        if n < 3:
            raise ValueError(f"benchmark sizes must be >= 3; got {n}")
    grid = [k / (grid_points - 1) for k in range(grid_points)]
    reports = []
    for n in n_list:
        measured = []
        for method, beta in _bench_variants():
            _timed_pass(method, beta, n, grid)  # warm-up, untimed
            times = [_timed_pass(method, beta, n, grid) for _ in range(reps)]
            measured.append((method, beta, float(np.mean(times)), float(np.min(times))))
        fastest = min(best for _, _, _, best in measured)
        for method, beta, mean_time, best_time in measured:
            reports.append(
                BenchReport(
                    method=method,
                    beta=beta,
                    n=n,
                    reps=reps,
                    mean_time=mean_time,
                    best_time=best_time,
                    relative_time=best_time / fastest,
                )
            )
    return reports
