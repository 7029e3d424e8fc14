"""Relative cost of the three methods.

Times each method over a 101-point orness grid.  The linear method needs
no iteration at all; the preset exponential pays for a bisection per
point, and maximum entropy for a root solve per point.  Absolute numbers
are machine-specific; the ordering is the stable part.
"""

from owakit.reports import bench

for report in bench([10, 100], reps=5):
    label = report.method if report.beta is None else f"{report.method} (beta={report.beta:g})"
    print(
        f"n={report.n:<4} {label:<26} best {report.best_time * 1e3:8.3f} ms"
        f"   relative {report.relative_time:7.2f}"
    )
