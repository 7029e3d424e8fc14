"""Comparison methods: Yager's exponential family and maximum-entropy weights.

The exponential family fixes a geometric shape for the weights and needs
its internal parameter calibrated ("preset") to hit a requested orness;
calibration here is bisection on the monotone parameter-to-orness map.

The maximum-entropy method maximizes dispersion subject to the orness
constraint.  The optimum has geometric structure, which reduces the whole
problem to one polynomial equation in the first weight, solved by a
safeguarded Newton/bisection hybrid.  Near extreme orness and large n the
polynomial becomes ill-conditioned (catastrophic cancellation between
terms of order A**(n-1)); results that fail validation raise a flagged
error instead of returning garbage.
"""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .core import WeightVector, orness as _orness, uniform_weights

# Successful results must reproduce the requested orness this closely.
ORNESS_TOL = 1e-9

_BISECT_PARAM_TOL = 1e-12
_BISECT_MAX_ITER = 200


class UnsupportedOrnessError(ValueError):
    """Orness 0 or 1 requested from the maximum-entropy method, whose
    objective requires every weight strictly positive."""


class CalibrationError(RuntimeError):
    """Exponential preset failed to converge."""

    def __init__(self, message, parameter, residual):
        super().__init__(message)
        self.parameter = parameter
        self.residual = residual


class MaxentInstabilityError(RuntimeError):
    """Maximum-entropy solve broke down numerically (the known failure
    region near extreme orness for large n)."""

    def __init__(self, message, orness, n, residual=None):
        super().__init__(message)
        self.orness = orness
        self.n = n
        self.residual = residual


@dataclass(frozen=True)
class CalibrationResult:
    parameter: float
    achieved_orness: float
    iterations: int
    converged: bool


# ---------------------------------------------------------------------------
# Exponential family
# ---------------------------------------------------------------------------

def _exponential_array(a: float, n: int, or_like: bool) -> np.ndarray:
    # Or-like: w_i = a(1-a)^(i-1) for i < n, w_n = (1-a)^(n-1); telescopes to 1.
    w = np.empty(n)
    w[: n - 1] = a * (1.0 - a) ** np.arange(n - 1)
    w[n - 1] = (1.0 - a) ** (n - 1)
    if not or_like:
        w = w[::-1]
    return w


def exponential_raw(a: float, n: int, kind: str = "or-like") -> WeightVector:
    """Geometric weight vector with shape parameter ``a`` in [0, 1].

    ``kind`` is "or-like" (mass leans toward the largest input for high
    ``a``) or "and-like" (the reverse of the same construction).
    """
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"parameter a must be in [0, 1]; got {a}")
    if n < 2:
        raise ValueError(f"n must be >= 2; got {n}")
    if kind not in ("or-like", "and-like"):
        raise ValueError(f"kind must be 'or-like' or 'and-like'; got {kind!r}")
    return WeightVector(_exponential_array(a, n, kind == "or-like"))


def _exponential_orness(a: float, n: int, or_like: bool) -> float:
    w = _exponential_array(a, n, or_like)
    coef = np.arange(n - 1, -1, -1, dtype=float)
    return float(coef @ w / (n - 1))


def _calibrated_exponential_array(orness: float, n: int):
    or_like = orness > 0.5
    # Or-like orness rises 0 -> 1 with a; and-like falls 1 -> 0.
    lo, hi = 0.0, 1.0
    iterations = 0
    for iterations in range(1, _BISECT_MAX_ITER + 1):
        mid = 0.5 * (lo + hi)
        val = _exponential_orness(mid, n, or_like)
        rising = or_like
        if (val < orness) == rising:
            lo = mid
        else:
            hi = mid
        if hi - lo <= _BISECT_PARAM_TOL:
            break
    a = 0.5 * (lo + hi)
    w = _exponential_array(a, n, or_like)
    coef = np.arange(n - 1, -1, -1, dtype=float)
    achieved = float(coef @ w / (n - 1))
    return w, a, achieved, iterations


def exponential_weights(orness: float, n: int):
    """Exponential weights calibrated so the achieved orness matches.

    Returns ``(WeightVector, CalibrationResult)``.  Raises
    :class:`CalibrationError` if bisection cannot reach the requested
    orness within tolerance (does not happen for valid inputs; the map is
    continuous and monotone on [0, 1]).
    """
    if not 0.0 <= orness <= 1.0:
        raise ValueError(f"orness must be in [0, 1]; got {orness}")
    if n < 2:
        raise ValueError(f"n must be >= 2; got {n}")
    w, a, achieved, iterations = _calibrated_exponential_array(orness, n)
    residual = abs(achieved - orness)
    converged = residual <= ORNESS_TOL
    if not converged:
        raise CalibrationError(
            f"exponential preset did not converge: best parameter {a:.17g} "
            f"leaves orness residual {residual:.3g}",
            parameter=a,
            residual=residual,
        )
    result = CalibrationResult(
        parameter=a, achieved_orness=achieved, iterations=iterations, converged=True
    )
    return WeightVector(w), result


def _no_preset_exponential_array(orness: float, n: int) -> np.ndarray:
    # Parameter used directly, no calibration: the classical shortcut whose
    # achieved orness drifts from the request away from the endpoints.
    if orness > 0.5:
        return _exponential_array(orness, n, True)
    return _exponential_array(1.0 - orness, n, False)


def exponential_weights_no_preset(orness: float, n: int) -> WeightVector:
    """Exponential weights with the shape parameter set to the requested
    orness directly (no calibration).  Exact only at 0 and 1; included to
    mirror the no-preset rows of the timing comparison."""
    if not 0.0 <= orness <= 1.0:
        raise ValueError(f"orness must be in [0, 1]; got {orness}")
    if n < 2:
        raise ValueError(f"n must be >= 2; got {n}")
    return WeightVector(_no_preset_exponential_array(orness, n))


# ---------------------------------------------------------------------------
# Maximum entropy
# ---------------------------------------------------------------------------

def _newton_bisection(func, dfunc, lo, hi, xtol=1e-15, maxiter=120):
    """Root of ``func`` bracketed in [lo, hi]; Newton steps when they stay
    in the bracket and halve it fast enough, bisection otherwise."""
    flo = func(lo)
    fhi = func(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise ValueError("root not bracketed")
    x = 0.5 * (lo + hi)
    dx_old = abs(hi - lo)
    dx = dx_old
    f = func(x)
    for _ in range(maxiter):
        df = dfunc(x)
        with np.errstate(over="ignore", invalid="ignore"):
            newton_ok = (
                df != 0.0
                and np.isfinite(df)
                and np.isfinite(f)
                and ((x - hi) * df - f) * ((x - lo) * df - f) < 0.0
                and abs(2.0 * f) <= abs(dx_old * df)
            )
        if newton_ok:
            dx_old = dx
            dx = f / df
            x_new = x - dx
        else:
            dx_old = dx
            dx = 0.5 * (hi - lo)
            x_new = lo + dx
        if abs(dx) < xtol * max(1.0, abs(x_new)):
            return x_new
        x = x_new
        f = func(x)
        if f == 0.0 or not np.isfinite(f):
            return x
        if np.sign(f) == np.sign(flo):
            lo = x
        else:
            hi = x
    return x


def _maxent_polynomial(a: float, n: int):
    # First-weight equation of the analytic maximum-entropy solution:
    #   w1 * (A + 1 - n*w1)^n = A^(n-1) * ((A - n)*w1 + 1),   A = (n-1)*a.
    # w1 = 1/n (the uniform solution) is always a root; the interior root
    # above 1/n is the one wanted for a > 0.5.
    A = (n - 1) * a
    B = A + 1.0
    logA = (n - 1) * np.log(A)

    def F(w):
        with np.errstate(over="ignore", invalid="ignore"):
            return w * (B - n * w) ** n - np.exp(logA) * ((A - n) * w + 1.0)

    def dF(w):
        with np.errstate(over="ignore", invalid="ignore"):
            base = B - n * w
            return base**n - n * n * w * base ** (n - 1) - np.exp(logA) * (A - n)

    return F, dF, A, B


def _maxent_bracket(F, n, A, scan_points=400):
    # The admissible interval is (1/n, 1/(n-A)); scan from the high end for
    # the sign change nearest the interior root.
    lo = 1.0 / n
    hi = 1.0 / (n - A)
    ws = np.linspace(lo, hi, scan_points)
    with np.errstate(over="ignore", invalid="ignore"):
        vals = F(ws)
    sgn = np.sign(vals)
    ok = np.isfinite(vals[:-1]) & np.isfinite(vals[1:])
    flips = np.where(ok & (sgn[:-1] * sgn[1:] < 0))[0]
    if flips.size == 0:
        return None
    i = flips[-1]
    return float(ws[i]), float(ws[i + 1])


def _maxent_fallback_array(a: float, n: int) -> np.ndarray:
    # Direct constrained maximization of the entropy, used only when the
    # polynomial route cannot even bracket a root.
    coef = np.arange(n - 1, -1, -1, dtype=float) / (n - 1)
    x0 = np.full(n, 1.0 / n)

    def neg_entropy(w):
        wp = np.clip(w, 1e-300, None)
        return float((wp * np.log(wp)).sum())

    res = minimize(
        neg_entropy,
        x0,
        method="SLSQP",
        bounds=[(0.0, 1.0)] * n,
        constraints=[
            {"type": "eq", "fun": lambda w: w.sum() - 1.0},
            {"type": "eq", "fun": lambda w: coef @ w - a},
        ],
        options={"maxiter": 60, "ftol": 1e-14},
    )
    w = np.asarray(res.x, dtype=float)
    if not np.all(np.isfinite(w)) or w.min() < -1e-9 or w.sum() <= 0.0:
        return None
    w = np.clip(w, 0.0, None)
    return w / w.sum()


def _rebuild_from_first_weight(w1: float, a: float, n: int):
    """Weights implied by a candidate first weight: the last weight from
    the two constraints, geometric interpolation in between (done in logs
    so large n does not underflow intermediate powers)."""
    A = (n - 1) * a
    num = (A - n) * w1 + 1.0
    den = A + 1.0 - n * w1
    if w1 <= 0.0 or num <= 0.0 or den <= 0.0:
        return None
    wn = num / den
    j = np.arange(n)
    logw = ((n - 1 - j) * np.log(w1) + j * np.log(wn)) / (n - 1)
    w = np.exp(logw)
    return w / w.sum()


def _rebuild_is_trustworthy(w1: float, a: float, n: int) -> bool:
    # The last-weight formula subtracts nearly equal terms at extreme
    # orness; once the difference sits at rounding scale the rebuilt
    # family is fiction and no amount of polishing should "succeed".
    A = (n - 1) * a
    num = (A - n) * w1 + 1.0
    return num > 1e-12 * max(1.0, abs((A - n) * w1))


def _constraint_residual(w1: float, a: float, n: int):
    w = _rebuild_from_first_weight(w1, a, n)
    if w is None:
        return None
    coef = np.arange(n - 1, -1, -1, dtype=float)
    return float(coef @ w / (n - 1)) - a


def _polish_first_weight(w1: float, a: float, n: int) -> float:
    """Bisection directly on the achieved-orness residual of the rebuilt
    vector.  Cleans up the ill-conditioned near-0.5 region where the
    first-weight polynomial has a near-double root; only called when the
    rebuild map is trustworthy."""
    A = (n - 1) * a
    lo = (1.0 / n) * (1.0 + 1e-15)
    hi = (1.0 / (n - A)) * (1.0 - 1e-15)
    r_lo = _constraint_residual(lo, a, n)
    if r_lo is None:
        return w1
    if r_lo >= 0.0:
        # Even the smallest step above 1/n overshoots: the target is
        # within rounding of 0.5 and the solution is the uniform vector.
        return 1.0 / n
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        r = _constraint_residual(mid, a, n)
        if r is None or r > 0.0:
            hi = mid
        elif r < 0.0:
            lo = mid
        else:
            return mid
        if hi - lo <= 1e-17 * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def _maxent_array(orness: float, n: int) -> np.ndarray:
    if n == 2:
        return np.array([orness, 1.0 - orness])
    if orness == 0.5:
        return np.full(n, 1.0 / n)
    mirrored = orness < 0.5
    a = 1.0 - orness if mirrored else orness

    F, dF, A, B = _maxent_polynomial(a, n)
    bracket = _maxent_bracket(F, n, A)
    if bracket is not None:
        w1 = _newton_bisection(F, dF, bracket[0], bracket[1])
        w = _rebuild_from_first_weight(w1, a, n)
        if w is not None and _rebuild_is_trustworthy(w1, a, n):
            coef = np.arange(n - 1, -1, -1, dtype=float)
            if abs(float(coef @ w / (n - 1)) - a) > 1e-10:
                w1 = _polish_first_weight(w1, a, n)
                w = _rebuild_from_first_weight(w1, a, n)
    else:
        w = _maxent_fallback_array(a, n)
    if w is not None and mirrored:
        w = w[::-1]
    return w


def maxent_weights(orness: float, n: int) -> WeightVector:
    """Weights maximizing dispersion subject to the requested orness.

    Raises :class:`UnsupportedOrnessError` for orness 0 or 1 and
    :class:`MaxentInstabilityError` whenever the solve cannot certify the
    result (achieved orness off by more than ``ORNESS_TOL`` or weights
    outside [0, 1]); an invalid vector is never returned silently.
    """
    if not 0.0 <= orness <= 1.0:
        raise ValueError(f"orness must be in [0, 1]; got {orness}")
    if n < 2:
        raise ValueError(f"n must be >= 2; got {n}")
    if orness in (0.0, 1.0):
        raise UnsupportedOrnessError(
            "maximum-entropy weights require 0 < orness < 1: the entropy "
            "objective needs every weight strictly positive, so the min and "
            "max operators are out of reach"
        )
    w = _maxent_array(orness, n)
    if w is None or not np.all(np.isfinite(w)) or w.min() < 0.0 or w.max() > 1.0:
        raise MaxentInstabilityError(
            f"maximum-entropy solve unstable at orness={orness} n={n}: "
            "no valid root of the first-weight equation",
            orness=orness,
            n=n,
        )
    try:
        vec = WeightVector(w)
    except ValueError as exc:
        raise MaxentInstabilityError(
            f"maximum-entropy solve unstable at orness={orness} n={n}: {exc}",
            orness=orness,
            n=n,
        ) from exc
    residual = abs(_orness(vec) - orness)
    if residual > ORNESS_TOL:
        raise MaxentInstabilityError(
            f"maximum-entropy solve unstable at orness={orness} n={n}: "
            f"achieved-orness residual {residual:.3g} exceeds {ORNESS_TOL:g}",
            orness=orness,
            n=n,
            residual=residual,
        )
    return vec


__all__ = [
    "CalibrationError",
    "CalibrationResult",
    "MaxentInstabilityError",
    "ORNESS_TOL",
    "UnsupportedOrnessError",
    "exponential_raw",
    "exponential_weights",
    "exponential_weights_no_preset",
    "maxent_weights",
    "uniform_weights",
]
