"""Core OWA machinery: weight vectors, aggregation, orness and dispersion."""

import warnings
from dataclasses import dataclass, field

import numpy as np

# Closed-form weight constructions should be exact to rounding.
WEIGHT_SUM_TOL = 1e-12


class DimensionMismatchError(ValueError):
    """Raised when a weight vector and an input vector disagree in length."""


@dataclass(frozen=True, eq=False)
class WeightVector:
    """An OWA weight vector.

    ``w[0]`` is paired with the largest ordered input.  Construction
    validates the simplex invariants: every weight in [0, 1] and the
    weights summing to 1 within ``WEIGHT_SUM_TOL``.
    """

    w: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.w, dtype=float)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("weights must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("weights must be finite")
        if arr.min() < -WEIGHT_SUM_TOL or arr.max() > 1.0 + WEIGHT_SUM_TOL:
            raise ValueError(
                f"weights must lie in [0, 1]; got range "
                f"[{arr.min():.17g}, {arr.max():.17g}]"
            )
        total = arr.sum()
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"weights must sum to 1; got {total:.17g}")
        arr = np.clip(arr, 0.0, 1.0)
        arr.flags.writeable = False
        object.__setattr__(self, "w", arr)

    @property
    def n(self) -> int:
        return self.w.size

    def reversed(self) -> "WeightVector":
        """The mirror operator: weight order flipped end to end."""
        return WeightVector(self.w[::-1])

    def __len__(self) -> int:
        return self.w.size

    def __iter__(self):
        return iter(self.w)


@dataclass(frozen=True)
class OrnessTarget:
    """A requested orness in [0, 1] plus the shape exponent of the
    linear family (defaults to 1.5, the steepest admissible slope)."""

    orness: float
    beta: float = 1.5

    def __post_init__(self):
        if not 0.0 <= self.orness <= 1.0:
            raise ValueError(f"orness must be in [0, 1]; got {self.orness}")
        if not 1.0 <= self.beta <= 1.5:
            raise ValueError(f"beta must be in [1.0, 1.5]; got {self.beta}")


@dataclass(frozen=True, eq=False)
class InputVector:
    """Values to aggregate.  Carries no ordering assumption."""

    x: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.x, dtype=float)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("inputs must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("inputs must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "x", arr)

    @property
    def n(self) -> int:
        return self.x.size


def orness(w: WeightVector) -> float:
    """Degree to which ``w`` behaves like the maximum (OR) operator.

    Returns (1/(n-1)) * sum((n-i) * w_i), in [0, 1].  For the degenerate
    n = 1 operator (simultaneously min, max and mean) the convention is
    0.5, reported with a warning rather than an error.
    """
    n = w.n
    if n == 1:
        warnings.warn(
            "orness of a length-1 weight vector is degenerate; "
            "returning 0.5 by convention",
            stacklevel=2,
        )
        return 0.5
    coef = np.arange(n - 1, -1, -1, dtype=float)
    return float(coef @ w.w / (n - 1))


def dispersion(w: WeightVector) -> float:
    """Shannon-style entropy -sum(w_i ln w_i), with 0 ln 0 = 0.

    Ranges from 0 (single atom) to ln n (uniform weights).
    """
    arr = w.w
    pos = arr[arr > 0.0]
    return float(-(pos * np.log(pos)).sum())


def aggregate(w: WeightVector, x) -> float:
    """Aggregate ``x`` with the OWA operator ``w``.

    ``x`` may be an :class:`InputVector` or any 1-d sequence; it is
    sorted descending internally (ties keep their original relative
    order), so the caller need not pre-order anything.
    """
    xv = x if isinstance(x, InputVector) else InputVector(x)
    if xv.n != w.n:
        raise DimensionMismatchError(
            f"weight vector has length {w.n} but input vector has length {xv.n}"
        )
    ordered = xv.x[np.argsort(-xv.x, kind="stable")]
    return float(w.w @ ordered)


def uniform_weights(n: int) -> WeightVector:
    """The simple-average operator of size ``n``."""
    return WeightVector(np.full(n, 1.0 / n))
