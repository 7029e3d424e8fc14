"""owakit: OWA operator weight determination with a desired orness.

The main entry points:

- :func:`owakit.linear.linear_weights` -- closed-form linear family
- :func:`owakit.baselines.exponential_weights` -- calibrated exponential
- :func:`owakit.baselines.maxent_weights` -- maximum-entropy weights
- :func:`owakit.core.orness` / :func:`owakit.core.dispersion` -- metrics
"""

__version__ = "0.1.0"

from .core import (
    DimensionMismatchError,
    InputVector,
    OrnessTarget,
    WeightVector,
    aggregate,
    dispersion,
    orness,
    uniform_weights,
)
from .linear import LinearCoefficients, f_alpha, linear_coefficients, linear_weights
from .baselines import (
    CalibrationError,
    CalibrationResult,
    MaxentInstabilityError,
    UnsupportedOrnessError,
    exponential_raw,
    exponential_weights,
    exponential_weights_no_preset,
    maxent_weights,
)

__all__ = [
    "CalibrationError",
    "CalibrationResult",
    "DimensionMismatchError",
    "InputVector",
    "LinearCoefficients",
    "MaxentInstabilityError",
    "OrnessTarget",
    "UnsupportedOrnessError",
    "WeightVector",
    "aggregate",
    "dispersion",
    "exponential_raw",
    "exponential_weights",
    "exponential_weights_no_preset",
    "f_alpha",
    "linear_coefficients",
    "linear_weights",
    "maxent_weights",
    "orness",
    "uniform_weights",
    "__version__",
]
