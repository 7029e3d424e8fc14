"""Compare the weight shapes of the three methods at one operating point.

For n = 5 and desired orness 0.6: the linear family puts n - 1 weights on
a straight line, maximum entropy produces a geometric (constant-ratio)
profile very close to it, and the calibrated exponential comes out with an
increasing profile instead.
"""

import numpy as np

from owakit import (
    OrnessTarget,
    dispersion,
    exponential_weights,
    linear_weights,
    maxent_weights,
    orness,
)

N = 5
TARGET = 0.6


def show(label, w):
    weights = " ".join(f"{v:.5f}" for v in w.w)
    print(f"{label:<24} [{weights}]  orness={orness(w):.6f}  disp={dispersion(w):.6f}")


print(f"n = {N}, desired orness = {TARGET}\n")

for beta in (1.0, 1.25, 1.5):
    show(f"linear (beta={beta})", linear_weights(OrnessTarget(TARGET, beta), N))

w_exp, cal = exponential_weights(TARGET, N)
show("exponential (preset)", w_exp)
print(f"{'':<24} preset parameter a = {cal.parameter:.6f} "
      f"after {cal.iterations} bisection steps")

show("maximum entropy", maxent_weights(TARGET, N))

print("\nThe linear weights at beta=1.5 sit on a straight line:")
w = linear_weights(OrnessTarget(TARGET, 1.5), N).w
print("consecutive differences:", np.round(np.diff(w[1:]), 8))
