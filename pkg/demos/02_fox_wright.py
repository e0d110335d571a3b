#!/usr/bin/env python3
"""Fox-Wright functions: a few reductions and what happens near the edge of convergence."""

import math

from scipy.special import iv

from pathstruve import ConvergenceConditionError, FoxWrightSpec, delta, eval_fox_wright

# 1Psi1[(1,1);(1,1);z] is exp(z).
exp_spec = FoxWrightSpec(((1, 1),), ((1, 1),))
for z in (-3, 0.5, 4):
    print(f"exp({z}) = {math.exp(z):.16e}  series {eval_fox_wright(exp_spec, z).value:.16e}")

# 0Psi1[;(nu+1,1);z^2/4] times (z/2)^nu is I_nu(z).
nu, z = 1.5, 2.2
r = eval_fox_wright(FoxWrightSpec((), ((nu + 1, 1),)), z * z / 4)
print(f"\nI_1.5(2.2) = {iv(nu, z):.16e}  via Psi {(z / 2) ** nu * r.value:.16e}")

# The series converges for every z when delta > -1. At -1 it needs |z| < radius.
wide = FoxWrightSpec(((1, 2),), ((1, 1),))
print(f"\ndelta = {delta(wide)}")
try:
    eval_fox_wright(wide, 1.0)
except ConvergenceConditionError as exc:
    print("refused:", exc)

# Pair order does not matter. The spec is stored sorted.
a = FoxWrightSpec(((3, 2), (1, 1)), ((5, 2), (2.5, 1), (1.5, 1)))
b = FoxWrightSpec(((1, 1), (3, 2)), ((1.5, 1), (5, 2), (2.5, 1)))
print("\nsame spec:", a == b, a.to_json())
print("value at -0.25:", eval_fox_wright(a, -0.25).value)
