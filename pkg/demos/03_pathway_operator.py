#!/usr/bin/env python3
"""The pathway fractional integral on power functions and on a k-Struve integrand."""

from pathstruve import (
    KStruveParams,
    PathwayParams,
    eval_k_struve,
    pathway_integral,
    pathway_power_closed,
    power_integrand,
)

# On t^(beta-1) the operator has a closed form, which makes a good oracle.
print("eta  alpha  a    beta  quadrature              closed                  work")
for eta, alpha, a, beta in [(1, 0, 1, 1), (0.5, 0.5, 2, 1.5), (2, -1, 0.5, 1.5), (0.5, 0.9, 1, 0.5)]:
    p = PathwayParams(eta, alpha, a)
    r = pathway_integral(p, power_integrand(beta), 3.0)
    print(f"{eta:<4} {alpha:<6} {a:<4} {beta:<5} {r.value:.16e}  {pathway_power_closed(p, beta, 3.0):.16e}"
          f"  {r.work}")

# alpha -> 1 sends the upper limit to infinity and the weight to an exponential.
# alpha = 1 itself is rejected.
try:
    PathwayParams(1, 1, 1)
except ValueError as exc:
    print("\nalpha = 1:", exc)

# Any callable that accepts an array of t works. Here t^(rho-1) S(t).
sp = KStruveParams(1.0, 1.0, 1.0)
rho = 1.0


def f(t):
    return t ** (rho - 1) * eval_k_struve(sp, t).value


r = pathway_integral(PathwayParams(1, 0, 1), f, 1.0, tol=1e-12, vectorized=False)
print(f"\nstruve integrand: {r.value:.16f} +- {r.err_estimate:.1e} ({r.work} evaluations)")
