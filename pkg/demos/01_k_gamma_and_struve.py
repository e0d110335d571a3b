#!/usr/bin/env python3
"""The k-gamma function and the k-Struve series, checked against things we already know."""

import math

import numpy as np

from pathstruve import KStruveParams, Trig, TrigKind, eval_k_struve, k_gamma, k_struve_array, struve_via_trig

# Gamma_k shifts by k instead of 1: Gamma_k(x + k) = x Gamma_k(x).
for k in (0.5, 1.0, 2.0):
    x = 1.7
    print(f"k={k}: Gamma_k(x+k) / (x Gamma_k(x)) = {k_gamma(x + k, k) / (x * k_gamma(x, k)):.16f}")

# With k = 1 the k-Struve function is the ordinary Struve function H_nu (c = 1)
# or the modified one L_nu (c = -1). scipy has both.
from scipy.special import modstruve, struve  # noqa: E402

xs = np.linspace(0.1, 8, 5)
h, _, _ = k_struve_array(KStruveParams(1.0, 0.5, 1.0), xs, 1e-14)
l, _, _ = k_struve_array(KStruveParams(1.0, 0.5, -1.0), xs, 1e-14)
print("\n x      H_0.5 ours          scipy               L_0.5 ours          scipy")
for x, a, b in zip(xs, h, l):
    print(f"{x:5.2f}  {a:.16f}  {struve(0.5, x):.16f}  {b:.16f}  {modstruve(0.5, x):.16f}")

# Half-integer orders collapse to elementary functions. The k cancels in the
# cosine pair but not in the sine pair.
print()
for kind in Trig:
    tk = TrigKind(kind, 0.8)
    for k in (0.5, 2.0):
        r = eval_k_struve(tk.struve_params(k), 1.3)
        print(f"{kind.value:7s} k={k}: series {r.value:.15e}  closed {struve_via_trig(tk, k, 1.3):.15e}"
              f"  terms {r.work}")

# Every result carries an error estimate. For an alternating series it bounds the tail.
r = eval_k_struve(KStruveParams(2.0, 1.0, 1.0), 1.5, tol=1e-6)
exact = eval_k_struve(KStruveParams(2.0, 1.0, 1.0), 1.5, tol=1e-15).value
print(f"\ntol 1e-6: value {r.value:.12f}, estimate {r.err_estimate:.1e}, actual {abs(r.value - exact):.1e}")
print(f"c = 0 leaves one term: {eval_k_struve(KStruveParams(1, 0, 0), 2).value} vs 4/pi = {4 / math.pi}")
