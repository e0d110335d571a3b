#!/usr/bin/env python3
"""Checking the closed-form pathway images of k-Struve integrands, printed against corrected."""

from pathstruve import CaseId, PathwayParams, TheoremCase, lhs_quadrature, rhs_as_printed, rhs_corrected, verify

# One point by hand. The left side is quadrature, the right sides are Fox-Wright sums.
case = TheoremCase(CaseId.TH2, PathwayParams(1.0, 0.0, 1.0), 1.0, gamma_scale=1.0, k=2.0)
x = 1.0
lhs = lhs_quadrature(case, x).value
print(f"left side          {lhs:.15e}")
print(f"right, corrected   {rhs_corrected(case, x).value:.15e}")
print(f"right, as printed  {rhs_as_printed(case, x).value:.15e}")

# Whole grids. CONFIRMED means both right sides match. PRINTED_MISMATCH means only
# the corrected one does. FAIL would mean neither.
for cid in (CaseId.TH1, CaseId.TH2, CaseId.TH4):
    rep = verify(cid)
    print(f"\n{cid.value}: {rep.status} over {rep.n_points} points")
    print(f"  corrected max rel err {rep.max_rel_err_corrected:.2e}")
    print(f"  printed   max rel err {rep.max_rel_err_printed:.2e}")
    if rep.printed_deviation:
        print("  note:", rep.printed_deviation)
