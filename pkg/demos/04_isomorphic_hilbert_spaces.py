#!/usr/bin/env python3
"""The Hilbert spaces of different contours are isomorphic.

For each of the three worked source contours, the eigenfunctions are
computed, mapped onto the reference contour by the dilation-plus-shift map,
and the metric-weighted amplitude matrices are compared before and after.
Matrices agree (and equal the identity) to well below 1e-6 -- even for the
adjacent-sector contour whose raw wavefunctions blow up.
"""
import numpy as np

from ptcontour import ADJACENT, LOWER_PT, SQRT_IX, UPPER_PT, verify_isometry

for src in (UPPER_PT, ADJACENT, SQRT_IX):
    rep = verify_isometry(src, LOWER_PT, k=3)
    print(f"{src.label()} -> {LOWER_PT.label()}:  "
          f"beta = {rep.beta}, gamma = {rep.gamma}")
    print(f"  max |A_src - A_dst| = {rep.max_deviation:.3e}")
    print(f"  identity deviation  = {rep.identity_deviation:.3e}")
    print("  source amplitudes:")
    for row in rep.amplitudes_src:
        print("   ", "  ".join(f"{v.real:+.9f}" for v in row))
    print()

print("The mapped amplitude matrices are numerically identical to the")
print("source ones; both reduce to the same orthonormality sums, so the")
print("maps are isometries between the weighted Hilbert spaces.")
