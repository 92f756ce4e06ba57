#!/usr/bin/env python3
"""A wavefunction that blows up still has finite transition amplitudes.

The contour sqrt(1+ix) ends in two adjacent sectors, so no solution decays
at both ends: its momentum-space wavefunctions grow like e^p toward
p -> +infinity.  The factored representation keeps them usable anyway: the
stored smooth factor is tame, and the growing cubic exponent is only ever
combined analytically with the metric exponent, which cancels it exactly.
The raw magnitude at the top of the grid is astronomically large while
every weighted amplitude stays at or below one.
"""
import numpy as np

from ptcontour import (ADJACENT, Grid, amplitude_matrix, eigenbasis,
                       metric_of)

grid = Grid("momentum", -30.0, 30.0, 1601)
basis = eigenbasis(ADJACENT, 4, grid)
u0 = basis[0]

print(f"contour {ADJACENT.label()}: exponent polynomial of psi~ is "
      f"+(2/3)p^3 + p")
print(f"grid: [{grid.lo}, {grid.hi}] with {grid.n} points\n")

pts = grid.points()
log10 = u0.log10_abs()
for p_show in (0.0, 10.0, 20.0, 30.0):
    i = int(np.argmin(np.abs(pts - p_show)))
    print(f"  log10 |psi~({pts[i]:5.1f})| = {log10[i]:12.1f}")

print(f"\nraw magnitude at the grid top exceeds 1e10: "
      f"{log10[-1] > 10}  (log10 = {log10[-1]:.1f})")

mat = amplitude_matrix(basis, metric_of(ADJACENT))
print(f"metric-weighted amplitude matrix (4x4): max |entry| = "
      f"{np.abs(mat).max():.12f}")
print(f"deviation from identity: {np.abs(mat - np.eye(4)).max():.3e}")
print("\nThe weight exp(-(4/3)p^3 - 2p) cancels the growth term for term,")
print("exactly as the Gaussian weight does for Hermite polynomials.")
