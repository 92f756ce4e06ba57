#!/usr/bin/env python3
"""The mechanism in miniature: Hermite polynomials under a Gaussian weight.

Hermite polynomials diverge at |x| -> infinity, yet all their weighted
inner products are finite and diagonal: the weight carries the whole burden
of integrability.  The contour metrics play exactly this role for the
quartic theory.  Prints the weighted inner-product table against the closed
form 2^n n! sqrt(pi) and draws the first four polynomials.
"""
from pathlib import Path

from ptcontour import exact_hermite_norm, hermite_demo
from ptcontour.svgfig import line_chart

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

demo = hermite_demo(5)
print("weighted inner products T[n,m] (zeros below 1e-10 omitted):")
for n in range(6):
    cells = []
    for m in range(6):
        v = demo.table[n, m]
        cells.append(f"{v:12.4f}" if abs(v) > 1e-10 else f"{'.':>12s}")
    print("  " + "".join(cells))

print("\ndiagonal against 2^n n! sqrt(pi):")
for n in range(6):
    exact = exact_hermite_norm(n)
    rel = abs(demo.table[n, n] - exact) / exact
    print(f"  n={n}:  {demo.table[n, n]:16.8f}  vs  {exact:16.8f}"
          f"   rel dev {rel:.2e}")

line_chart(out / "hermite.svg",
           [(f"H{n}", demo.plot_x, demo.plot_values[n]) for n in range(4)],
           title="first four Hermite polynomials", xlabel="x",
           ylabel="H_n(x)")
print(f"\nfigure written to {out / 'hermite.svg'}")
