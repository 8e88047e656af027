"""
Spectral radius of A_alpha across alpha
=======================================

Power iteration against the tridiagonal/Sturm oracle on a few named graphs,
and how the radius moves between the adjacency end (alpha = 0) and the
degree end (alpha near 1).
"""

import math

from alpha_spectra import build, spectral_radius, spectral_radius_oracle
from alpha_spectra.spectral import ALPHA_GRID

# named graphs, written in the family mini-language
names = ["path:6", "cycle:6", "star:6", "complete:5", "gnk:8,3", "ank:9,3", "smith:H6"]

print(f"{'graph':>10} " + " ".join(f"a={a:<5}" for a in ALPHA_GRID))
for name in names:
    g = build(name)
    row = [spectral_radius(g, a).rho for a in ALPHA_GRID]
    print(f"{name:>10} " + " ".join(f"{r:7.4f}" for r in row))

# the two routes agree to rounding
g = build("gnk:8,3")
for a in ALPHA_GRID:
    power = spectral_radius(g, a)
    print(f"alpha={a}: power {power.rho:.12f} ({power.iterations} steps), oracle {spectral_radius_oracle(g, a):.12f}")

# paths have a closed form at alpha = 0
for n in (4, 8, 12):
    print(n, spectral_radius(build(f"path:{n}"), 0.0).rho, 2 * math.cos(math.pi / (n + 1)))
