"""
Graphs with adjacency radius at most 2
======================================

The connected graphs with radius at most 2 at alpha = 0 are the paths,
cycles and a short list of trees.  Every other connected graph has radius
above 2 for every alpha in [0, 1).
"""

from alpha_spectra import canonical_code, spectral_radius
from alpha_spectra.enumeration import all_connected_graphs
from alpha_spectra.families import smith_members
from alpha_spectra.spectral import ALPHA_GRID

for sid, g in smith_members(9):
    print(f"{sid:>2} n={g.n}: rho_0 = {spectral_radius(g, 0.0).rho:.10f}")

members = {canonical_code(g) for _, g in smith_members(7)}
others = [g for n in range(1, 8) for g in all_connected_graphs(n) if canonical_code(g) not in members]
for a in ALPHA_GRID:
    print(f"alpha={a}: smallest radius among {len(others)} other graphs = {min(spectral_radius(g, a).rho for g in others):.6f}")
