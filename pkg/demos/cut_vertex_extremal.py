"""
Largest radius among graphs with k cut vertices
===============================================

Enumerate every connected graph on n vertices with k cut vertices and rank
them by radius.  The top graph is a clique with near-equal paths hanging
off it.
"""

from alpha_spectra import canonical_code, make_gnk, spectral_radius
from alpha_spectra.enumeration import graphs_with_cut_vertices
from alpha_spectra.graph import graph6_encode

n, a = 7, 0.5
for k in range(0, n - 1):
    ranked = sorted(graphs_with_cut_vertices(n, k), key=lambda g: -spectral_radius(g, a).rho)
    top = ranked[0]
    gap = spectral_radius(top, a).rho - spectral_radius(ranked[1], a).rho if len(ranked) > 1 else float("inf")
    is_gnk = canonical_code(top) == canonical_code(make_gnk(n, k))
    print(f"k={k}: {len(ranked):3d} graphs, top {graph6_encode(top)} is G(n,k): {is_gnk}, lead {gap:.4f}")
