"""
Trees with a given matching number
==================================

Among trees on n vertices with matching number k, the radius peaks at a star
with k - 1 of its leaves extended by one edge.  Splitting a long pendant path
into pieces of 2 and p - 2 keeps the matching number and raises the radius,
which is how long legs are ruled out.
"""

from alpha_spectra import canonical_code, make_ank, matching_number, spectral_radius
from alpha_spectra.enumeration import all_trees, trees_with_matching
from alpha_spectra.families import path
from alpha_spectra.transforms import split_pendent_path, split_sites

n, a = 10, 0.25
for k in range(1, n // 2 + 1):
    trees = list(trees_with_matching(n, k))
    best = max(trees, key=lambda t: spectral_radius(t, a).rho)
    print(f"k={k}: {len(trees):3d} trees, maximiser is A(n,k): {canonical_code(best) == canonical_code(make_ank(n, k))}")

# one split, step by step
t = path(9)
v, p = split_sites(t)[0]
h = split_pendent_path(t, v, p)
print("split at", v, "leg", p, "matching", matching_number(t).size, "->", matching_number(h).size)
print("radius", spectral_radius(t, a).rho, "->", spectral_radius(h, a).rho)

# how many trees on 10 vertices admit a split at all
print(sum(1 for t in all_trees(10) if split_sites(t)), "of", sum(1 for _ in all_trees(10)))
