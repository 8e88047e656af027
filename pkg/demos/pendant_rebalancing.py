"""
Moving a leaf from the long pendant path to the short one
=========================================================

Over a small core, hang paths of p and q vertices at the ends of a linking
path of s edges.  When p - q >= max(s + 1, 2), shortening the long path by
one and lengthening the short one raises the radius.  Near alpha = 1 the
increase can be far below double precision, so the harness falls back to an
interval bracket of the Perron root.
"""

from alpha_spectra import Complete, Cycle, make_gpsq, spectral_radius
from alpha_spectra.transforms import rebalance_pendent_paths
from alpha_spectra.verify import perron_bracket, verify_theorem1

before = make_gpsq(Cycle(4), 5, 1, 1)
after = rebalance_pendent_paths(before)
print("p,s,q:", (before.p, before.s, before.q), "->", (after.p, after.s, after.q))
for a in (0.0, 0.5, 0.99):
    r0 = spectral_radius(before.graph, a).rho
    r1 = spectral_radius(after.graph, a).rho
    print(f"alpha={a}: {r0:.12f} -> {r1:.12f}  gap {r1 - r0:.3e}")

# at alpha = 0.99 the gap shrinks with the length of the short path
for q in (1, 2, 3):
    o = verify_theorem1(Cycle(3), q + 2, 0, q, 0.99)
    print(f"C3 core, p={q + 2}, q={q}: status={o.status}, float gap={o.margin:.3e}, "
          f"certified lower bound={o.details.get('certified_gap_lower_bound', '-')}")

# the bracket behind the certification
lo, hi = perron_bracket(make_gpsq(Complete(4), 6, 0, 3).graph, 0.99)
print("enclosure width:", hi - lo)
