"""
Enumeration and graph6 export
=============================

Isomorph-free trees and connected graphs, streamed in canonical order and
written as graph6 for use with other tools.
"""

from pathlib import Path
import tempfile

from alpha_spectra.enumeration import all_connected_graphs, all_trees, dump_graph6
from alpha_spectra.graph import read_graph6_lines
from alpha_spectra.structure import count_cut_vertices

print("trees:", [sum(1 for _ in all_trees(n)) for n in range(1, 13)])
print("connected graphs:", [sum(1 for _ in all_connected_graphs(n)) for n in range(1, 8)])

# cut-vertex profile of the six-vertex graphs
profile = {}
for g in all_connected_graphs(6):
    k = count_cut_vertices(g)
    profile[k] = profile.get(k, 0) + 1
print("n=6 by cut vertices:", dict(sorted(profile.items())))

out = Path(tempfile.mkdtemp()) / "connected6.g6"
out.write_text("".join(line + "\n" for line in dump_graph6(all_connected_graphs(6))))
back = list(read_graph6_lines(out.read_text().splitlines()))
print(out, len(back), "graphs read back")
