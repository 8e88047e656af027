"""Canonical labelling for small graphs.

Colour refinement down to an equitable ordered partition, then a
backtracking search that individualizes vertices of the first non-trivial
cell.  The code of a graph is the smallest upper-triangle bit string over
all leaves of that search tree.  Automorphisms found along the way (two
leaves with the same bit string) prune sibling branches.

Good enough up to 16 vertices, which is all the workloads here need.
"""

from __future__ import annotations

from .graph import Graph, GraphError, relabel

MAX_CANON_N = 16

CanonicalCode = bytes


def _refine(adj: tuple[tuple[int, ...], ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        colour = {}
        for i, cell in enumerate(cells):
            for v in cell:
                colour[v] = i
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(sorted(colour[w] for w in adj[v])) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            split = True
            for key in keys:
                out.append([v for v in cell if sig[v] == key])
        cells = out
        if not split:
            return cells


def _bits(adj_sets: list[set[int]], order: list[int]) -> int:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    code = 0
    for i in range(n - 1):
        row = 0
        for w in adj_sets[order[i]]:
            j = pos[w]
            if j > i:
                row |= 1 << (n - 1 - j)
        code = (code << (n - 1 - i)) | row
    return code


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj_sets = [set(a) for a in g.adj]
        self.best: tuple[int, list[int]] | None = None
        self.first: tuple[int, list[int]] | None = None
        self.autos: list[list[int]] = []

    def _leaf(self, order: list[int]) -> None:
        code = _bits(self.adj_sets, order)
        if self.first is None:
            self.first = (code, order)
            self.best = (code, order)
            return
        for ref_code, ref_order in (self.first, self.best):
            if code == ref_code:
                perm = [0] * self.g.n
                for a, b in zip(ref_order, order):
                    perm[a] = b
                self.autos.append(perm)
                return
        if code < self.best[0]:
            self.best = (code, order)

    def _orbit_root(self, parent: dict[int, int], v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(self.g.adj, cells)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            self._leaf([c[0] for c in cells])
            return
        target = cells[idx]
        # orbits of the target cell under automorphisms fixing the prefix
        parent = {w: w for w in target}
        seen_autos = 0
        tried: list[int] = []
        for v in target:
            for perm in self.autos[seen_autos:]:
                if all(perm[p] == p for p in prefix):
                    for w in target:
                        a = self._orbit_root(parent, w)
                        b = self._orbit_root(parent, perm[w])
                        if a != b:
                            parent[max(a, b)] = min(a, b)
            seen_autos = len(self.autos)
            root = self._orbit_root(parent, v)
            if any(self._orbit_root(parent, t) == root for t in tried):
                continue
            tried.append(v)
            rest = [w for w in target if w != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            self.run(child, prefix + [v])


def canonical_order(g: Graph) -> list[int]:
    """Vertex ordering realising the canonical code: position -> original vertex."""
    if g.n > MAX_CANON_N:
        raise GraphError(f"canonical labelling limited to n <= {MAX_CANON_N}, got {g.n}")
    if g.n == 0:
        return []
    search = _Search(g)
    search.run([list(range(g.n))], [])
    return search.best[1]


def canonical_code(g: Graph) -> CanonicalCode:
    """Isomorphism-class identifier: vertex count byte + minimal adjacency bits."""
    order = canonical_order(g)
    nbits = g.n * (g.n - 1) // 2
    code = _bits([set(a) for a in g.adj], order) if g.n else 0
    return bytes([g.n]) + code.to_bytes((nbits + 7) // 8, "big")


def canonical_form(g: Graph) -> Graph:
    """The canonical representative: ``g`` relabelled by :func:`canonical_order`."""
    return relabel(g, canonical_order(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_code(g) == canonical_code(h)
