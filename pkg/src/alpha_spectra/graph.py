"""Immutable simple undirected graphs on the vertex set ``{0, ..., n-1}``.

Every editing helper returns a new :class:`Graph`; nothing mutates in place,
so graphs can be shared freely between worker processes and used as dict
keys.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass


class GraphError(ValueError):
    """Raised when a graph cannot be built or an operation gets bad vertices."""


class Graph6Error(ValueError):
    """Malformed graph6 text. ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple graph stored as per-vertex sorted neighbour tuples.

    Use :func:`new_graph` to build one from an edge list; the raw constructor
    does not validate.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for graph on {g.n} vertices")


def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are collapsed."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def check_invariants(g: Graph) -> None:
    """Debug validator: raise :class:`GraphError` if ``g`` is not a simple graph."""
    if len(g.adj) != g.n:
        raise GraphError("adjacency length differs from n")
    total = 0
    for v, nbrs in enumerate(g.adj):
        if any(b <= a for a, b in zip(nbrs, nbrs[1:])):
            raise GraphError(f"neighbours of {v} are not strictly increasing")
        for w in nbrs:
            if w == v:
                raise GraphError(f"self-loop at {v}")
            if not 0 <= w < g.n:
                raise GraphError(f"neighbour {w} of {v} out of range")
            if v not in g.adj[w]:
                raise GraphError(f"asymmetric adjacency between {v} and {w}")
        total += len(nbrs)
    if total % 2:
        raise GraphError("odd degree sum")


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.degree(v)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    """True iff a traversal from vertex 0 reaches every vertex."""
    if g.n == 0:
        raise GraphError("connectivity is undefined for the empty graph")
    return len(components(g)[0]) == g.n


def edit(
    g: Graph,
    remove: Iterable[tuple[int, int]] = (),
    add: Iterable[tuple[int, int]] = (),
) -> Graph:
    """Return ``g`` with the ``remove`` edges deleted, then the ``add`` edges inserted.

    Removing a non-edge or adding an existing edge is an error; proof
    transformations rely on these being exact.
    """
    nbrs = [set(a) for a in g.adj]
    for u, v in remove:
        _check_vertex(g, u)
        _check_vertex(g, v)
        if v not in nbrs[u]:
            raise GraphError(f"cannot remove non-edge ({u}, {v})")
        nbrs[u].discard(v)
        nbrs[v].discard(u)
    for u, v in add:
        _check_vertex(g, u)
        _check_vertex(g, v)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            raise GraphError(f"edge ({u}, {v}) already present")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(g.n, tuple(tuple(sorted(s)) for s in nbrs))


def add_vertices(g: Graph, count: int) -> Graph:
    return Graph(g.n + count, g.adj + ((),) * count)


def attach_path(g: Graph, v: int, length: int) -> Graph:
    """Hang a path of ``length`` new vertices off ``v``.

    New vertices are ``n, ..., n+length-1``; vertex ``n`` is joined to ``v``
    and ``n+length-1`` is the new leaf.
    """
    _check_vertex(g, v)
    if length < 0:
        raise GraphError(f"path length must be non-negative, got {length}")
    if length == 0:
        return g
    n = g.n
    chain = [v] + list(range(n, n + length))
    return edit(add_vertices(g, length), add=zip(chain, chain[1:]))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``, relabelled ``0..|s|-1`` in increasing vertex order."""
    verts = sorted(set(s))
    if not verts:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    for v in verts:
        _check_vertex(g, v)
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[a], index[b]) for a in verts for b in g.adj[a] if b in index and a < b]
    return new_graph(len(verts), edges)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Relabel so that old vertex ``order[i]`` becomes vertex ``i``."""
    if sorted(order) != list(range(g.n)):
        raise GraphError("order must be a permutation of the vertex set")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return new_graph(g.n, ((pos[a], pos[b]) for a, b in g.edges()))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return new_graph(
        g.n + h.n,
        list(g.edges()) + [(a + shift, b + shift) for a, b in h.edges()],
    )


def complement_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in g.adj[u]]


# -- graph6 -----------------------------------------------------------------

def graph6_encode(g: Graph) -> str:
    """Encode in the short graph6 form (no ``>>graph6<<`` header)."""
    if g.n > 62:
        raise GraphError("short graph6 form supports at most 62 vertices")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
        base = len(">>graph6<<")
    else:
        base = 0
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", base + i)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", base)
    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, found {len(body)}",
            base + 1 + min(len(body), need),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            val = ord(body[k // 6]) - 63
            if (val >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if need:
        pad = 6 * need - pairs
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", base + len(s) - 1)
    return new_graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)
