"""Structural invariants: blocks and cut vertices, matchings, pendent paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, GraphError, components, is_connected, new_graph


def _require_connected(g: Graph) -> None:
    if g.n == 0 or not is_connected(g):
        raise GraphError("operation needs a connected graph")


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components and articulation points (iterative Tarjan low-link)."""
    _require_connected(g)
    if g.n == 1:
        return BlockDecomposition((frozenset([0]),), frozenset())
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(g.adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(g.adj[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent != root:
                cuts.add(parent)
            block = set()
            while True:
                a, b = edge_stack.pop()
                block.update((a, b))
                if (a, b) == (parent, v):
                    break
            blocks.append(frozenset(block))
    if root_children > 1:
        cuts.add(root)
    blocks.sort(key=lambda b: (min(b), sorted(b)))
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


def cut_vertices(g: Graph) -> frozenset[int]:
    return block_decomposition(g).cut_vertices


def count_cut_vertices(g: Graph) -> int:
    return len(block_decomposition(g).cut_vertices)


def count_cut_vertices_brute(g: Graph) -> int:
    """Cut vertices by the deletion definition; a cross-check for small graphs."""
    _require_connected(g)
    count = 0
    for v in range(g.n):
        rest = [w for w in range(g.n) if w != v]
        if not rest:
            continue
        index = {w: i for i, w in enumerate(rest)}
        edges = [(index[a], index[b]) for a, b in g.edges() if v not in (a, b)]
        if len(components(new_graph(len(rest), edges))) > 1:
            count += 1
    return count


# -- matchings -----------------------------------------------------------------

@dataclass(frozen=True)
class MatchingResult:
    size: int
    edges: tuple[tuple[int, int], ...]


def _augment_from(root: int, adj, match: list[int]) -> bool:
    """One Edmonds search from an exposed root; augments ``match`` in place."""
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    # flip the alternating path ending at ``to``
                    while to != -1:
                        pv = parent[to]
                        nxt = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def matching_number(g: Graph) -> MatchingResult:
    """Exact maximum matching (Edmonds' blossom algorithm)."""
    match = [-1] * g.n
    for u, v in g.edges():  # greedy start
        if match[u] == -1 and match[v] == -1:
            match[u], match[v] = v, u
    for r in range(g.n):
        if match[r] == -1:
            _augment_from(r, g.adj, match)
    edges = tuple((v, match[v]) for v in range(g.n) if match[v] > v)
    return MatchingResult(len(edges), edges)


BRUTE_MAX_EDGES = 24


def matching_number_brute(g: Graph) -> int:
    """Maximum matching by exhaustive branching on the lowest free vertex."""
    if g.m > BRUTE_MAX_EDGES:
        raise GraphError(f"brute-force matching limited to {BRUTE_MAX_EDGES} edges")
    nbr_mask = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]

    @lru_cache(maxsize=None)
    def best(free: int) -> int:
        if free == 0:
            return 0
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        result = best(rest)  # leave v unmatched
        cand = nbr_mask[v] & rest
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            result = max(result, 1 + best(rest & ~(1 << w)))
        return result

    return best((1 << g.n) - 1)


def is_matching(g: Graph, edges) -> bool:
    seen = set()
    for a, b in edges:
        if not g.has_edge(a, b) or a in seen or b in seen:
            return False
        seen.update((a, b))
    return True


# -- pendent paths and degrees ---------------------------------------------------

@dataclass(frozen=True)
class PendentPath:
    """A pendent path listed from the leaf inward.

    ``anchor`` is the first vertex of degree >= 3 reached from the leaf, or
    ``None`` when the whole graph is a path.
    """

    anchor: int | None
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def pendent_paths(g: Graph) -> list[PendentPath]:
    _require_connected(g)
    if g.n < 2:
        raise GraphError("pendent paths need at least two vertices")
    if max(g.degrees()) <= 2 and g.m == g.n - 1:
        ends = [v for v in range(g.n) if g.degree(v) == 1]
        walk = [ends[0]]
        prev = -1
        while len(walk) < g.n:
            nxt = next(w for w in g.adj[walk[-1]] if w != prev)
            prev = walk[-1]
            walk.append(nxt)
        return [PendentPath(None, tuple(walk))]
    out = []
    for leaf in range(g.n):
        if g.degree(leaf) != 1:
            continue
        walk = [leaf]
        prev, cur = leaf, g.adj[leaf][0]
        while g.degree(cur) == 2:
            walk.append(cur)
            prev, cur = cur, next(w for w in g.adj[cur] if w != prev)
        out.append(PendentPath(cur, tuple(walk)))
    out.sort(key=lambda p: (p.anchor, p.vertices))
    return out


def leg_from(g: Graph, v: int, first: int) -> tuple[int, ...] | None:
    """Vertices from ``first`` away from ``v`` up to a leaf, if all interior ones have degree 2.

    Returned leaf first, so the tuple reads outside-in like :class:`PendentPath`.
    """
    walk = [first]
    prev, cur = v, first
    while g.degree(cur) == 2:
        prev, cur = cur, next(w for w in g.adj[cur] if w != prev)
        if cur == v:
            return None  # cycle back to v
        walk.append(cur)
    if g.degree(cur) != 1:
        return None
    return tuple(reversed(walk))


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) <= 1


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def min_degree(g: Graph) -> int:
    return min(g.degrees(), default=0)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)
