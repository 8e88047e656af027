"""Isomorph-free generation of trees and connected graphs.

Both generators grow order ``n`` from order ``n - 1``: trees by adding a
leaf, connected graphs by adding a vertex joined to a nonempty subset (every
connected graph has a vertex whose removal keeps it connected).  Duplicates
are dropped by certificate and the survivors are returned in canonical form,
sorted by canonical code.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .canon import canonical_code, canonical_form
from .graph import Graph, add_vertices, edit, graph6_encode, new_graph
from .structure import count_cut_vertices, matching_number

TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551)
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853)

BUDGET_ENV = "ALPHA_SPECTRA_BUDGET"


class BudgetError(ValueError):
    pass


@dataclass(frozen=True)
class EnumBudget:
    max_n_trees: int = 12
    max_n_graphs: int = 7

    def __post_init__(self):
        if not 1 <= self.max_n_trees <= 16:
            raise BudgetError(f"max_n_trees must be in [1, 16], got {self.max_n_trees}")
        if not 1 <= self.max_n_graphs <= 8:
            raise BudgetError(f"max_n_graphs must be in [1, 8], got {self.max_n_graphs}")

    @classmethod
    def from_env(cls, env: dict[str, str] | None = None) -> EnumBudget:
        """Defaults, capped by ``ALPHA_SPECTRA_BUDGET`` (``"trees,graphs"`` or one int)."""
        env = os.environ if env is None else env
        budget = cls()
        raw = env.get(BUDGET_ENV, "").strip()
        if not raw:
            return budget
        try:
            parts = [int(x) for x in raw.split(",")]
        except ValueError:
            raise BudgetError(f"{BUDGET_ENV} must be 'T,G' or an integer, got {raw!r}") from None
        trees, graphs = (parts * 2)[:2] if len(parts) == 1 else parts[:2]
        return cls(min(budget.max_n_trees, trees), min(budget.max_n_graphs, graphs))


DEFAULT_BUDGET = EnumBudget()


def _check(n: int, limit: int, what: str) -> None:
    if n < 1:
        raise BudgetError(f"{what} need n >= 1, got {n}")
    if n > limit:
        raise BudgetError(f"{what} on {n} vertices exceed the budget (max {limit})")


def _tree_certificate(t: Graph) -> str:
    """AHU string of the tree rooted at its centre (minimum over bicentres)."""
    deg = list(t.degrees())
    layer = [v for v in range(t.n) if deg[v] <= 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    centres = layer if t.n > 1 else [0]

    def encode(v: int, parent: int) -> str:
        return "(" + "".join(sorted(encode(w, v) for w in t.adj[v] if w != parent)) + ")"

    return min(encode(c, -1) for c in centres)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (new_graph(1),)
    seen: dict[str, Graph] = {}
    for t in _trees(n - 1):
        for v in range(t.n):
            child = edit(add_vertices(t, 1), add=[(v, t.n)])
            seen.setdefault(_tree_certificate(child), child)
    forms = [canonical_form(t) for t in seen.values()]
    return tuple(sorted(forms, key=canonical_code))


def all_trees(n: int, budget: EnumBudget = DEFAULT_BUDGET) -> Iterator[Graph]:
    """One canonical representative per unlabelled tree on ``n`` vertices."""
    _check(n, budget.max_n_trees, "trees")
    yield from _trees(n)


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (new_graph(1),)
    seen: dict[bytes, Graph] = {}
    for g in _connected(n - 1):
        base = add_vertices(g, 1)
        for r in range(1, n):
            for subset in combinations(range(n - 1), r):
                child = edit(base, add=[(v, n - 1) for v in subset])
                code = canonical_code(child)
                if code not in seen:
                    seen[code] = child
    return tuple(canonical_form(seen[c]) for c in sorted(seen))


def all_connected_graphs(n: int, budget: EnumBudget = DEFAULT_BUDGET) -> Iterator[Graph]:
    """One canonical representative per unlabelled connected graph on ``n`` vertices."""
    _check(n, budget.max_n_graphs, "connected graphs")
    yield from _connected(n)


def trees_with_matching(n: int, k: int, budget: EnumBudget = DEFAULT_BUDGET) -> Iterator[Graph]:
    if not 1 <= k <= n // 2:
        raise ValueError(f"matching number must satisfy 1 <= k <= n//2, got k={k}, n={n}")
    for t in all_trees(n, budget):
        if matching_number(t).size == k:
            yield t


def graphs_with_cut_vertices(n: int, k: int, budget: EnumBudget = DEFAULT_BUDGET) -> Iterator[Graph]:
    if not 0 <= k <= max(n - 2, 0):
        raise ValueError(f"cut-vertex count must satisfy 0 <= k <= n-2, got k={k}, n={n}")
    for g in all_connected_graphs(n, budget):
        if count_cut_vertices(g) == k:
            yield g


def dump_graph6(graphs: Iterable[Graph]) -> Iterator[str]:
    for g in graphs:
        yield graph6_encode(g)
