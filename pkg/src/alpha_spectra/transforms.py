"""Graph rewritings used in the extremal arguments.

None of these compute spectra; callers pair them with
:func:`alpha_spectra.spectral.spectral_radius` to check the effect.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_code
from .families import PendantPathGraph, make_gpsq
from .graph import Graph, GraphError, edit, is_connected
from .structure import is_tree, leg_from, matching_number


class TransformError(ValueError):
    pass


@dataclass(frozen=True)
class ShiftSpec:
    """Move the edges ``v w`` (``w`` in ``moved``) over to ``u``."""

    v: int
    u: int
    moved: frozenset[int]

    def __init__(self, v: int, u: int, moved):
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "moved", frozenset(moved))


def check_shift(g: Graph, spec: ShiftSpec) -> None:
    v, u, moved = spec.v, spec.u, spec.moved
    if not (0 <= v < g.n and 0 <= u < g.n):
        raise TransformError(f"vertices ({v}, {u}) out of range")
    if u == v:
        raise TransformError("u and v must differ")
    if not moved:
        raise TransformError("the moved set must be nonempty")
    for w in sorted(moved):
        if w == u:
            raise TransformError("u itself cannot be moved")
        if not g.has_edge(v, w):
            raise TransformError(f"{w} is not a neighbour of v={v}")
        if g.has_edge(u, w):
            raise TransformError(f"{w} is already a neighbour of u={u}")


def shift_neighbors(g: Graph, spec: ShiftSpec) -> Graph:
    """``G - {vw : w in N} + {uw : w in N}``; result must stay connected."""
    check_shift(g, spec)
    moved = sorted(spec.moved)
    out = edit(g, remove=[(spec.v, w) for w in moved], add=[(spec.u, w) for w in moved])
    if not is_connected(out):
        raise TransformError("shift disconnects the graph")
    return out


def rebalance_pendent_paths(pp: PendantPathGraph) -> PendantPathGraph:
    """``G_{p,s,q}(u,v)`` to ``G_{p-1,s,q+1}(u,v)`` by moving the leaf ``u_1`` onto ``v_1``.

    Needs ``p - q >= max(s + 1, 2)``.  When the instance carries its core the
    result is checked against a direct construction.
    """
    p, s, q = pp.p, pp.s, pp.q
    if p - q < max(s + 1, 2):
        raise TransformError(f"need p - q >= max(s+1, 2); got p={p}, s={s}, q={q}")
    u1, u2 = pp.u_path[0], (pp.u_path[1] if p > 1 else pp.u)
    v_end = pp.v_path[0] if q else pp.v
    g = edit(pp.graph, remove=[(u1, u2)], add=[(v_end, u1)])
    out = PendantPathGraph(
        g, pp.u, pp.v, p - 1, s, q + 1,
        pp.u_path[1:], (u1,) + pp.v_path, pp.w_path, pp.core,
    )
    if pp.core is not None:
        direct = make_gpsq(pp.core, p - 1, s, q + 1)
        if canonical_code(direct.graph) != canonical_code(g):
            raise TransformError("rebalanced graph differs from the direct construction")
    return out


def find_leg(t: Graph, v: int, p: int) -> tuple[int, ...]:
    """A leg of exactly ``p`` vertices hanging off ``v``, leaf first."""
    for w in t.adj[v]:
        leg = leg_from(t, v, w)
        if leg is not None and len(leg) == p:
            return leg
    raise TransformError(f"no pendent path of length {p} at vertex {v}")


def split_pendent_path(t: Graph, v: int, p: int) -> Graph:
    """Replace a length-``p`` pendent path at ``v`` by two of lengths 2 and ``p - 2``.

    The leg ``v - a_p - ... - a_1`` becomes ``v - a_2 - a_1`` plus
    ``v - a_p - ... - a_3``.  ``v`` must keep another neighbour, otherwise the
    two trees coincide.
    """
    if p < 4:
        raise TransformError(f"split needs p >= 4, got {p}")
    if not is_tree(t):
        raise TransformError("split_pendent_path expects a tree")
    leg = find_leg(t, v, p)
    if t.degree(v) < 2:
        raise TransformError(f"vertex {v} has no neighbour outside the leg")
    a1, a2, a3 = leg[0], leg[1], leg[2]
    out = edit(t, remove=[(a2, a3)], add=[(v, a2)])
    if matching_number(out).size != matching_number(t).size:
        raise TransformError("matching number changed")
    return out


def split_sites(t: Graph, min_len: int = 4) -> list[tuple[int, int]]:
    """All ``(v, p)`` with a pendent leg of ``p >= min_len`` vertices at ``v``.

    ``v`` must have a neighbour outside the leg.
    """
    sites = []
    for v in range(t.n):
        if t.degree(v) < 2:
            continue
        for w in t.adj[v]:
            leg = leg_from(t, v, w)
            if leg is not None and len(leg) >= min_len:
                sites.append((v, len(leg)))
    return sorted(set(sites))
