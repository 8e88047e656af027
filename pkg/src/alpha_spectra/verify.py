"""Executable checks of the extremal results over parameter grids.

Every check returns a :class:`VerificationOutcome`.  Strict inequalities
follow one rule: a gap above ``STRICT_TOL`` passes, a gap in
``[0, STRICT_TOL]`` is inconclusive, a negative gap fails.
"""

from __future__ import annotations

import math
import time
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

import mpmath
import numpy as np

from .canon import canonical_code
from .enumeration import (
    DEFAULT_BUDGET,
    BudgetError,
    EnumBudget,
    all_connected_graphs,
    all_trees,
    graphs_with_cut_vertices,
    trees_with_matching,
)
from .families import (
    Complete,
    Cycle,
    FamilySpec,
    make_ank,
    make_gnk,
    make_gpsq,
    make_gpsq_on,
    smith_members,
)
from .graph import Graph, graph6_encode
from .spectral import ALPHA_GRID, check_alpha, spectral_radius
from .structure import pendent_paths
from .transforms import (
    ShiftSpec,
    TransformError,
    rebalance_pendent_paths,
    shift_neighbors,
    split_pendent_path,
    split_sites,
)

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
STRICT_TOL = 1e-8
HYPOTHESIS_TOL = 1e-12
EQUALITY_TOL = 1e-9
CERTIFY_DPS = 60

CLAIMS = (
    "Lemma1",
    "Lemma2",
    "Theorem1",
    "Conjecture1",
    "Theorem2",
    "Theorem3",
    "TransformationA",
    "SmithRadii",
    "Problem1",
)


@dataclass
class VerificationOutcome:
    claim: str
    params: dict
    status: str
    margin: float | None
    witness: tuple[str, ...] = ()
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    def sort_key(self) -> tuple:
        return (self.claim, _params_key(self.params))

    def to_record(self, timing: bool = True) -> dict:
        margin = self.margin
        if margin is not None and math.isinf(margin):
            margin = None
        return {
            "claim": self.claim,
            "params": self.params,
            "status": self.status,
            "margin": margin,
            "witness": list(self.witness),
            "elapsed": round(self.elapsed, 6) if timing else 0.0,
            "details": self.details,
        }


def _params_key(params: dict) -> tuple:
    return tuple(sorted((k, str(v)) for k, v in params.items()))


def strict_status(margin: float) -> str:
    if margin > STRICT_TOL:
        return PASS
    if margin >= 0:
        return INCONCLUSIVE
    return FAIL


def _core_text(core: FamilySpec) -> str:
    return f"{core.kind}{core.params[0]}"


# -- certified comparison ------------------------------------------------------

def perron_bracket(g: Graph, alpha: float, dps: int = CERTIFY_DPS) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Rigorous enclosure of the spectral radius from a high-precision positive vector.

    For a nonnegative irreducible matrix and any positive ``x`` the radius lies
    between ``min_i (Mx)_i / x_i`` and ``max_i (Mx)_i / x_i``; the ratios are
    evaluated in interval arithmetic.
    """
    with mpmath.workdps(dps):
        a = mpmath.mpf(alpha)
        M = mpmath.matrix(g.n, g.n)
        for u, v in g.edges():
            M[u, v] = M[v, u] = 1 - a
        for v in range(g.n):
            M[v, v] = a * g.degree(v)
        evals, evecs = mpmath.eigsy(M)
        top = max(range(g.n), key=lambda i: evals[i])
        x = [abs(evecs[i, top]) for i in range(g.n)]
    iv = mpmath.iv
    saved = iv.prec
    iv.dps = dps
    try:
        ia = iv.mpf(alpha)
        lo = hi = None
        for v in range(g.n):
            xv = iv.mpf(x[v])
            nbrs = sum((iv.mpf(x[w]) for w in g.adj[v]), iv.mpf(0))
            ratio = (ia * g.degree(v) * xv + (1 - ia) * nbrs) / xv
            lo = ratio.a if lo is None else min(lo, ratio.a)
            hi = ratio.b if hi is None else max(hi, ratio.b)
    finally:
        iv.prec = saved
    with mpmath.workdps(dps):
        return mpmath.mpf(lo), mpmath.mpf(hi)


def certify_greater(big: Graph, small: Graph, alpha: float, dps: int = CERTIFY_DPS) -> bool:
    """True if the radius of ``big`` provably exceeds that of ``small``."""
    lo_big, _ = perron_bracket(big, alpha, dps)
    _, hi_small = perron_bracket(small, alpha, dps)
    return lo_big > hi_small


def _certify_note(outcome: VerificationOutcome, big: Graph, small: Graph, alpha: float) -> None:
    if outcome.status != INCONCLUSIVE:
        return
    with mpmath.workdps(CERTIFY_DPS):
        lo_big, _ = perron_bracket(big, alpha)
        _, hi_small = perron_bracket(small, alpha)
        ok = lo_big > hi_small
        outcome.details["certified"] = bool(ok)
        if ok:
            outcome.details["certified_gap_lower_bound"] = mpmath.nstr(lo_big - hi_small, 6)


# -- Perron entries along pendent paths (Lemma2) -----------------------------

def verify_lemma2(g: Graph, alpha: float) -> VerificationOutcome:
    """Perron entries strictly increase inward along every pendent path (anchor included)."""
    start = time.perf_counter()
    a = check_alpha(alpha)
    res = spectral_radius(g, a)
    params = {"graph": graph6_encode(g), "alpha": a}
    if res.rho <= 2.0 or g.n < 2:
        return VerificationOutcome("Lemma2", params, PASS, math.inf, (),
                                   time.perf_counter() - start, {"vacuous": "rho <= 2"})
    paths = [pp for pp in pendent_paths(g) if pp.anchor is not None]
    if not paths:
        return VerificationOutcome("Lemma2", params, PASS, math.inf, (),
                                   time.perf_counter() - start, {"vacuous": "no pendent path"})
    x = res.x
    margin = math.inf
    for pp in paths:
        chain = list(pp.vertices) + [pp.anchor]
        for a_, b_ in zip(chain, chain[1:]):
            margin = min(margin, float(x[b_] - x[a_]))
    status = strict_status(margin)
    witness = (graph6_encode(g),) if status != PASS else ()
    return VerificationOutcome("Lemma2", params, status, margin, witness,
                               time.perf_counter() - start, {"paths": len(paths), "rho": res.rho})


def verify_lemma2_corpus(n_values: Iterable[int], alpha: float,
                         budget: EnumBudget = DEFAULT_BUDGET) -> VerificationOutcome:
    """Aggregate :func:`verify_lemma2` over all connected graphs of the given orders."""
    start = time.perf_counter()
    a = check_alpha(alpha)
    n_values = sorted(n_values)
    margin = math.inf
    checked = vacuous = 0
    bad: list[str] = []
    for n in n_values:
        for g in all_connected_graphs(n, budget):
            if n < 2:
                continue
            out = verify_lemma2(g, a)
            if "vacuous" in out.details:
                vacuous += 1
                continue
            checked += 1
            margin = min(margin, out.margin)
            if out.status != PASS:
                bad.extend(out.witness)
    status = strict_status(margin) if checked else PASS
    params = {"n": range_text(n_values), "alpha": a}
    return VerificationOutcome("Lemma2", params, status, margin, tuple(bad[:10]),
                               time.perf_counter() - start,
                               {"checked": checked, "vacuous": vacuous})


# -- rebalancing pendant paths (Theorem1, Conjecture1) ------------------------

def verify_theorem1(core: FamilySpec, p: int, s: int, q: int, alpha: float,
                    claim: str = "Theorem1", certify: bool = True) -> VerificationOutcome:
    start = time.perf_counter()
    a = check_alpha(alpha)
    if p - q < max(s + 1, 2):
        raise ValueError(f"hypothesis p - q >= max(s+1, 2) fails for p={p}, s={s}, q={q}")
    if q < 1:
        raise ValueError("q >= 1 required")
    before = make_gpsq(core, p, s, q)
    after = rebalance_pendent_paths(before)
    r0 = spectral_radius(before.graph, a)
    r1 = spectral_radius(after.graph, a)
    margin = r1.rho - r0.rho
    status = strict_status(margin)
    params = {"core": _core_text(core), "p": p, "s": s, "q": q, "alpha": a}
    out = VerificationOutcome(
        claim, params, status, margin,
        (graph6_encode(before.graph), graph6_encode(after.graph)),
        0.0,
        {"rho_before": r0.rho, "rho_after": r1.rho, "n": before.graph.n},
    )
    if certify:
        _certify_note(out, after.graph, before.graph, a)
    out.elapsed = time.perf_counter() - start
    return out


DEFAULT_CORES = (Cycle(3), Cycle(4), Complete(4))


def theorem1_grid(
    cores: Sequence[FamilySpec] = DEFAULT_CORES,
    s_values: Iterable[int] = (0, 1, 2, 3),
    q_values: Iterable[int] = (1, 2, 3),
    max_total: int = 16,
) -> list[tuple[FamilySpec, int, int, int]]:
    """Cells ``(core, p, s, q)`` with ``q + max(s+1,2) <= p <= min(12 - s - q, q + 6)``."""
    cells = []
    for core in cores:
        for s in s_values:
            for q in q_values:
                lo = q + max(s + 1, 2)
                hi = min(12 - s - q, q + 6)
                for p in range(lo, hi + 1):
                    if make_gpsq(core, p, s, q).graph.n <= max_total:
                        cells.append((core, p, s, q))
    return cells


# -- unique maximisers over enumerated classes (Theorem2, Theorem3) -----------

def _unique_maximizer(claim: str, params: dict, graphs: list[Graph], target: Graph,
                      alpha: float, start: float) -> VerificationOutcome:
    if not graphs:
        raise ValueError(f"{claim}: empty class for {params}")
    scored = sorted(
        ((spectral_radius(g, alpha).rho, canonical_code(g), g) for g in graphs),
        key=lambda t: (-t[0], t[1]),
    )
    target_code = canonical_code(target)
    best_rho, best_code, best = scored[0]
    details = {"class_size": len(graphs), "rho_max": best_rho}
    if best_code != target_code:
        rho_target = next((r for r, c, _ in scored if c == target_code), None)
        details["target_in_class"] = rho_target is not None
        margin = (rho_target - best_rho) if rho_target is not None else -math.inf
        status = strict_status(margin) if margin < 0 else INCONCLUSIVE
        return VerificationOutcome(claim, params, status, margin,
                                   (graph6_encode(best), graph6_encode(target)),
                                   time.perf_counter() - start, details)
    if len(scored) == 1:
        margin = math.inf
        witness = (graph6_encode(best),)
    else:
        margin = best_rho - scored[1][0]
        witness = (graph6_encode(best), graph6_encode(scored[1][2]))
    return VerificationOutcome(claim, params, strict_status(margin), margin, witness,
                               time.perf_counter() - start, details)


def verify_theorem2(n: int, k: int, alpha: float, budget: EnumBudget = DEFAULT_BUDGET) -> VerificationOutcome:
    start = time.perf_counter()
    a = check_alpha(alpha)
    if n > budget.max_n_graphs:
        raise BudgetError(f"Theorem2 at n={n} exceeds the graph budget ({budget.max_n_graphs})")
    if not 0 <= k <= n - 2:
        raise ValueError(f"need 0 <= k <= n-2, got n={n}, k={k}")
    graphs = list(graphs_with_cut_vertices(n, k, budget))
    return _unique_maximizer("Theorem2", {"n": n, "k": k, "alpha": a}, graphs, make_gnk(n, k), a, start)


def verify_theorem3(n: int, k: int, alpha: float, budget: EnumBudget = DEFAULT_BUDGET) -> VerificationOutcome:
    start = time.perf_counter()
    a = check_alpha(alpha)
    if n < 4:
        raise ValueError("Theorem3 needs n >= 4")
    if n > budget.max_n_trees:
        raise BudgetError(f"Theorem3 at n={n} exceeds the tree budget ({budget.max_n_trees})")
    if not 1 <= k <= n // 2:
        raise ValueError(f"need 1 <= k <= n//2, got n={n}, k={k}")
    trees = list(trees_with_matching(n, k, budget))
    return _unique_maximizer("Theorem3", {"n": n, "k": k, "alpha": a}, trees, make_ank(n, k), a, start)


# -- neighbour shifts (Lemma1) ------------------------------------------------

def _shift_candidates(g: Graph) -> list[tuple[int, int, list[int]]]:
    out = []
    for v in range(g.n):
        for u in range(g.n):
            if u == v:
                continue
            cand = [w for w in g.adj[v] if w != u and not g.has_edge(u, w)]
            if cand:
                out.append((v, u, cand))
    return out


def verify_lemma1_sample(corpus: Iterable[Graph], trials: int, alpha: float,
                         seed: int = 0, label: str = "corpus") -> VerificationOutcome:
    """Random neighbour shifts whose Perron hypothesis ``x_u >= x_v`` holds must raise the radius.

    Specs failing the hypothesis, or whose shift disconnects the graph, are
    skipped and counted.
    """
    start = time.perf_counter()
    a = check_alpha(alpha)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng([seed, int(round(a * 10**6))])
    margin = math.inf
    checked = skipped_hyp = skipped_disc = 0
    bad: list[str] = []
    for g in corpus:
        cands = _shift_candidates(g)
        if not cands:
            continue
        res = spectral_radius(g, a)
        for _ in range(trials):
            v, u, cand = cands[int(rng.integers(len(cands)))]
            mask = int(rng.integers(1, 2 ** len(cand)))
            moved = [w for i, w in enumerate(cand) if mask >> i & 1]
            if res.x[u] < res.x[v] - HYPOTHESIS_TOL:
                skipped_hyp += 1
                continue
            try:
                h = shift_neighbors(g, ShiftSpec(v, u, moved))
            except TransformError:
                skipped_disc += 1
                continue
            gap = spectral_radius(h, a).rho - res.rho
            checked += 1
            if gap <= STRICT_TOL and len(bad) < 10:
                bad += [graph6_encode(g), graph6_encode(h)]
            margin = min(margin, gap)
    status = strict_status(margin) if checked else INCONCLUSIVE
    params = {"corpus": label, "trials": trials, "seed": seed, "alpha": a}
    return VerificationOutcome("Lemma1", params, status, margin, tuple(bad),
                               time.perf_counter() - start,
                               {"checked": checked, "skipped_hypothesis": skipped_hyp,
                                "skipped_disconnected": skipped_disc})


# -- splitting long pendent paths in trees (TransformationA) ------------------

def verify_transformation_a(n_values: Iterable[int], alpha: float,
                            budget: EnumBudget = DEFAULT_BUDGET) -> VerificationOutcome:
    """Split every pendent leg of >= 4 vertices (2 + rest) in every tree of the given orders."""
    start = time.perf_counter()
    a = check_alpha(alpha)
    n_values = sorted(n_values)
    margin = math.inf
    checked = 0
    bad: list[str] = []
    matching_broken = False
    for n in n_values:
        for t in all_trees(n, budget):
            sites = split_sites(t)
            if not sites:
                continue
            rho_t = spectral_radius(t, a).rho
            for v, p in sites:
                try:
                    h = split_pendent_path(t, v, p)
                except TransformError:
                    matching_broken = True
                    bad.append(graph6_encode(t))
                    continue
                gap = spectral_radius(h, a).rho - rho_t
                checked += 1
                if gap <= STRICT_TOL and len(bad) < 10:
                    bad += [graph6_encode(t), graph6_encode(h)]
                margin = min(margin, gap)
    status = FAIL if matching_broken else (strict_status(margin) if checked else PASS)
    params = {"n": range_text(n_values), "alpha": a}
    return VerificationOutcome("TransformationA", params, status, margin, tuple(bad),
                               time.perf_counter() - start,
                               {"checked": checked, "matching_preserved": not matching_broken})


# -- radius 2 threshold (SmithRadii) -------------------------------------------

@lru_cache(maxsize=None)
def smith_codes(max_n: int) -> frozenset[bytes]:
    return frozenset(canonical_code(g) for _, g in smith_members(max_n))


def verify_smith(alphas: Iterable[float] = ALPHA_GRID, member_max_n: int = 12,
                 others_max_n: int = 7, budget: EnumBudget = DEFAULT_BUDGET) -> list[VerificationOutcome]:
    """Radius below 2 / equal to 2 at alpha = 0, and above 2 for every non-Smith graph."""
    outcomes = []
    start = time.perf_counter()
    below = [(sid, g) for sid, g in smith_members(member_max_n) if sid in ("H1", "H2", "H3", "H4", "P")]
    equal = [(sid, g) for sid, g in smith_members(member_max_n) if sid not in ("H1", "H2", "H3", "H4", "P")]
    margin = min(2.0 - spectral_radius(g, 0.0).rho for _, g in below)
    outcomes.append(VerificationOutcome(
        "SmithRadii", {"part": "below2", "alpha": 0.0, "max_n": member_max_n},
        strict_status(margin), margin, (), time.perf_counter() - start,
        {"members": len(below)},
    ))
    start = time.perf_counter()
    worst = max(abs(spectral_radius(g, 0.0).rho - 2.0) for _, g in equal)
    outcomes.append(VerificationOutcome(
        "SmithRadii", {"part": "equal2", "alpha": 0.0, "max_n": member_max_n},
        PASS if worst <= EQUALITY_TOL else FAIL, None, (), time.perf_counter() - start,
        {"members": len(equal), "max_deviation": worst, "tolerance": EQUALITY_TOL},
    ))
    codes = smith_codes(others_max_n)
    others = [g for n in range(1, others_max_n + 1) for g in all_connected_graphs(n, budget)
              if canonical_code(g) not in codes]
    for alpha in alphas:
        start = time.perf_counter()
        a = check_alpha(alpha)
        gaps = [(spectral_radius(g, a).rho - 2.0, g) for g in others]
        margin, g_min = min(gaps, key=lambda t: t[0])
        status = strict_status(margin)
        outcomes.append(VerificationOutcome(
            "SmithRadii", {"part": "above2", "alpha": a, "max_n": others_max_n},
            status, margin, (graph6_encode(g_min),), time.perf_counter() - start,
            {"graphs": len(others)},
        ))
    return outcomes


# -- arbitrary hosts, evidence only (Problem1) --------------------------------

def sample_problem1(alpha: float, trials: int, seed: int = 0, host_n: Sequence[int] = (4, 5, 6),
                    max_total: int = 9, budget: EnumBudget = DEFAULT_BUDGET) -> VerificationOutcome:
    """Random hosts with non-adjacent ``u, v`` of degree >= 2 and the ``G_{p,q}(u,v)`` move.

    Reported as evidence only: the statement is not claimed for arbitrary hosts.
    """
    start = time.perf_counter()
    a = check_alpha(alpha)
    rng = np.random.default_rng([seed, 7, int(round(a * 10**6))])
    hosts = []
    for n in host_n:
        for g in all_connected_graphs(n, budget):
            pairs = [(u, v) for u in range(n) for v in range(n)
                     if u != v and not g.has_edge(u, v) and g.degree(u) >= 2 and g.degree(v) >= 2]
            if pairs:
                hosts.append((g, pairs))
    margin = math.inf
    checked = 0
    bad: list[str] = []
    for _ in range(trials):
        g, pairs = hosts[int(rng.integers(len(hosts)))]
        u, v = pairs[int(rng.integers(len(pairs)))]
        room = max_total - g.n
        if room < 4:
            continue
        q = int(rng.integers(1, (room - 2) // 2 + 1))
        p = int(rng.integers(q + 2, room - q + 1))
        before = make_gpsq_on(g, (u,), p, 0)
        before = make_gpsq_on(before.graph, (v,), q, 0)
        after = make_gpsq_on(g, (u,), p - 1, 0)
        after = make_gpsq_on(after.graph, (v,), q + 1, 0)
        gap = spectral_radius(after.graph, a).rho - spectral_radius(before.graph, a).rho
        checked += 1
        if gap <= STRICT_TOL and len(bad) < 10:
            bad += [graph6_encode(before.graph), graph6_encode(after.graph)]
        margin = min(margin, gap)
    status = strict_status(margin) if checked else INCONCLUSIVE
    params = {"trials": trials, "seed": seed, "alpha": a, "max_total": max_total}
    return VerificationOutcome("Problem1", params, status, margin, tuple(bad),
                               time.perf_counter() - start,
                               {"checked": checked, "evidence_only": True})


def range_text(values: Sequence[int]) -> str:
    values = list(values)
    if values and values == list(range(values[0], values[-1] + 1)) and len(values) > 1:
        return f"{values[0]}..{values[-1]}"
    return ",".join(str(v) for v in values)
