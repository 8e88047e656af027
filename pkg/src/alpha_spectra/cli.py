"""Command-line entry point: ``alpha-spectra rho|verify|enum|family``.

Exit codes: 0 success (all pass), 1 a verification failed, 2 something was
inconclusive, 3 usage error (bad flags, unparseable input, over budget).
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__, report, spectral
from .enumeration import (
    BUDGET_ENV,
    BudgetError,
    EnumBudget,
    all_connected_graphs,
    all_trees,
    dump_graph6,
)
from .families import Complete, Cycle, FamilyError, FamilySpec, build, parse_family
from .graph import Graph6Error, GraphError, graph6_decode, graph6_encode, read_graph6_lines
from .spectral import ALPHA_GRID, ConvergenceError, DisconnectedGraphError, check_alpha
from .structure import count_cut_vertices, matching_number
from .verify import (
    DEFAULT_CORES,
    VerificationOutcome,
    range_text,
    sample_problem1,
    theorem1_grid,
    verify_lemma1_sample,
    verify_lemma2_corpus,
    verify_smith,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_transformation_a,
)

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3

CLAIM_NAMES = (
    "lemma1", "lemma2", "theorem1", "conjecture1", "theorem2", "theorem3",
    "transformation-a", "smith", "problem1",
)
# problem1 is evidence about an open question, so "all" leaves it out
ALL_CLAIMS = tuple(c for c in CLAIM_NAMES if c != "problem1")

DEFAULT_N = {
    "lemma1": (2, 6),
    "lemma2": (2, 7),
    "theorem2": (2, 7),
    "theorem3": (4, 12),
    "transformation-a": (5, 10),
}
DEFAULT_TRIALS = {"lemma1": 8, "problem1": 200}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- argument helpers ---------------------------------------------------------------

def parse_alphas(text: str) -> tuple[float, ...]:
    try:
        values = tuple(check_alpha(float(x)) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad --alpha {text!r}: {exc}") from None
    if not values:
        raise UsageError("--alpha needs at least one value")
    return values


def parse_range(text: str) -> tuple[int, ...]:
    """``"7"``, ``"4..10"`` or ``"3,5,8"``."""
    text = text.strip()
    try:
        m = re.fullmatch(r"(\d+)\s*\.\.\s*(\d+)", text)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if lo > hi:
                raise UsageError(f"empty range {text!r}")
            return tuple(range(lo, hi + 1))
        values = tuple(sorted({int(x) for x in text.split(",")}))
    except ValueError:
        raise UsageError(f"bad integer range {text!r}") from None
    if any(v < 0 for v in values):
        raise UsageError(f"negative value in {text!r}")
    return values


def parse_cores(text: str) -> tuple[FamilySpec, ...]:
    cores = []
    for tok in text.split(","):
        m = re.fullmatch(r"\s*(cycle|complete|C|K)(\d+)\s*", tok, flags=re.IGNORECASE)
        if not m:
            raise UsageError(f"bad core {tok!r}; use cycleN or completeN")
        size = int(m.group(2))
        kind = m.group(1).lower()
        if kind in ("cycle", "c"):
            if size < 3:
                raise UsageError(f"cycle core needs size >= 3, got {size}")
            cores.append(Cycle(size))
        else:
            if size < 3:
                raise UsageError(f"complete core needs size >= 3, got {size}")
            cores.append(Complete(size))
    return tuple(cores)


def _budget() -> EnumBudget:
    try:
        return EnumBudget.from_env()
    except BudgetError as exc:
        raise UsageError(str(exc)) from None


# -- rho ------------------------------------------------------------------------------

def _rho_sources(args) -> list[tuple[str, object]]:
    sources: list[tuple[str, object]] = []
    for text in args.family or ():
        try:
            sources.append((text, build(parse_family(text))))
        except FamilyError as exc:
            raise UsageError(f"family {text!r}: {exc}") from None
    for text in args.graph6 or ():
        try:
            sources.append((text, graph6_decode(text)))
        except Graph6Error as exc:
            raise UsageError(f"graph6 {text!r}: {exc}") from None
    if args.graph6_file:
        try:
            with open(args.graph6_file, encoding="ascii") as fh:
                lines = [ln.strip() for ln in fh if ln.strip()]
            for text, g in zip(lines, read_graph6_lines(lines)):
                sources.append((text, g))
        except (OSError, Graph6Error, UnicodeDecodeError) as exc:
            raise UsageError(f"{args.graph6_file}: {exc}") from None
    if not sources:
        raise UsageError("rho needs --family, --graph6 or --graph6-file")
    return sources


def cmd_rho(args) -> int:
    alphas = parse_alphas(args.alpha)
    sources = _rho_sources(args)
    rows = [("graph", "alpha", "n", "m", "rho", "residual", "iterations")]
    for label, g in sources:
        for a in alphas:
            try:
                res = spectral.spectral_radius(g, a)
            except DisconnectedGraphError:
                rows.append((label, f"{a:g}", str(g.n), str(g.m), "disconnected", "-", "-"))
                continue
            except ConvergenceError as exc:
                rows.append((label, f"{a:g}", str(g.n), str(g.m), "no-convergence",
                             f"{exc.residual:.2e}", str(exc.iterations)))
                continue
            rows.append((label, f"{a:g}", str(g.n), str(g.m), f"{res.rho:.15g}",
                         f"{res.residual:.2e}", str(res.iterations)))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return EXIT_OK


# -- family ---------------------------------------------------------------------------

def cmd_family(args) -> int:
    try:
        g = build(parse_family(args.spec))
    except FamilyError as exc:
        raise UsageError(f"family {args.spec!r}: {exc}") from None
    print(graph6_encode(g))
    return EXIT_OK


# -- enum -----------------------------------------------------------------------------

def cmd_enum(args) -> int:
    budget = _budget()
    try:
        source = all_trees(args.n, budget) if args.kind == "trees" else all_connected_graphs(args.n, budget)
        graphs = list(source)
    except BudgetError as exc:
        raise UsageError(str(exc)) from None
    if args.matching is not None:
        graphs = [g for g in graphs if matching_number(g).size == args.matching]
    if args.cut_vertices is not None:
        graphs = [g for g in graphs if count_cut_vertices(g) == args.cut_vertices]
    if args.count:
        print(len(graphs))
    else:
        for line in dump_graph6(graphs):
            print(line)
    return EXIT_OK


# -- verify ---------------------------------------------------------------------------

def _n_values(claim: str, args) -> tuple[int, ...]:
    if args.n is not None:
        return parse_range(args.n)
    lo, hi = DEFAULT_N[claim]
    return tuple(range(lo, hi + 1))


def _check_budget(claim: str, n_values: Sequence[int], budget: EnumBudget) -> None:
    trees = claim in ("theorem3", "transformation-a")
    limit = budget.max_n_trees if trees else budget.max_n_graphs
    what = "tree" if trees else "graph"
    too_big = [n for n in n_values if n > limit]
    if too_big:
        raise UsageError(
            f"{claim} at n={max(too_big)} exceeds the {what} enumeration budget (max {limit}); "
            f"lower --n or see {BUDGET_ENV}"
        )


def build_cells(claim: str, args, alphas: Sequence[float], budget: EnumBudget) -> list[tuple]:
    """Independent, picklable work items ``(claim, kwargs)`` for one claim."""
    cells: list[tuple] = []
    trials = args.trials if args.trials is not None else DEFAULT_TRIALS.get(claim, 8)
    if trials < 1:
        raise UsageError("--trials must be >= 1")
    if claim in DEFAULT_N:
        n_values = _n_values(claim, args)
        _check_budget(claim, n_values, budget)
    if claim == "lemma1":
        for a in alphas:
            cells.append((claim, {"n_values": n_values, "trials": trials, "alpha": a, "seed": args.seed}))
    elif claim in ("lemma2", "transformation-a"):
        for n in n_values:
            for a in alphas:
                cells.append((claim, {"n": n, "alpha": a}))
    elif claim in ("theorem1", "conjecture1"):
        cores = parse_cores(args.cores) if args.cores else DEFAULT_CORES
        s_default = (0, 1) if claim == "conjecture1" else (0, 1, 2, 3)
        s_values = parse_range(args.s) if args.s else s_default
        q_values = parse_range(args.q) if args.q else (1, 2, 3)
        if 0 in q_values:
            raise UsageError("--q values must be >= 1")
        name = "Theorem1" if claim == "theorem1" else "Conjecture1"
        for core, p, s, q in theorem1_grid(cores, s_values, q_values):
            for a in alphas:
                cells.append((claim, {"core": core, "p": p, "s": s, "q": q, "alpha": a, "name": name}))
    elif claim in ("theorem2", "theorem3"):
        k_filter = parse_range(args.k) if args.k else None
        for n in n_values:
            if claim == "theorem2":
                ks = range(0, n - 1)
            else:
                if n < 4:
                    raise UsageError("theorem3 needs n >= 4")
                ks = range(1, n // 2 + 1)
            for k in ks:
                if k_filter is not None and k not in k_filter:
                    continue
                for a in alphas:
                    cells.append((claim, {"n": n, "k": k, "alpha": a}))
    elif claim == "smith":
        cells.append((claim, {"alphas": tuple(alphas)}))
    elif claim == "problem1":
        for a in alphas:
            cells.append((claim, {"alpha": a, "trials": trials, "seed": args.seed}))
    else:
        raise UsageError(f"unknown claim {claim!r}")
    return cells


def run_cell(cell: tuple, tolerance: float | None = None, budget: EnumBudget | None = None) -> list[VerificationOutcome]:
    claim, kw = cell
    if tolerance is not None:
        spectral.DEFAULT_TOL = tolerance
    budget = budget or EnumBudget()
    if claim == "lemma1":
        corpus = [g for n in kw["n_values"] for g in all_connected_graphs(n, budget)]
        label = "connected n=" + range_text(kw["n_values"])
        return [verify_lemma1_sample(corpus, kw["trials"], kw["alpha"], kw["seed"], label)]
    if claim == "lemma2":
        return [verify_lemma2_corpus([kw["n"]], kw["alpha"], budget)]
    if claim == "transformation-a":
        return [verify_transformation_a([kw["n"]], kw["alpha"], budget)]
    if claim in ("theorem1", "conjecture1"):
        return [verify_theorem1(kw["core"], kw["p"], kw["s"], kw["q"], kw["alpha"], claim=kw["name"])]
    if claim == "theorem2":
        return [verify_theorem2(kw["n"], kw["k"], kw["alpha"], budget)]
    if claim == "theorem3":
        return [verify_theorem3(kw["n"], kw["k"], kw["alpha"], budget)]
    if claim == "smith":
        return verify_smith(kw["alphas"], others_max_n=min(7, budget.max_n_graphs), budget=budget)
    if claim == "problem1":
        return [sample_problem1(kw["alpha"], kw["trials"], kw["seed"], budget=budget)]
    raise ValueError(f"unknown claim {claim!r}")


def _run_star(packed: tuple) -> list[VerificationOutcome]:
    return run_cell(*packed)


def run_cells(cells: Sequence[tuple], jobs: int, tolerance: float | None,
              budget: EnumBudget) -> list[VerificationOutcome]:
    packed = [(c, tolerance, budget) for c in cells]
    if jobs <= 1 or len(cells) <= 1:
        saved = spectral.DEFAULT_TOL
        try:
            return [o for p in packed for o in _run_star(p)]
        finally:
            spectral.DEFAULT_TOL = saved
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [o for chunk in pool.map(_run_star, packed) for o in chunk]


def _format_for(args) -> str:
    if args.format:
        return args.format
    if args.output and args.output != "-":
        suffix = Path(args.output).suffix.lower()
        return {".csv": "csv", ".g6": "graph6", ".graph6": "graph6"}.get(suffix, "json")
    return "json"


def cmd_verify(args) -> int:
    claims = ALL_CLAIMS if args.claim == "all" else (args.claim,)
    alphas = parse_alphas(args.alpha) if args.alpha else ALPHA_GRID
    if args.tolerance is not None and not args.tolerance > 0:
        raise UsageError("--tolerance must be > 0")
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")
    budget = _budget()
    cells = [c for claim in claims for c in build_cells(claim, args, alphas, budget)]
    try:
        outcomes = run_cells(cells, jobs, args.tolerance, budget)
    except BudgetError as exc:
        raise UsageError(str(exc)) from None
    outcomes = report.sort_outcomes(outcomes)
    fmt = _format_for(args)
    timing = not args.no_timing
    config = {
        "claims": list(claims),
        "alphas": list(alphas),
        "budget": {"max_n_trees": budget.max_n_trees, "max_n_graphs": budget.max_n_graphs},
        "tolerance": args.tolerance if args.tolerance is not None else spectral.DEFAULT_TOL,
        "seed": args.seed,
        "trials": args.trials,
        "n": args.n,
        "k": args.k,
        "cores": args.cores,
        "s": args.s,
        "q": args.q,
        "format": fmt,
    }
    if fmt == "json":
        text = report.to_json(outcomes, config, timing)
    elif fmt == "csv":
        text = report.to_csv(outcomes, timing)
    else:
        text = report.to_graph6(outcomes)
    out = sys.stdout
    if args.output == "-":
        sys.stdout.write(text)
        out = sys.stderr
    elif args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    for claim, row in sorted(report.summarize(outcomes).items()):
        mm = row["min_margin"]
        print(
            f"{claim}: pass={row['pass']} fail={row['fail']} inconclusive={row['inconclusive']} "
            f"min_margin={'n/a' if mm is None else format(mm, '.3e')}",
            file=out,
        )
    return report.exit_code(outcomes)


# -- parser ---------------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alpha-spectra", description="A_alpha spectral radius toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rho", help="spectral radius table")
    p.add_argument("--family", action="append", help="family text, e.g. gnk:7,3 (repeatable)")
    p.add_argument("--graph6", action="append", help="graph6 string (repeatable)")
    p.add_argument("--graph6-file", help="file with one graph6 string per line")
    p.add_argument("--alpha", default="0", help="comma-separated alpha values (default 0)")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("family", help="print a family member as graph6")
    p.add_argument("spec")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enum", help="enumerate trees or connected graphs")
    p.add_argument("kind", choices=("trees", "graphs"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matching", type=int)
    p.add_argument("--cut-vertices", type=int)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("claim", choices=(*CLAIM_NAMES, "all"))
    p.add_argument("--n", help="order range, e.g. 4..10")
    p.add_argument("--k", help="restrict k, e.g. 1..3")
    p.add_argument("--alpha", help="comma-separated alpha grid")
    p.add_argument("--cores", help="cores for theorem1, e.g. cycle3,complete4")
    p.add_argument("--s", help="s values for theorem1")
    p.add_argument("--q", help="q values for theorem1")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int)
    p.add_argument("--tolerance", type=float, help="power-iteration residual tolerance")
    p.add_argument("--output", help="report path, or - for stdout")
    p.add_argument("--format", choices=("json", "csv", "graph6"))
    p.add_argument("--no-timing", action="store_true", help="zero the elapsed fields")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, FamilyError) as exc:
        print(f"alpha-spectra: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
