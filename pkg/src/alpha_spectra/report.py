"""JSON / CSV / graph6 serialisation of verification outcomes."""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Sequence

from . import __version__
from .verify import FAIL, INCONCLUSIVE, PASS, VerificationOutcome

TOOL = "alpha-spectra"


def sort_outcomes(outcomes: Sequence[VerificationOutcome]) -> list[VerificationOutcome]:
    return sorted(outcomes, key=lambda o: o.sort_key())


def summarize(outcomes: Sequence[VerificationOutcome]) -> dict[str, dict]:
    out: dict[str, dict] = {}
    for o in outcomes:
        row = out.setdefault(o.claim, {PASS: 0, FAIL: 0, INCONCLUSIVE: 0, "min_margin": None})
        row[o.status] += 1
        if o.margin is not None and not math.isinf(o.margin):
            if row["min_margin"] is None or o.margin < row["min_margin"]:
                row["min_margin"] = o.margin
    return out


def exit_code(outcomes: Sequence[VerificationOutcome]) -> int:
    statuses = {o.status for o in outcomes}
    if FAIL in statuses:
        return 1
    if INCONCLUSIVE in statuses:
        return 2
    return 0


def to_json(outcomes: Sequence[VerificationOutcome], config: dict, timing: bool = True) -> str:
    ordered = sort_outcomes(outcomes)
    doc = {
        "tool": TOOL,
        "version": __version__,
        "config": config,
        "summary": summarize(ordered),
        "outcomes": [o.to_record(timing) for o in ordered],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def to_csv(outcomes: Sequence[VerificationOutcome], timing: bool = True) -> str:
    ordered = sort_outcomes(outcomes)
    keys = sorted({k for o in ordered for k in o.params})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["claim", *(f"param_{k}" for k in keys), "status", "margin", "witness", "elapsed", "details"])
    for o in ordered:
        rec = o.to_record(timing)
        writer.writerow([
            rec["claim"],
            *(rec["params"].get(k, "") for k in keys),
            rec["status"],
            "" if rec["margin"] is None else repr(rec["margin"]),
            " ".join(rec["witness"]),
            rec["elapsed"],
            json.dumps(rec["details"], sort_keys=True),
        ])
    return buf.getvalue()


def to_graph6(outcomes: Sequence[VerificationOutcome]) -> str:
    lines = []
    for o in sort_outcomes(outcomes):
        lines.extend(o.witness)
    return "".join(line + "\n" for line in lines)
