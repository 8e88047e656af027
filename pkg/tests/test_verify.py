from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from alpha_spectra.canon import canonical_code
from alpha_spectra.enumeration import BudgetError, EnumBudget, all_connected_graphs
from alpha_spectra.families import Complete, Cycle, complete, cycle, make_gnk, make_gpsq, path, spider, star
from alpha_spectra.graph import graph6_decode
from alpha_spectra.spectral import ALPHA_GRID, spectral_radius
from alpha_spectra.verify import (
    CLAIMS,
    FAIL,
    INCONCLUSIVE,
    PASS,
    STRICT_TOL,
    VerificationOutcome,
    _unique_maximizer,
    certify_greater,
    perron_bracket,
    range_text,
    sample_problem1,
    strict_status,
    theorem1_grid,
    verify_lemma1_sample,
    verify_lemma2,
    verify_lemma2_corpus,
    verify_smith,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_transformation_a,
)


def check_outcome(o: VerificationOutcome) -> None:
    assert o.claim in CLAIMS
    if o.margin is None:
        return
    if o.status == PASS:
        assert o.margin > STRICT_TOL
    elif o.status == INCONCLUSIVE:
        assert 0 <= o.margin <= STRICT_TOL
    else:
        assert o.status == FAIL and o.witness


@given(st.floats(allow_nan=False, min_value=-1, max_value=1))
def test_strict_status_rule(margin):
    status = strict_status(margin)
    if margin > 1e-8:
        assert status == PASS
    elif margin >= 0:
        assert status == INCONCLUSIVE
    else:
        assert status == FAIL


def test_strict_status_edges():
    assert strict_status(1e-8) == INCONCLUSIVE
    assert strict_status(0.0) == INCONCLUSIVE
    assert strict_status(-1e-300) == FAIL
    assert strict_status(math.inf) == PASS


def test_lemma2_examples():
    o = verify_lemma2(make_gnk(7, 3), 0.0)
    assert o.status == PASS and o.margin > 0 and o.details["paths"] == 3
    o = verify_lemma2(path(8), 0.0)
    assert o.status == PASS and o.margin == math.inf and "vacuous" in o.details
    o = verify_lemma2(make_gpsq(Complete(4), 4, 0, 2).graph, 0.5)
    assert o.status == PASS and o.details["paths"] == 2
    check_outcome(o)


def test_lemma2_entries_increase_inward():
    g = make_gpsq(Complete(4), 4, 0, 2)
    x = spectral_radius(g.graph, 0.5).x
    chain = list(g.u_path) + [g.u]
    assert all(x[a] < x[b] for a, b in zip(chain, chain[1:]))


def test_lemma2_corpus_small():
    o = verify_lemma2_corpus([5, 6], 0.25)
    assert o.status == PASS and o.details["checked"] > 0
    assert o.params["n"] == "5..6"


def test_theorem1_examples():
    for core, p, s, q, a in ((Cycle(3), 3, 0, 1, 0.0), (Cycle(4), 4, 1, 1, 0.5), (Complete(4), 5, 2, 1, 0.75)):
        o = verify_theorem1(core, p, s, q, a)
        assert o.status == PASS, o
        assert o.details["rho_after"] > o.details["rho_before"]
        assert len(o.witness) == 2
        check_outcome(o)


def test_theorem1_hypothesis_guards():
    with pytest.raises(ValueError):
        verify_theorem1(Cycle(3), 3, 2, 1, 0.0)
    with pytest.raises(ValueError):
        verify_theorem1(Cycle(3), 3, 0, 0, 0.0)


def test_theorem1_grid_shape():
    cells = theorem1_grid()
    assert len(cells) == 132
    for core, p, s, q in cells:
        assert p - q >= max(s + 1, 2) and 1 <= q <= 3 and 0 <= s <= 3
        assert make_gpsq(core, p, s, q).graph.n <= 16


def test_theorem1_tiny_gap_is_inconclusive_but_certified():
    o = verify_theorem1(Cycle(3), 5, 0, 3, 0.99)
    assert o.status == INCONCLUSIVE
    assert 0 <= o.margin <= STRICT_TOL
    assert o.details["certified"] is True
    assert float(o.details["certified_gap_lower_bound"]) > 0


def test_perron_bracket_encloses_radius():
    for g, a in ((make_gnk(7, 3), 0.3), (path(5), 0.0), (star(6), 0.99)):
        lo, hi = perron_bracket(g, a)
        rho = spectral_radius(g, a).rho
        assert float(lo) - 1e-12 <= rho <= float(hi) + 1e-12
        assert hi - lo < 1e-40
    assert certify_greater(make_gnk(7, 2), make_gnk(7, 3), 0.5)
    assert not certify_greater(make_gnk(7, 3), make_gnk(7, 2), 0.5)


def test_theorem2_examples():
    o = verify_theorem2(5, 0, 0.0)
    assert o.status == PASS and abs(o.details["rho_max"] - 4) <= 1e-10
    assert verify_theorem2(6, 2, 0.5).status == PASS
    o = verify_theorem2(7, 3, 0.99)
    assert o.status == PASS
    assert canonical_code(graph6_decode(o.witness[0])) == canonical_code(make_gnk(7, 3))
    check_outcome(o)


def test_theorem2_guards():
    with pytest.raises(BudgetError):
        verify_theorem2(9, 2, 0.0)
    with pytest.raises(BudgetError):
        verify_theorem2(6, 2, 0.0, EnumBudget(12, 5))
    with pytest.raises(ValueError):
        verify_theorem2(5, 4, 0.0)


def test_theorem3_examples():
    o = verify_theorem3(7, 1, 0.5)
    assert o.status == PASS and o.margin == math.inf and o.details["class_size"] == 1
    assert verify_theorem3(8, 3, 0.0).status == PASS
    o = verify_theorem3(10, 5, 0.25)
    assert o.status == PASS and o.margin > STRICT_TOL
    with pytest.raises(BudgetError):
        verify_theorem3(13, 2, 0.0)
    with pytest.raises(ValueError):
        verify_theorem3(3, 1, 0.0)


def test_unique_maximizer_reports_wrong_target_as_fail():
    graphs = list(all_connected_graphs(5))
    o = _unique_maximizer("Theorem2", {"n": 5}, graphs, path(5), 0.0, 0.0)
    assert o.status == FAIL and o.margin < 0 and len(o.witness) == 2
    check_outcome(o)


def test_lemma1_corpus_n5():
    corpus = list(all_connected_graphs(5))
    o = verify_lemma1_sample(corpus, 10, 0.0, seed=3)
    assert o.status == PASS
    total = o.details["checked"] + o.details["skipped_hypothesis"] + o.details["skipped_disconnected"]
    assert total == 10 * sum(1 for g in corpus if g.m < 10)
    check_outcome(o)


def test_lemma1_star_centre_is_skipped():
    # star(5): every spec moves leaves off the centre onto a leaf, x_leaf < x_centre
    o = verify_lemma1_sample([star(5)], 50, 0.0)
    assert o.details["checked"] == 0 and o.details["skipped_hypothesis"] == 50
    assert o.status == INCONCLUSIVE


def test_lemma1_deterministic():
    corpus = list(all_connected_graphs(5))
    a = verify_lemma1_sample(corpus, 5, 0.5, seed=11)
    b = verify_lemma1_sample(corpus, 5, 0.5, seed=11)
    assert (a.margin, a.details) == (b.margin, b.details)
    with pytest.raises(ValueError):
        verify_lemma1_sample(corpus, 0, 0.5)


def test_transformation_a_examples():
    o = verify_transformation_a([8], 0.0)
    assert o.status == PASS and o.details["matching_preserved"] and o.details["checked"] > 0
    check_outcome(o)


def test_smith_outcomes():
    outs = verify_smith((0.0, 0.5))
    parts = [(o.params["part"], o.params["alpha"]) for o in outs]
    assert parts == [("below2", 0.0), ("equal2", 0.0), ("above2", 0.0), ("above2", 0.5)]
    assert all(o.status == PASS for o in outs)
    assert outs[0].margin > 1e-4
    assert outs[1].margin is None and outs[1].details["max_deviation"] <= 1e-9
    for o in outs:
        check_outcome(o)


def test_smith_examples():
    assert abs(spectral_radius(spider(1, 3, 3), 0.0).rho - 2) <= 1e-9
    assert abs(spectral_radius(cycle(9), 0.0).rho - 2) <= 1e-10
    assert abs(spectral_radius(complete(4), 0.0).rho - 3) <= 1e-10


def test_problem1_is_marked_as_evidence():
    o = sample_problem1(0.5, 20, seed=1)
    assert o.claim == "Problem1" and o.details["evidence_only"] is True
    assert o.details["checked"] > 0
    check_outcome(o)


def test_outcome_record_and_sort_key():
    o = VerificationOutcome("Lemma2", {"n": "2..3", "alpha": 0.5}, PASS, math.inf, (), 1.23456789)
    rec = o.to_record()
    assert rec["margin"] is None and rec["elapsed"] == 1.234568
    assert o.to_record(timing=False)["elapsed"] == 0.0
    assert set(rec) >= {"claim", "params", "status", "margin", "witness", "elapsed"}
    assert o.sort_key() == ("Lemma2", (("alpha", "0.5"), ("n", "2..3")))


def test_range_text():
    assert range_text([4, 5, 6]) == "4..6"
    assert range_text([7]) == "7"
    assert range_text([2, 5]) == "2,5"


@pytest.mark.parametrize("a", ALPHA_GRID)
def test_theorem1_s_le_1_cells_pass_or_certify(a):
    for core, p, s, q in theorem1_grid(s_values=(0, 1), q_values=(1,)):
        o = verify_theorem1(core, p, s, q, a, claim="Conjecture1")
        assert o.claim == "Conjecture1"
        assert o.status == PASS or o.details.get("certified") is True
