from __future__ import annotations

from fractions import Fraction

import pytest

from redblue import (
    BadParams,
    Colour,
    KColouredGraph,
    SearchBudget,
    SearchMode,
    TooLargeForExact,
    UncolouredView,
    Verdict,
    count_two_bipartite,
    cycle_spectrum,
    erdos_gallai_floor,
    gen_bipartite_complement,
    gen_blowup_c5,
    gen_f_st,
    gen_g_r_t,
    gen_k_bipartite,
    gen_two_bipartite_k4p,
    minimize_mono_circumference,
    parse,
    phi_certificates,
    search_colourings,
    verify_circumference,
    verify_k_colour_conjecture,
    verify_main,
)
from redblue.harness import compile_predicate
from conftest import complete_red, complete_view, cycle_view
from oracles import spectrum_by_permutation_search


# --- verify_main -----------------------------------------------------------

def test_verify_main_extremal_for_all_small_masks():
    for p in (1, 2):
        for mask in range(1 << (2 * p * p)):
            report = verify_main(gen_two_bipartite_k4p(p, free_mask=mask))
            assert report.verdict is Verdict.EXTREMAL_CASE


def test_verify_main_all_red_k7():
    report = verify_main(complete_red(7))
    assert report.verdict is Verdict.CONFIRMED
    assert report.witness["range"] == [4, 4]


def test_verify_main_bipartite_complement_8():
    report = verify_main(gen_bipartite_complement(8))
    assert report.verdict is Verdict.CONFIRMED  # red K_{4,4} has a C4


def test_verify_main_hypothesis_unmet():
    report = verify_main(gen_g_r_t(2, 2))  # min degree 5 < ceil(3*8/4) = 6
    assert report.verdict is Verdict.INCONCLUSIVE


def test_verify_main_blowup_covers_its_range():
    # min degree 16 >= ceil(3*20/4); both colours realise every length in
    # [4, 10] (only the triangle is excluded, and 3 is below the range)
    report = verify_main(gen_blowup_c5(4))
    assert report.verdict is Verdict.CONFIRMED


# --- verify_circumference --------------------------------------------------

def test_verify_circumference_f63():
    report = verify_circumference(gen_f_st(6, 3), Fraction(1, 180))
    assert report.verdict is Verdict.CONFIRMED
    assert report.witness["disjunct"] == "same-colour-range"
    assert report.witness["range"] == [3, 5]


def test_verify_circumference_all_red_k9():
    report = verify_circumference(complete_red(9), Fraction(1, 180))
    assert report.verdict is Verdict.CONFIRMED


def test_verify_circumference_hypothesis_unmet():
    report = verify_circumference(gen_g_r_t(2, 2), Fraction(1, 180))
    assert report.verdict is Verdict.INCONCLUSIVE


def test_verify_circumference_warns_outside_delta_range():
    with pytest.warns(UserWarning):
        verify_circumference(complete_red(9), Fraction(1, 2))


# --- predicates and search -------------------------------------------------

def test_predicates_against_spectrum_oracle():
    views = [
        complete_view(5),
        cycle_view(5),
        cycle_view(6),
        UncolouredView.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]),
    ]
    for view in views:
        lengths = spectrum_by_permutation_search(view)
        empty = [0] * view.n
        for name, want in (
            ("mono-c3", 3 in lengths),
            ("mono-c4", 4 in lengths),
            ("mono-c3-or-c5", 3 in lengths or 5 in lengths),
        ):
            fn, symmetric = compile_predicate(name, view.n)
            assert symmetric
            assert fn(view.n, list(view.rows), empty) == want
            assert fn(view.n, empty, list(view.rows)) == want


def test_no_mono_odd_cycle_predicate():
    fn, _ = compile_predicate("no-mono-odd-cycle", 8)
    g = gen_two_bipartite_k4p(2, free_mask=0x33)
    assert fn(8, list(g.red), list(g.blue))
    bad = complete_red(3)
    assert not fn(3, list(bad.red), list(bad.blue))


def test_unknown_predicate():
    with pytest.raises(BadParams):
        compile_predicate("mono-c6", 5)


def test_spectrum_covers_range_predicate():
    report = search_colourings(
        complete_view(4), "spectrum-covers-range(3,3)", SearchBudget()
    )
    # equivalent to mono-c3 on K4, which is refutable
    assert report.verdict is Verdict.REFUTED_AT_THIS_N
    # empty ranges are vacuously covered
    report = search_colourings(
        complete_view(4), "spectrum-covers-range(4,3)", SearchBudget()
    )
    assert report.verdict is Verdict.CONFIRMED


def test_main_theorem_body_predicate_matches_range():
    # at n = 5 the window [4, ceil(5/2)] is empty, so every colouring passes
    report = search_colourings(complete_view(5), "main-theorem-body", SearchBudget())
    assert report.verdict is Verdict.CONFIRMED
    assert report.stats.searched == 512


def test_search_k5_mono_c3_or_c5():
    report = search_colourings(complete_view(5), "mono-c3-or-c5", SearchBudget())
    assert report.verdict is Verdict.CONFIRMED
    assert report.stats.searched == 512
    no_reduction = search_colourings(
        complete_view(5), "mono-c3-or-c5", SearchBudget(), colour_swap_reduction=False
    )
    assert no_reduction.verdict is Verdict.CONFIRMED
    assert no_reduction.stats.searched == 1024


def test_search_k4_mono_c3_refuted_and_round_trips():
    report = search_colourings(complete_view(4), "mono-c3", SearchBudget())
    assert report.verdict is Verdict.REFUTED_AT_THIS_N
    reloaded = parse(report.witness["graph"])
    fn, _ = compile_predicate("mono-c3", 4)
    assert not fn(4, list(reloaded.red), list(reloaded.blue))
    # the refuting colouring is the first failing index, so every earlier
    # index satisfies the predicate
    assert report.stats.searched == report.witness["colouring_index"] + 1


def test_search_worker_counts_agree():
    for predicate in ("mono-c3", "mono-c3-or-c5"):
        reports = [
            search_colourings(
                complete_view(5),
                predicate,
                SearchBudget(workers=w),
            )
            for w in (1, 4)
        ]
        assert len({r.verdict for r in reports}) == 1
        assert len({r.stats.searched for r in reports}) == 1


def test_search_reproduces_classic_ramsey_facts():
    # every 2-colouring of K6 has a monochromatic triangle, K5 does not
    k6 = complete_view(6)
    assert search_colourings(k6, "mono-c3", SearchBudget()).verdict is Verdict.CONFIRMED
    assert (
        search_colourings(complete_view(5), "mono-c3", SearchBudget()).verdict
        is Verdict.REFUTED_AT_THIS_N
    )
    # the C4 threshold also sits at 6
    assert search_colourings(k6, "mono-c4", SearchBudget()).verdict is Verdict.CONFIRMED
    assert (
        search_colourings(complete_view(5), "mono-c4", SearchBudget()).verdict
        is Verdict.REFUTED_AT_THIS_N
    )


def test_search_budget_exhaustion_is_inconclusive():
    report = search_colourings(
        complete_view(5), "mono-c3-or-c5", SearchBudget(max_items=100)
    )
    assert report.verdict is Verdict.INCONCLUSIVE
    assert report.stats.searched == 100


def test_search_refuses_oversized_bases():
    with pytest.raises(TooLargeForExact):
        search_colourings(complete_view(9), "mono-c3", SearchBudget())  # 36 edges


def test_search_random_mode_reproducible():
    a = search_colourings(
        complete_view(4),
        "mono-c3",
        SearchBudget(mode=SearchMode.RANDOM, max_items=50, seed=11),
    )
    b = search_colourings(
        complete_view(4),
        "mono-c3",
        SearchBudget(mode=SearchMode.RANDOM, max_items=50, seed=11),
    )
    assert a.verdict == b.verdict and a.stats.searched == b.stats.searched
    assert (a.witness or {}).get("colouring_code") == (b.witness or {}).get(
        "colouring_code"
    )


def test_search_k7_window_contains_c4_small_budget():
    # tiny prefix of the K7 space; the full run lives in the acceptance suite
    report = search_colourings(
        complete_view(7), "mono-c4", SearchBudget(max_items=2000)
    )
    assert report.verdict in (Verdict.CONFIRMED, Verdict.INCONCLUSIVE)


# --- minimisation ----------------------------------------------------------

def test_minimize_k4_full_random_coverage():
    # independent exhaustive minimum over all 64 colourings: K4 splits into
    # two spanning paths, so both colours can be forests
    base = complete_view(4)
    edges = list(base.edges())
    exhaustive_best = min(
        max(
            cycle_spectrum(
                UncolouredView.from_edges(4, [e for j, e in enumerate(edges) if code >> j & 1])
            ).circumference,
            cycle_spectrum(
                UncolouredView.from_edges(4, [e for j, e in enumerate(edges) if not code >> j & 1])
            ).circumference,
        )
        for code in range(64)
    )
    assert exhaustive_best == 0
    report = minimize_mono_circumference(
        base,
        SearchBudget(mode=SearchMode.RANDOM, max_items=300, seed=3),
    )
    assert report.witness["best_mono_circumference"] == exhaustive_best
    assert report.verdict is Verdict.INCONCLUSIVE


def test_minimize_k9_local_search_reaches_two_thirds():
    report = minimize_mono_circumference(
        complete_view(9),
        SearchBudget(mode=SearchMode.LOCAL_SEARCH, max_items=10_000, seed=1),
    )
    assert report.witness["best_mono_circumference"] <= 6  # (2/3) n
    reloaded = parse(report.witness["graph"])
    best = max(
        cycle_spectrum(reloaded.red_view()).circumference,
        cycle_spectrum(reloaded.blue_view()).circumference,
    )
    assert best == report.witness["best_mono_circumference"]


def test_minimize_grid_underlying_graph():
    base = gen_g_r_t(2, 2).union_view()
    report = minimize_mono_circumference(
        base, SearchBudget(mode=SearchMode.LOCAL_SEARCH, max_items=4000, seed=2)
    )
    assert report.witness["best_mono_circumference"] <= 4


def test_minimize_reproducible():
    budget = SearchBudget(mode=SearchMode.LOCAL_SEARCH, max_items=500, seed=9)
    a = minimize_mono_circumference(complete_view(6), budget)
    b = minimize_mono_circumference(complete_view(6), budget)
    assert a.witness == b.witness and a.stats.searched == b.stats.searched


def test_minimize_rejects_exhaustive_mode():
    with pytest.raises(BadParams):
        minimize_mono_circumference(complete_view(4), SearchBudget())


# --- counting --------------------------------------------------------------

def test_count_two_bipartite_labelled():
    assert count_two_bipartite(1)[0] == 4
    assert count_two_bipartite(2)[0] == 256
    assert count_two_bipartite(3)[0] == 1 << 18


def test_count_two_bipartite_distinct_p1():
    labelled, distinct = count_two_bipartite(1, distinct=True)
    assert labelled == 4
    # independent recount: all 64 colourings of K4, both views bipartite
    from oracles import is_bipartite_by_colourings

    base = gen_two_bipartite_k4p(1).union_view()
    edges = list(base.edges())
    expected = 0
    for code in range(1 << len(edges)):
        red = [e for j, e in enumerate(edges) if code >> j & 1]
        blue = [e for j, e in enumerate(edges) if not code >> j & 1]
        red_ok = is_bipartite_by_colourings(UncolouredView.from_edges(4, red))
        blue_ok = is_bipartite_by_colourings(UncolouredView.from_edges(4, blue))
        if red_ok and blue_ok:
            expected += 1
    assert distinct == expected == 18


def test_count_two_bipartite_distinct_refused_for_p2():
    with pytest.raises(TooLargeForExact):
        count_two_bipartite(2, distinct=True)
    assert count_two_bipartite(2)[1] is None


# --- k-colour conjecture ---------------------------------------------------

def test_k_colour_extremal_cases():
    assert (
        verify_k_colour_conjecture(gen_k_bipartite(2, 2, seed=0)).verdict
        is Verdict.EXTREMAL_CASE
    )
    assert (
        verify_k_colour_conjecture(gen_k_bipartite(3, 1, seed=42)).verdict
        is Verdict.EXTREMAL_CASE
    )


def test_k_colour_single_colour_k5():
    rows = tuple(((1 << 5) - 1) & ~(1 << v) for v in range(5))
    kg = KColouredGraph(5, 1, (rows,))
    report = verify_k_colour_conjecture(kg)
    assert report.verdict is Verdict.CONFIRMED
    assert report.witness["range"] == [3, 5]


def test_k_colour_hypothesis_unmet():
    kg = KColouredGraph(4, 1, ((0b0010, 0b0001, 0b1000, 0b0100),))  # 2K2
    assert verify_k_colour_conjecture(kg).verdict is Verdict.INCONCLUSIVE


def test_k_colour_k33_is_the_one_colour_extremal_case():
    # K_{3,3} all one colour: balanced complete 2-partite, colour bipartite
    rows = [0] * 6
    for u in range(3):
        for v in range(3, 6):
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    kg = KColouredGraph(6, 1, (tuple(rows),))
    report = verify_k_colour_conjecture(kg)
    assert report.verdict is Verdict.EXTREMAL_CASE
    assert report.witness["p"] == 3


# --- circumference-fraction certificates ------------------------------------

def test_phi_certificates_070():
    certs = phi_certificates("0.70")
    assert len(certs) == 1
    cert = certs[0]
    assert cert.spec.kind == "g_rt" and cert.spec.params["r"] == 2
    assert cert.ratio <= Fraction(1, 2) + Fraction(1, cert.n)
    assert cert.min_degree > Fraction(7, 10) * cert.n


def test_phi_certificates_057():
    certs = phi_certificates("0.57")
    kinds = {c.spec.kind for c in certs}
    assert "gprime" in kinds
    gp = next(c for c in certs if c.spec.kind == "gprime")
    assert gp.spec.params["t"] == 7
    assert gp.ratio <= Fraction(2, 5) + Fraction(1, gp.n)
    assert gp.mono_circumference == 14
    assert gp.min_degree > Fraction(57, 100) * gp.n


def test_phi_certificates_020_includes_one_third():
    certs = phi_certificates("0.20")
    by_r = {c.spec.params.get("r"): c for c in certs if c.spec.kind == "g_rt"}
    assert 3 in by_r
    assert by_r[3].ratio <= Fraction(1, 3) + Fraction(1, by_r[3].n)
    # best family bound shrinks towards c/2 as c drops
    assert min(c.family_bound for c in certs) <= Fraction(1, 9)


def test_phi_certificates_instances_recheck():
    for cert in phi_certificates("0.63"):
        g = cert.spec.build()
        assert cert.ratio == Fraction(cert.mono_circumference, cert.n)
        assert cert.ratio <= cert.family_bound
        from redblue import min_degree as md

        assert md(g) == cert.min_degree


def test_phi_rejects_bad_c():
    with pytest.raises(BadParams):
        phi_certificates("0")
    with pytest.raises(BadParams):
        phi_certificates("1")


# --- report plumbing ---------------------------------------------------------

def test_majority_colour_obeys_erdos_gallai_floor():
    for cg in (
        gen_f_st(6, 3),
        gen_two_bipartite_k4p(2, free_mask=0x0F),
        gen_bipartite_complement(8),
        gen_blowup_c5(2),
        gen_g_r_t(2, 2),
    ):
        views = {
            Colour.RED: cg.red_view(),
            Colour.BLUE: cg.blue_view(),
        }
        majority = max(views.values(), key=lambda v: v.edge_count)
        spec = cycle_spectrum(majority)
        if spec.lengths:
            assert spec.circumference >= erdos_gallai_floor(majority)


def test_report_json_shape():
    report = verify_main(gen_two_bipartite_k4p(1))
    payload = report.to_json_dict()
    assert set(payload) == {"target", "instance", "verdict", "witness", "stats"}
    assert payload["verdict"] == "ExtremalCase"
    assert set(payload["stats"]) == {"searched", "seed", "workers", "elapsed"}
    bare = report.to_json_dict(include_timing=False)
    assert "elapsed" not in bare["stats"]
