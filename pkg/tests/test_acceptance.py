"""Acceptance gate: the nine load-bearing guarantees of the library.

Each criterion is one test that ends by printing a single pass line (run
with ``pytest -s`` or ``-rP`` to see them). Where a criterion demands an
independent check, the expected value is re-derived here by direct
enumeration rather than through the code under test.
"""

from __future__ import annotations

import dataclasses

from iasi import (
    ARITHMETIC_FAMILY,
    BIARITHMETIC,
    EmptyLineGraphError,
    IDENTICAL_BIARITHMETIC,
    ISOARITHMETIC,
    IsolatedVertexError,
    Labeling,
    NotApplicableError,
    ReductionNotApplicableError,
    SearchBounds,
    SEMI_ARITHMETIC,
    SEMI_CORPUS,
    TransferCollisionError,
    ap_profile,
    canon_edge,
    classify,
    collect_witnesses,
    complete_graph,
    construct_bi_bipartite,
    construct_bi_path,
    construct_iso,
    construct_semi,
    count_labelings,
    edge_condition_agreement,
    is_ap,
    make_intset,
    named_graph,
    search_labeling,
    semi_corpus_labeling,
    sumset,
    transfer_contract,
    transfer_line,
    transfer_reduce,
    transfer_subdivide,
    transfer_total,
)
from iasi import jsonio

NOT_BI = (BIARITHMETIC, IDENTICAL_BIARITHMETIC)
SKIP_ERRORS = (
    NotApplicableError,
    ReductionNotApplicableError,
    IsolatedVertexError,
    EmptyLineGraphError,
)


def _ap_run(values):
    # independent AP check: consecutive gaps of a sorted de-duplicated list
    if len(values) == 1:
        return True, None
    gaps = {b - a for a, b in zip(values, values[1:])}
    if len(gaps) != 1:
        return False, None
    return True, gaps.pop()


def _passed(n, detail):
    print(f"criterion {n}: PASS - {detail}")


def test_criterion_1_same_difference_sumsets_are_aps():
    checked = 0
    for a in range(6):
        for b in range(6):
            for d in range(1, 5):
                for m in range(3, 6):
                    for n in range(3, 6):
                        low = make_intset([a + i * d for i in range(m)])
                        high = make_intset([b + j * d for j in range(n)])
                        s = sumset(low, high)
                        direct = sorted({x + y for x in low for y in high})
                        assert list(s.elements) == direct
                        ok, gap = _ap_run(direct)
                        assert ok and gap == d, (a, b, d, m, n)
                        assert len(s) == m + n - 1, (a, b, d, m, n)
                        prof = ap_profile(s)
                        assert prof is not None
                        assert (prof.diff, prof.length) == (d, m + n - 1)
                        checked += 1
    assert checked == 6 * 6 * 4 * 3 * 3
    _passed(1, f"{checked} same-difference sumsets, all APs of length m+n-1")


def test_criterion_2_ap_boundary_is_ratio_at_most_low_cardinality():
    checked = 0
    for a in range(6):
        for b in range(6):
            for d in range(1, 5):
                for k in range(1, 7):
                    for m in range(3, 6):
                        for n in range(3, 6):
                            low = make_intset([a + i * d for i in range(m)])
                            high = make_intset([b + j * k * d for j in range(n)])
                            s = sumset(low, high)
                            direct = sorted({x + y for x in low for y in high})
                            brute_ap, _ = _ap_run(direct)
                            assert is_ap(s) == brute_ap, (a, b, d, k, m, n)
                            assert brute_ap == (k <= m), (a, b, d, k, m, n)
                            checked += 1
    assert checked == 6 * 6 * 4 * 6 * 3 * 3
    _passed(2, f"{checked} ratio cases, AP exactly when k <= |low set|")


def test_criterion_3_edge_ap_equals_ratio_test_on_all_small_graphs():
    # every graph on <= 4 vertices with no isolated vertex, up to isomorphism
    universe = ("P2", "P3", "K3", "2P2", "P4", "K1_3", "C4", "paw", "diamond", "K4")
    survivors = 0
    scanned = 0
    for name in universe:
        rep = edge_condition_agreement(named_graph(name))
        assert rep.agree, f"{name}: routes disagree"
        assert rep.mismatch is None, name
        survivors += rep.n_ratio_scanned
        scanned += rep.space_size
    assert survivors > 0
    _passed(
        3,
        f"{len(universe)} graphs, {scanned} assignments scanned twice, "
        f"{survivors} ratio-passing labelings each confirmed all-AP and "
        "conversely",
    )


def _spread_iso(g, d):
    labels = {
        v: make_intset([4**i + j * d for j in range(3)])
        for i, v in enumerate(g.sorted_vertices())
    }
    f = Labeling.make(g, labels)
    assert classify(g, f).verdict == ISOARITHMETIC
    return f


def _first_reducible(g):
    for v in g.sorted_vertices():
        nb = g.neighbors(v)
        if len(nb) == 2 and not g.has_edge(nb[0], nb[1]):
            return v
    return None


def test_criterion_4_transfers_preserve_isoarithmetic():
    corpus = ("P2", "P3", "P4", "P5", "P6", "C3", "C4", "C5", "C6", "K1_3", "K4")
    labelings = []
    for name in corpus:
        g = named_graph(name)
        for d in (1, 2, 3):
            labelings.append((name, g, construct_iso(g, d)))
            labelings.append((name, g, _spread_iso(g, d)))
    assert len(labelings) >= 50

    successes = collisions = skips = 0
    wrong = []
    for name, g, f in labelings:
        assert classify(g, f).verdict == ISOARITHMETIC, name
        ops = [
            ("line", lambda: transfer_line(g, f)),
            ("total", lambda: transfer_total(g, f)),
            ("subdivide", lambda: transfer_subdivide(g, f)),
            ("contract", lambda: transfer_contract(g, f, g.sorted_edges()[0])),
        ]
        v = _first_reducible(g)
        if v is not None:
            ops.append(("reduce", lambda v=v: transfer_reduce(g, f, v)))
        for op, run in ops:
            try:
                g2, f2 = run()
            except TransferCollisionError:
                collisions += 1
                continue
            except SKIP_ERRORS:
                skips += 1
                continue
            verdict = classify(g2, f2).verdict
            if verdict != ISOARITHMETIC:
                wrong.append(f"{op} of {name}: {verdict}")
            else:
                successes += 1
    assert not wrong, wrong
    assert successes >= 50
    _passed(
        4,
        f"{len(labelings)} labelings, {successes} successful transfers all "
        f"isoarithmetic, {collisions} collisions, {skips} not applicable",
    )


def test_criterion_5_line_graph_laws_for_biarithmetic_witnesses():
    for name in ("K1_3", "C4"):
        g = named_graph(name)
        f = construct_bi_bipartite(g, 1, 2)
        lg, lf = transfer_line(g, f)
        assert classify(lg, lf).verdict == ISOARITHMETIC, name
    for name in ("P3", "P4"):
        g = named_graph(name)
        f = construct_bi_path(g, 1, 2)
        lg, lf = transfer_line(g, f)
        assert classify(lg, lf).verdict == IDENTICAL_BIARITHMETIC, name
    # the triangle (the line graph of the 3-star) admits no identical witness
    out = search_labeling(
        complete_graph(3),
        SearchBounds(
            a_max=6, d_max=8, n_min=3, n_max=4, target_class=IDENTICAL_BIARITHMETIC
        ),
    )
    assert out.found is False
    assert out.exhausted is True
    assert out.space_size == (7 * 8 * 2) ** 3
    _passed(
        5,
        "bipartite witnesses line to isoarithmetic, path witnesses line to "
        f"identical, triangle exhausted over {out.space_size} profiles",
    )


def test_criterion_6_negative_results():
    # the canonical witness: lex-least identical-biarithmetic labeling of the
    # 4-cycle within default bounds (wider witness pools contain labelings
    # whose contraction IS biarithmetic, see test_theorems)
    g = named_graph("C4")
    out = search_labeling(g, SearchBounds(target_class=IDENTICAL_BIARITHMETIC))
    assert out.found is True
    w = out.witness

    contracted = reduced = 0
    for e in g.sorted_edges():
        try:
            g2, f2 = transfer_contract(g, w, e)
        except TransferCollisionError:
            continue
        assert classify(g2, f2).verdict not in NOT_BI
        contracted += 1
    for v in g.sorted_vertices():
        try:
            g2, f2 = transfer_reduce(g, w, v)
        except TransferCollisionError:
            continue
        assert classify(g2, f2).verdict not in NOT_BI
        reduced += 1
    assert contracted >= 1 and reduced >= 1

    p2 = named_graph("P2")
    f = Labeling.make(p2, {"a": make_intset([0, 1, 2]), "b": make_intset([0, 2, 4])})
    assert classify(p2, f).verdict == IDENTICAL_BIARITHMETIC
    sg, sf = transfer_subdivide(p2, f)
    assert classify(sg, sf).verdict not in NOT_BI

    p3 = named_graph("P3")
    over = construct_semi(
        p3, diffs={v: 4**i for i, v in enumerate(p3.sorted_vertices())}
    )
    assert classify(p3, over).verdict == SEMI_ARITHMETIC
    lg, lf = transfer_line(p3, over)
    assert any(not is_ap(lf.vertex_labels[v]) for v in lg.vertices)
    _passed(
        6,
        f"{contracted} contractions and {reduced} reductions of cycle "
        "witnesses left the biarithmetic classes; subdivision and ratio "
        "overflow behave as required",
    )


def test_criterion_7_total_graph_of_identical_witness():
    p2 = named_graph("P2")
    f = Labeling.make(p2, {"a": make_intset([0, 1, 2]), "b": make_intset([0, 2, 4])})
    assert classify(p2, f).verdict == IDENTICAL_BIARITHMETIC
    tg, tf = transfer_total(p2, f)
    verdict = classify(tg, tf).verdict
    assert verdict in ARITHMETIC_FAMILY
    assert verdict not in NOT_BI
    _passed(7, f"total graph stays in the family as {verdict}, not biarithmetic")


def test_criterion_8_semi_arithmetic_leaves_the_family_under_all_transfers():
    forbidden = ARITHMETIC_FAMILY + (SEMI_ARITHMETIC,)
    assert len(SEMI_CORPUS) == 10
    successes = collisions = skips = 0
    wrong = []
    for name in SEMI_CORPUS:
        g, f = semi_corpus_labeling(name)
        assert classify(g, f).verdict == SEMI_ARITHMETIC, name
        bad_edge = next(
            e for e in g.sorted_edges() if not is_ap(f.edge_labels[canon_edge(*e)])
        )
        ops = [
            ("line", lambda: transfer_line(g, f)),
            ("total", lambda: transfer_total(g, f)),
            ("subdivide", lambda: transfer_subdivide(g, f)),
            ("contract", lambda: transfer_contract(g, f, bad_edge)),
        ]
        v = _first_reducible(g)
        if v is not None:
            ops.append(("reduce", lambda v=v: transfer_reduce(g, f, v)))
        else:
            skips += 1  # the corpus is reduction-free by design
        for op, run in ops:
            try:
                g2, f2 = run()
            except TransferCollisionError:
                collisions += 1  # no labeling at all, so nothing in the family
                continue
            except SKIP_ERRORS:
                skips += 1
                continue
            verdict = classify(g2, f2).verdict
            if verdict in forbidden:
                wrong.append(f"{op} of {name}: {verdict}")
            else:
                successes += 1
    assert not wrong, wrong
    assert successes >= 20
    _passed(
        8,
        f"{successes} transfers of 10 semi-arithmetic labelings all left "
        f"the family, {collisions} collisions, {skips} not applicable",
    )


def test_criterion_9_searches_and_constructors_are_deterministic():
    def search_doc():
        outs = []
        for name, kwargs in (
            ("K3", dict(a_max=6, d_max=8, n_max=4, target_class=IDENTICAL_BIARITHMETIC)),
            ("K3", dict(a_max=6, d_max=8, n_max=4, target_class=BIARITHMETIC)),
            ("C4", dict(a_max=3, target_class=IDENTICAL_BIARITHMETIC)),
            ("P3", dict(a_max=3, d_max=3, n_max=3)),
        ):
            out = search_labeling(named_graph(name), SearchBounds(**kwargs))
            outs.append(jsonio.search_outcome_to_obj(out))
        b = SearchBounds(a_max=2, d_max=2, n_max=3)
        ws, truncated = collect_witnesses(named_graph("P2"), b)
        outs.append([jsonio.labeling_to_obj(w) for w in ws] + [truncated])
        outs.append(dataclasses.asdict(count_labelings(named_graph("P3"), b)))
        return jsonio.dumps(outs)

    def construct_doc():
        p4, c4, k13, k3 = (named_graph(n) for n in ("P4", "C4", "K1_3", "K3"))
        return jsonio.dumps(
            [
                jsonio.labeling_to_obj(construct_iso(c4, 2)),
                jsonio.labeling_to_obj(construct_bi_bipartite(k13, 1, 3)),
                jsonio.labeling_to_obj(construct_bi_path(p4, 1, 2)),
                jsonio.labeling_to_obj(construct_semi(k3)),
            ]
        )

    first = search_doc(), construct_doc()
    second = search_doc(), construct_doc()
    assert first == second
    searches, constructions = first
    _passed(
        9,
        f"{len(searches.splitlines())} + {len(constructions.splitlines())} "
        "lines of search and constructor JSON byte-identical across runs",
    )
