"""Exhaustive search oracle: determinism, exhaustion, backend equivalence."""

from __future__ import annotations

from itertools import product

import pytest

from iasi import _pykernel, backend
from iasi.errors import InvalidBoundsError, IsolatedVertexError, SearchTooLargeError
from iasi.graphs import Graph, complete_graph, named_graph
from iasi.intsets import ap_profile, is_ap, make_intset, sumset
from iasi.labelings import (
    ARITHMETIC_MIXED,
    BIARITHMETIC,
    IDENTICAL_BIARITHMETIC,
    ISOARITHMETIC,
    SEMI_ARITHMETIC,
    classify,
)
from iasi.search import (
    SEARCHABLE_CLASSES,
    SearchBounds,
    collect_witnesses,
    count_labelings,
    edge_condition_agreement,
    parse_bounds_text,
    search_labeling,
)

SMALL = dict(a_max=3, d_max=4, n_min=3, n_max=3)
GRAPHS = ("P2", "P3", "K3", "C4", "K1_3", "paw")


def _bounds(klass, **kw):
    merged = {**SMALL, **kw}
    return SearchBounds(target_class=klass, **merged)


# --- bounds type ------------------------------------------------------------


def test_bounds_validation():
    with pytest.raises(InvalidBoundsError):
        SearchBounds(a_max=-1)
    with pytest.raises(InvalidBoundsError):
        SearchBounds(d_max=0)
    with pytest.raises(InvalidBoundsError):
        SearchBounds(n_min=2)
    with pytest.raises(InvalidBoundsError):
        SearchBounds(n_min=5, n_max=4)
    with pytest.raises(InvalidBoundsError):
        SearchBounds(target_class="not-iasi")
    with pytest.raises(InvalidBoundsError):
        SearchBounds(target_class=ISOARITHMETIC, identical_k=True)


def test_effective_class():
    b = SearchBounds(target_class=BIARITHMETIC, identical_k=True)
    assert b.effective_class == IDENTICAL_BIARITHMETIC
    assert SearchBounds().effective_class == ISOARITHMETIC


def test_parse_bounds_text():
    assert parse_bounds_text("a=6,d=6,nmin=3,nmax=5") == {
        "a_max": 6,
        "d_max": 6,
        "n_min": 3,
        "n_max": 5,
    }
    assert parse_bounds_text("d=8") == {"d_max": 8}
    with pytest.raises(InvalidBoundsError):
        parse_bounds_text("q=3")
    with pytest.raises(InvalidBoundsError):
        parse_bounds_text("a=x")


# --- pinned oracle runs ------------------------------------------------------


def test_triangle_identical_biarithmetic_is_impossible():
    out = search_labeling(
        named_graph("K3"),
        SearchBounds(a_max=6, d_max=8, n_min=3, n_max=4, target_class=IDENTICAL_BIARITHMETIC),
    )
    assert not out.found
    assert out.exhausted
    assert out.witness is None
    assert out.space_size == (7 * 8 * 2) ** 3


def test_triangle_biarithmetic_exists():
    out = search_labeling(
        named_graph("K3"),
        SearchBounds(a_max=6, d_max=8, n_min=3, n_max=4, target_class=BIARITHMETIC),
    )
    assert out.found
    assert out.witness_verdict == BIARITHMETIC
    assert classify(named_graph("K3"), out.witness).verdict == BIARITHMETIC


def test_star_identical_biarithmetic_exists():
    out = search_labeling(
        named_graph("K1_3"),
        SearchBounds(a_max=6, d_max=4, n_min=3, n_max=3, target_class=IDENTICAL_BIARITHMETIC),
    )
    assert out.found
    assert out.witness_verdict == IDENTICAL_BIARITHMETIC


def test_first_witness_is_lexicographically_least():
    out = search_labeling(named_graph("P2"), _bounds(ISOARITHMETIC, a_max=2, d_max=2))
    assert out.found
    assert list(out.witness.label("a")) == [0, 1, 2]
    assert list(out.witness.label("b")) == [1, 2, 3]


def test_empty_graph_is_vacuously_exhausted():
    out = search_labeling(Graph(), SearchBounds())
    assert (out.found, out.exhausted, out.space_size) == (False, True, 1)
    assert out.witness is None


# --- oracle/classifier agreement -------------------------------------------


@pytest.mark.parametrize("name", GRAPHS)
@pytest.mark.parametrize("klass", SEARCHABLE_CLASSES)
def test_witness_reclassifies_to_requested_class(name, klass):
    g = named_graph(name)
    out = search_labeling(g, _bounds(klass, a_max=4))
    assert out.exhausted or out.found
    if out.found:
        assert classify(g, out.witness).verdict == klass
        assert out.witness_verdict == klass


# --- determinism and monotonicity ------------------------------------------


def test_search_is_deterministic():
    g = named_graph("C4")
    b = _bounds(IDENTICAL_BIARITHMETIC)
    first = search_labeling(g, b)
    second = search_labeling(g, b)
    assert first == second


@pytest.mark.parametrize("klass", (ISOARITHMETIC, IDENTICAL_BIARITHMETIC, SEMI_ARITHMETIC))
@pytest.mark.parametrize("name", ("P3", "K3", "C4"))
def test_enlarging_bounds_never_loses_a_witness(name, klass):
    g = named_graph(name)
    small = search_labeling(g, _bounds(klass, a_max=2, d_max=3))
    for grown in (
        _bounds(klass, a_max=4, d_max=3),
        _bounds(klass, a_max=2, d_max=5),
        _bounds(klass, a_max=2, d_max=3, n_max=4),
    ):
        bigger = search_labeling(g, grown)
        if small.found:
            assert bigger.found
        assert bigger.space_size >= small.space_size


# --- counts and collection --------------------------------------------------


def _brute_count_iso_p2(a_max, d_max, n):
    # independent enumeration: both labels APs with equal differences,
    # distinct, and the sumset an AP (single edge, injectivity is trivial)
    profiles = [
        make_intset([a + d * i for i in range(n)])
        for a, d in product(range(a_max + 1), range(1, d_max + 1))
    ]
    hits = 0
    for x, y in product(profiles, repeat=2):
        if x == y:
            continue
        px, py = ap_profile(x), ap_profile(y)
        if px.diff != py.diff:
            continue
        if is_ap(sumset(x, y)):
            hits += 1
    return hits


def test_count_matches_direct_enumeration():
    g = named_graph("P2")
    count = count_labelings(g, _bounds(ISOARITHMETIC))
    assert count.n_matched == _brute_count_iso_p2(3, 4, 3)
    assert count.space_size == (4 * 4) ** 2


def test_collect_witnesses_prefix_and_truncation():
    g = named_graph("P2")
    b = _bounds(ISOARITHMETIC)
    all_w, truncated_all = collect_witnesses(g, b)
    assert not truncated_all
    assert len(all_w) == count_labelings(g, b).n_matched
    some, truncated = collect_witnesses(g, b, limit=3)
    assert truncated
    assert some == all_w[:3]
    first = search_labeling(g, b)
    assert some[0] == first.witness
    for w in all_w[:5]:
        assert classify(g, w).verdict == ISOARITHMETIC


# --- guards -----------------------------------------------------------------


def test_vertex_cap():
    with pytest.raises(SearchTooLargeError):
        search_labeling(complete_graph(7), SearchBounds())


def test_profile_cap():
    with pytest.raises(SearchTooLargeError):
        search_labeling(named_graph("P2"), SearchBounds(a_max=100, d_max=100))


def test_isolated_vertices_rejected():
    g = Graph.build(["a", "b", "z"], [("a", "b")])
    with pytest.raises(IsolatedVertexError):
        search_labeling(g, SearchBounds())


# --- backend equivalence ----------------------------------------------------


requires_compiled = pytest.mark.skipif(
    backend.BACKEND != "compiled", reason="compiled kernel not built"
)


@requires_compiled
@pytest.mark.parametrize("name", GRAPHS)
@pytest.mark.parametrize("klass", SEARCHABLE_CLASSES)
def test_backends_agree(name, klass, monkeypatch):
    g = named_graph(name)
    b = _bounds(klass)
    compiled_out = search_labeling(g, b)
    compiled_count = count_labelings(g, b)
    monkeypatch.setattr(backend, "enumerate_labelings", _pykernel.enumerate_labelings)
    assert search_labeling(g, b) == compiled_out
    assert count_labelings(g, b) == compiled_count


@requires_compiled
def test_backends_agree_on_collection(monkeypatch):
    g = named_graph("P3")
    b = _bounds(IDENTICAL_BIARITHMETIC, a_max=4)
    compiled = collect_witnesses(g, b, limit=10)
    monkeypatch.setattr(backend, "enumerate_labelings", _pykernel.enumerate_labelings)
    assert collect_witnesses(g, b, limit=10) == compiled


def test_dual_route_edge_condition_agreement_small():
    # implementation route (ratio arithmetic) vs independent route (direct
    # sumset expansion) over every admissible pair, on two shapes
    for name in ("P3", "C4"):
        rep = edge_condition_agreement(named_graph(name), a_max=3, d_max=4, n_min=3, n_max=3)
        assert rep.agree, rep.mismatch
        assert rep.n_ratio_scanned > 0 and rep.n_ap_scanned > 0
