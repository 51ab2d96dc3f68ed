"""Classifier hierarchy: injectivity, k-factors, and the seven verdicts."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iasi.errors import (
    IsolatedVertexError,
    NoKFactorError,
    NotAdmissibleError,
    PartialLabelingError,
    UnknownVertexError,
)
from iasi.graphs import Graph, named_graph, path_graph
from iasi.intsets import ap_profile, make_intset
from iasi.labelings import (
    ARITHMETIC_FAMILY,
    ARITHMETIC_MIXED,
    BIARITHMETIC,
    IASI_NON_AP,
    IDENTICAL_BIARITHMETIC,
    ISOARITHMETIC,
    NOT_IASI,
    SEMI_ARITHMETIC,
    VERDICTS,
    Labeling,
    classify,
    edge_k_factor,
    induced_edge_label,
    is_l_uniform,
    restrict,
    verify_iasi,
)


def _lab(g: Graph, **labels) -> Labeling:
    return Labeling.make(g, {v: make_intset(xs) for v, xs in labels.items()})


P2 = named_graph("P2")
P3 = named_graph("P3")
K3 = named_graph("K3")


# --- labeling construction --------------------------------------------------


def test_make_requires_total_labeling():
    with pytest.raises(PartialLabelingError):
        _lab(P2, a=[1, 2, 3])
    with pytest.raises(UnknownVertexError):
        _lab(P2, a=[1, 2, 3], b=[4, 5, 6], z=[7, 8, 9])


def test_edge_cache_is_the_sumset():
    f = _lab(P2, a=[0, 1, 2], b=[3, 4, 5])
    assert list(f.edge_label(("b", "a"))) == [3, 4, 5, 6, 7]
    assert induced_edge_label(f, ("a", "b")) == f.edge_labels[("a", "b")]


# --- injectivity ------------------------------------------------------------


def test_verify_iasi_accepts_distinct_labels():
    rep = verify_iasi(P2, _lab(P2, a=[1, 2, 3], b=[4, 5, 6]))
    assert rep.is_iasi
    assert rep.vertex_collision is None and rep.edge_collision is None


def test_verify_iasi_vertex_collision():
    rep = verify_iasi(P2, _lab(P2, a=[1, 2, 3], b=[1, 2, 3]))
    assert not rep.is_iasi
    assert rep.vertex_collision == ("a", "b")


def test_verify_iasi_edge_collision():
    # distinct vertex labels, equal induced sumsets: {0,1,2}+{1,2,3} and
    # {0,1,2}+{1,3} are both {1,...,5}
    g = named_graph("K1_2")
    rep = verify_iasi(g, _lab(g, c=[0, 1, 2], x=[1, 2, 3], y=[1, 3]))
    assert not rep.is_iasi
    assert rep.vertex_collision is None
    assert rep.edge_collision == (("c", "x"), ("c", "y"))


def test_vertex_label_may_equal_edge_label():
    # f(c) equals the induced label of a~b; only within-family collisions count
    f = _lab(P3, a=[0, 1, 2], b=[1, 2, 3], c=[1, 2, 3, 4, 5])
    assert list(f.edge_labels[("a", "b")]) == [1, 2, 3, 4, 5]
    assert verify_iasi(P3, f).is_iasi


def test_verify_iasi_rejects_isolated_vertices():
    g = Graph.build(["a", "b", "z"], [("a", "b")])
    with pytest.raises(IsolatedVertexError):
        verify_iasi(g, _lab(g, a=[1, 2, 3], b=[4, 5, 6], z=[7, 8, 9]))


# --- k-factors --------------------------------------------------------------


def test_k_factor_division():
    f = _lab(P2, a=[0, 1, 2, 3], b=[0, 2, 4])
    kf = edge_k_factor(f, ("a", "b"))
    assert (kf.low_vertex, kf.high_vertex, kf.k) == ("a", "b", 2)
    assert kf.within_bound  # 2 <= |{0,1,2,3}|


def test_k_factor_equal_diffs_orients_by_id():
    f = _lab(P2, b=[0, 2, 4], a=[1, 3, 5])
    kf = edge_k_factor(f, ("b", "a"))
    assert (kf.low_vertex, kf.high_vertex, kf.k) == ("a", "b", 1)


def test_k_factor_bound_violation_is_reported():
    f = _lab(P2, a=[0, 1, 2], b=[0, 5, 10])
    kf = edge_k_factor(f, ("a", "b"))
    assert kf.k == 5
    assert not kf.within_bound


def test_k_factor_errors():
    with pytest.raises(NoKFactorError):
        edge_k_factor(_lab(P2, a=[0, 2, 4], b=[0, 3, 6]), ("a", "b"))
    with pytest.raises(NotAdmissibleError):
        edge_k_factor(_lab(P2, a=[0, 1, 3], b=[0, 2, 4]), ("a", "b"))
    with pytest.raises(NotAdmissibleError):
        edge_k_factor(_lab(P2, a=[0, 1], b=[0, 2, 4]), ("a", "b"))


# --- the seven verdicts -----------------------------------------------------


def test_verdict_isoarithmetic():
    rep = classify(P2, _lab(P2, a=[1, 2, 3], b=[4, 5, 6]))
    assert rep.verdict == ISOARITHMETIC
    assert all(er.k_factor.k == 1 for er in rep.per_edge)
    assert rep.uniform_l == 3
    assert rep.failures == ()


def test_verdict_identical_biarithmetic():
    rep = classify(P3, _lab(P3, a=[0, 1, 2, 3], b=[0, 2, 4], c=[1, 5, 9]))
    assert rep.verdict == IDENTICAL_BIARITHMETIC
    assert [er.k_factor.k for er in rep.per_edge] == [2, 2]
    assert rep.uniform_l is None  # sizes 4, 3, 3


def test_verdict_biarithmetic_triangle():
    rep = classify(K3, _lab(K3, a=[0, 1, 2, 3], b=[0, 2, 4], c=[1, 5, 9]))
    assert rep.verdict == BIARITHMETIC
    assert sorted(er.k_factor.k for er in rep.per_edge) == [2, 2, 4]
    assert all(er.edge_ap for er in rep.per_edge)


def test_verdict_arithmetic_mixed():
    rep = classify(P3, _lab(P3, a=[0, 1, 2], b=[10, 11, 12], c=[20, 22, 24]))
    assert rep.verdict == ARITHMETIC_MIXED
    assert sorted(er.k_factor.k for er in rep.per_edge) == [1, 2]


def test_verdict_semi_arithmetic():
    # both vertex labels AP, but diffs 2 and 3 make the edge sumset gap
    rep = classify(P2, _lab(P2, a=[0, 2, 4], b=[0, 3, 6]))
    assert rep.verdict == SEMI_ARITHMETIC
    assert rep.per_edge[0].k_factor is None
    assert not rep.per_edge[0].edge_ap
    assert rep.failures != ()


def test_verdict_semi_arithmetic_by_overflow():
    # diffs divide (k=5) but k exceeds the low cardinality, so no AP sumset
    rep = classify(P2, _lab(P2, a=[0, 1, 2], b=[0, 5, 10]))
    assert rep.verdict == SEMI_ARITHMETIC
    assert rep.per_edge[0].k_factor.k == 5
    assert not rep.per_edge[0].k_factor.within_bound


def test_verdict_iasi_non_ap():
    rep = classify(P2, _lab(P2, a=[0, 1, 3], b=[5, 6, 7]))
    assert rep.verdict == IASI_NON_AP


def test_verdict_not_iasi():
    rep = classify(P2, _lab(P2, a=[1, 2, 3], b=[1, 2, 3]))
    assert rep.verdict == NOT_IASI
    assert rep.failures != ()


def test_verdict_vocabulary():
    assert set(ARITHMETIC_FAMILY) < set(VERDICTS)
    assert len(VERDICTS) == 7


def test_classify_rejects_isolated_vertices():
    g = Graph.build(["a", "b", "z"], [("a", "b")])
    with pytest.raises(IsolatedVertexError):
        classify(g, _lab(g, a=[1, 2, 3], b=[4, 5, 6], z=[7, 8, 9]))


# --- uniformity and cardinality identities ----------------------------------


def test_is_l_uniform():
    assert is_l_uniform(P2, _lab(P2, a=[1, 2, 3], b=[4, 5, 6])) == 3
    assert is_l_uniform(P2, _lab(P2, a=[1, 2, 3], b=[4, 5, 6, 7])) is None


@settings(deadline=None, max_examples=120)
@given(
    st.integers(0, 8),
    st.integers(0, 8),
    st.integers(1, 5),
    st.integers(3, 6),
    st.integers(3, 6),
)
def test_same_index_edge_is_ap_with_same_index(a, b, d, m, n):
    # both endpoints share deterministic index d: so does the edge label
    f = _lab(
        P2,
        a=[a + d * i for i in range(m)],
        b=[a + b + 1 + d * i for i in range(n)],
    )
    e = f.edge_labels[("a", "b")]
    p = ap_profile(e)
    assert p is not None and p.diff == d
    assert len(e) == m + n - 1


@settings(deadline=None, max_examples=120)
@given(st.integers(1, 3), st.integers(2, 3), st.integers(3, 5), st.integers(3, 5))
def test_biarithmetic_edge_cardinality(d, k, m, n):
    f = _lab(
        P2,
        a=[d * i for i in range(m)],
        b=[1 + d * k * i for i in range(n)],
    )
    if k <= m:
        assert len(f.edge_labels[("a", "b")]) == m + (n - 1) * k


# --- restriction ------------------------------------------------------------


def test_restriction_preserves_isoarithmetic():
    g = named_graph("C4")
    f = _lab(g, a=[0, 1, 2], b=[4, 5, 6], c=[9, 10, 11], d=[15, 16, 17])
    assert classify(g, f).verdict == ISOARITHMETIC
    sub = Graph.from_edges([("a", "b"), ("b", "c")])
    fsub = restrict(f, sub)
    assert classify(sub, fsub).verdict == ISOARITHMETIC
    assert fsub.label("a") == f.label("a")
