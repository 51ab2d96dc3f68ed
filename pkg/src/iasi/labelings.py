"""Vertex set-labelings, induced edge labels, injectivity checks, and the
classification hierarchy.

A labeling maps every vertex of a host graph to an :class:`~iasi.intsets.IntSet`;
each edge is induced the sumset of its endpoint labels. Classification sorts a
labeled graph into one of seven verdicts:

* ``not-iasi``: vertex labels or induced edge labels are not pairwise distinct
* ``iasi-non-ap``: injective, but some vertex label is not an admissible
  AP-set (an AP of at least three elements)
* ``semi-arithmetic``: all vertex labels admissible AP-sets, at least one
  induced edge label is not an AP-set
* the arithmetic family, refined by the per-edge index ratios k:
  ``isoarithmetic`` (every k = 1), ``identical-biarithmetic`` (every k equal
  and > 1), ``biarithmetic`` (every k > 1, not all equal), and
  ``arithmetic-mixed`` (some k = 1, some k > 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import (
    IsolatedVertexError,
    NoKFactorError,
    NotAdmissibleError,
    PartialLabelingError,
    UnknownVertexError,
)
from .graphs import Edge, Graph, canon_edge, edge_name
from .intsets import IntSet, admissible_profile, ap_profile, sumset

NOT_IASI = "not-iasi"
IASI_NON_AP = "iasi-non-ap"
SEMI_ARITHMETIC = "semi-arithmetic"
ARITHMETIC_MIXED = "arithmetic-mixed"
ISOARITHMETIC = "isoarithmetic"
BIARITHMETIC = "biarithmetic"
IDENTICAL_BIARITHMETIC = "identical-biarithmetic"

#: Every classification verdict, in refinement order.
VERDICTS = (
    NOT_IASI,
    IASI_NON_AP,
    SEMI_ARITHMETIC,
    ARITHMETIC_MIXED,
    ISOARITHMETIC,
    BIARITHMETIC,
    IDENTICAL_BIARITHMETIC,
)

#: Verdicts in which every element label is an AP-set.
ARITHMETIC_FAMILY = (
    ISOARITHMETIC,
    BIARITHMETIC,
    IDENTICAL_BIARITHMETIC,
    ARITHMETIC_MIXED,
)


@dataclass(frozen=True)
class Labeling:
    """Total vertex labeling of a host graph plus its induced edge labels.

    The edge cache is computed eagerly on construction, so it can never drift
    from the vertex labels. Use :meth:`Labeling.make` to construct.
    """

    graph: Graph
    vertex_labels: Mapping[str, IntSet]
    edge_labels: Mapping[Edge, IntSet]

    @staticmethod
    def make(graph: Graph, vertex_labels: Mapping[str, IntSet]) -> "Labeling":
        for v in vertex_labels:
            if v not in graph.vertices:
                raise UnknownVertexError(f"label for unknown vertex {v!r}")
        missing = sorted(graph.vertices - set(vertex_labels))
        if missing:
            raise PartialLabelingError(f"unlabeled vertices: {', '.join(missing)}")
        edge_labels = {
            e: sumset(vertex_labels[e[0]], vertex_labels[e[1]])
            for e in graph.edges
        }
        return Labeling(graph, dict(vertex_labels), edge_labels)

    def label(self, v: str) -> IntSet:
        if v not in self.vertex_labels:
            raise UnknownVertexError(f"vertex {v!r} not labeled")
        return self.vertex_labels[v]

    def edge_label(self, e: Sequence[str]) -> IntSet:
        return self.edge_labels[self.graph.require_edge(*e)]


def induced_edge_label(f: Labeling, e: Sequence[str]) -> IntSet:
    """Sumset of the endpoint labels of ``e``."""
    return f.edge_label(e)


@dataclass(frozen=True)
class InjectivityReport:
    is_iasi: bool
    vertex_collision: Optional[tuple[str, str]]
    edge_collision: Optional[tuple[Edge, Edge]]


def verify_iasi(g: Graph, f: Labeling) -> InjectivityReport:
    """Check the two injectivity requirements independently.

    Vertex labels must be pairwise distinct as sets, and induced edge labels
    must be pairwise distinct as sets. A vertex label equal to an edge label
    is fine; only within-family collisions matter. Reports the first collision
    of each kind, in sorted order.
    """
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(f"isolated vertices: {', '.join(isolated)}")
    vertex_collision = None
    seen: dict[tuple[int, ...], str] = {}
    for v in g.sorted_vertices():
        key = f.label(v).elements
        if key in seen:
            vertex_collision = (seen[key], v)
            break
        seen[key] = v
    edge_collision = None
    seen_e: dict[tuple[int, ...], Edge] = {}
    for e in g.sorted_edges():
        key = f.edge_labels[e].elements
        if key in seen_e:
            edge_collision = (seen_e[key], e)
            break
        seen_e[key] = e
    return InjectivityReport(
        is_iasi=vertex_collision is None and edge_collision is None,
        vertex_collision=vertex_collision,
        edge_collision=edge_collision,
    )


@dataclass(frozen=True)
class KFactor:
    """Integer ratio between the common differences of two adjacent labels.

    ``diff(high_vertex) == k * diff(low_vertex)``. With equal differences,
    k is 1 and low/high fall back to vertex-id order. ``within_bound`` records
    the admissibility condition k <= |label(low_vertex)|.
    """

    low_vertex: str
    high_vertex: str
    k: int
    within_bound: bool


def edge_k_factor(f: Labeling, e: Sequence[str]) -> KFactor:
    """K-factor of an edge whose endpoint labels are admissible AP-sets.

    Raises :class:`NoKFactorError` when neither common difference divides the
    other, and :class:`NotAdmissibleError` when an endpoint label is not an
    AP-set of at least three elements.
    """
    u, v = f.graph.require_edge(*e)
    pu = admissible_profile(f.label(u))
    pv = admissible_profile(f.label(v))
    if pu is None:
        raise NotAdmissibleError(f"label of {u!r} is not an admissible AP-set")
    if pv is None:
        raise NotAdmissibleError(f"label of {v!r} is not an admissible AP-set")
    if pu.diff == pv.diff:
        return KFactor(low_vertex=u, high_vertex=v, k=1, within_bound=True)
    if pv.diff % pu.diff == 0:
        low, high, k, low_len = u, v, pv.diff // pu.diff, pu.length
    elif pu.diff % pv.diff == 0:
        low, high, k, low_len = v, u, pu.diff // pv.diff, pv.length
    else:
        raise NoKFactorError(
            f"differences {pu.diff} and {pv.diff} on edge {edge_name((u, v))} "
            "have no integer ratio"
        )
    return KFactor(low_vertex=low, high_vertex=high, k=k, within_bound=k <= low_len)


@dataclass(frozen=True)
class EdgeReport:
    """Per-edge diagnostics: the k-factor (when one exists), whether the
    induced label is an AP-set, and its common difference if so."""

    edge: Edge
    k_factor: Optional[KFactor]
    edge_ap: bool
    edge_diff: Optional[int]


@dataclass(frozen=True)
class ClassReport:
    verdict: str
    per_edge: tuple[EdgeReport, ...]
    uniform_l: Optional[int]
    failures: tuple[str, ...]


def is_l_uniform(g: Graph, f: Labeling) -> Optional[int]:
    """The shared set-indexing number when all vertices have one, else None."""
    sizes = {len(f.label(v)) for v in g.vertices}
    if len(sizes) == 1:
        return sizes.pop()
    return None


def classify(g: Graph, f: Labeling) -> ClassReport:
    """Full classification of a labeled graph.

    Verdict order: injectivity failures first (``not-iasi``), then
    inadmissible vertex labels (``iasi-non-ap``), then a non-AP induced edge
    label (``semi-arithmetic``); otherwise the labeling is arithmetic and is
    refined by its per-edge k-factors. Per-edge diagnostics are populated
    whenever every vertex label is an admissible AP-set, regardless of the
    verdict.
    """
    inj = verify_iasi(g, f)
    failures: list[str] = []
    if inj.vertex_collision:
        a, b = inj.vertex_collision
        failures.append(f"vertex labels collide: {a} and {b}")
    if inj.edge_collision:
        e1, e2 = inj.edge_collision
        failures.append(
            f"edge labels collide: {edge_name(e1)} and {edge_name(e2)}"
        )

    profiles = {v: admissible_profile(f.label(v)) for v in g.sorted_vertices()}
    bad_vertices = [v for v, p in profiles.items() if p is None]
    for v in bad_vertices:
        failures.append(f"vertex {v} label is not an admissible AP-set")

    per_edge: tuple[EdgeReport, ...] = ()
    uniform_l = is_l_uniform(g, f)
    if not bad_vertices:
        reports = []
        for e in g.sorted_edges():
            edge_prof = ap_profile(f.edge_labels[e])
            try:
                kf = edge_k_factor(f, e)
            except NoKFactorError:
                kf = None
            reports.append(
                EdgeReport(
                    edge=e,
                    k_factor=kf,
                    edge_ap=edge_prof is not None,
                    edge_diff=edge_prof.diff if edge_prof else None,
                )
            )
        per_edge = tuple(reports)

    if not inj.is_iasi:
        verdict = NOT_IASI
    elif bad_vertices:
        verdict = IASI_NON_AP
    else:
        non_ap_edges = [r for r in per_edge if not r.edge_ap]
        for r in non_ap_edges:
            failures.append(f"edge {edge_name(r.edge)} label is not an AP-set")
        if non_ap_edges:
            verdict = SEMI_ARITHMETIC
        else:
            ks = {r.k_factor.k for r in per_edge}
            if ks <= {1}:
                verdict = ISOARITHMETIC
            elif 1 not in ks:
                verdict = IDENTICAL_BIARITHMETIC if len(ks) == 1 else BIARITHMETIC
            else:
                verdict = ARITHMETIC_MIXED
    return ClassReport(
        verdict=verdict,
        per_edge=per_edge,
        uniform_l=uniform_l,
        failures=tuple(failures),
    )


def restrict(f: Labeling, g_sub: Graph) -> Labeling:
    """Restriction of a labeling to a subgraph of its host."""
    for v in g_sub.vertices:
        if v not in f.graph.vertices:
            raise UnknownVertexError(f"vertex {v!r} not in host graph")
    return Labeling.make(g_sub, {v: f.label(v) for v in g_sub.vertices})
