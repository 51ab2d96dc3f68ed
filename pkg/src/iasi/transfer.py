"""Constructive labeling transfer to each associated graph, and labeling
constructors for the classified families.

Each transfer mirrors the label scheme its target construction suggests: new
vertices made from an edge inherit that edge's induced label, surviving
vertices keep theirs. Transfers re-verify both injectivity requirements and
raise :class:`TransferCollisionError` instead of assuming they hold; a failed
transfer is a reportable artifact, not something to repair by relabeling.

Constructors return the first witness found by a deterministic first-term
scan, so repeated runs are byte-identical. Tests should assert verdicts and
invariants of the result, not exact set values.
"""

from __future__ import annotations

from itertools import count
from typing import Iterable, Optional, Sequence

from .errors import (
    ConstructionFailedError,
    IsolatedVertexError,
    NotAPathError,
    NotApplicableError,
    TransferCollisionError,
)
from .graphs import (
    Graph,
    contract_edge,
    edge_name,
    line_graph,
    structural_predicates,
    subdivide,
    topological_reduce,
    total_graph,
)
from .intsets import APProfile, IntSet
from .labelings import (
    ARITHMETIC_FAMILY,
    SEMI_ARITHMETIC,
    Labeling,
    classify,
    verify_iasi,
)

#: Verdicts a transfer will accept on its input labeling.
TRANSFERABLE = ARITHMETIC_FAMILY + (SEMI_ARITHMETIC,)


def _require_transferable(g: Graph, f: Labeling) -> str:
    verdict = classify(g, f).verdict
    if verdict not in TRANSFERABLE:
        raise NotApplicableError(
            f"labeling classifies {verdict}; transfers need an arithmetic or "
            "semi-arithmetic input"
        )
    return verdict


def _checked(g: Graph, labels: dict[str, IntSet], context: str) -> Labeling:
    """Build the transferred labeling and re-verify injectivity."""
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(
            f"{context} leaves isolated vertices: {', '.join(isolated)}"
        )
    result = Labeling.make(g, labels)
    inj = verify_iasi(g, result)
    if not inj.is_iasi:
        if inj.vertex_collision:
            a, b = inj.vertex_collision
            detail = f"vertex labels of {a} and {b} coincide"
        else:
            e1, e2 = inj.edge_collision
            detail = f"edge labels of {edge_name(e1)} and {edge_name(e2)} coincide"
        raise TransferCollisionError(f"{context}: {detail}")
    return result


def transfer_contract(
    g: Graph, f: Labeling, e: Sequence[str], new_name: Optional[str] = None
) -> tuple[Graph, Labeling]:
    """Contract edge ``e``; the merged vertex inherits the deleted edge's label."""
    _require_transferable(g, f)
    u, v = g.require_edge(*e)
    merged_label = f.edge_labels[(u, v)]
    g2 = contract_edge(g, (u, v), new_name)
    w = new_name if new_name is not None else f"{u}*{v}"
    labels = {x: f.label(x) for x in g2.vertices if x != w}
    labels[w] = merged_label
    return g2, _checked(g2, labels, f"contracting {edge_name((u, v))}")


def transfer_reduce(g: Graph, f: Labeling, v: str) -> tuple[Graph, Labeling]:
    """Topologically reduce at ``v``; surviving labels are unchanged and the
    new edge is induced as usual from its endpoints."""
    _require_transferable(g, f)
    g2 = topological_reduce(g, v)
    labels = {x: f.label(x) for x in g2.vertices}
    return g2, _checked(g2, labels, f"reducing at {v}")


def transfer_subdivide(
    g: Graph, f: Labeling, edges: Optional[Iterable[Sequence[str]]] = None
) -> tuple[Graph, Labeling]:
    """Subdivide edges; each new degree-two vertex inherits the label of the
    edge it replaces."""
    _require_transferable(g, f)
    if edges is None:
        selected = g.sorted_edges()
    else:
        selected = sorted(g.require_edge(u, v) for u, v in edges)
    g2 = subdivide(g, selected)
    labels = {x: f.label(x) for x in g.vertices}
    for e in selected:
        labels[f"s:{edge_name(e)}"] = f.edge_labels[e]
    return g2, _checked(g2, labels, "subdividing")


def transfer_line(g: Graph, f: Labeling) -> tuple[Graph, Labeling]:
    """Label each line-graph vertex with the induced label of its edge."""
    _require_transferable(g, f)
    g2 = line_graph(g)
    labels = {edge_name(e): f.edge_labels[e] for e in g.edges}
    return g2, _checked(g2, labels, "line-graph transfer")


def transfer_total(g: Graph, f: Labeling) -> tuple[Graph, Labeling]:
    """Label total-graph points with the labels of their underlying elements.

    Vertex labels and edge labels of the source all become vertex labels here,
    so a vertex/edge label equality in the source, legal there, becomes a
    collision and raises.
    """
    _require_transferable(g, f)
    g2 = total_graph(g)
    labels: dict[str, IntSet] = {}
    for v in g.vertices:
        labels[f"v:{v}"] = f.label(v)
    for e in g.edges:
        labels[f"e:{edge_name(e)}"] = f.edge_labels[e]
    return g2, _checked(g2, labels, "total-graph transfer")


# ---------------------------------------------------------------------------
# Constructors


def _default_scan_bound(g: Graph, sizes: dict[str, int]) -> int:
    return 10 * max(1, len(g.vertices)) * max(sizes.values())


def _greedy_first_terms(
    g: Graph,
    diffs: dict[str, int],
    sizes: dict[str, int],
    scan_bound: Optional[int],
) -> Labeling:
    """Assign first terms by an exhaustive lexicographic scan with backtracking
    so that vertex and induced edge labels stay pairwise distinct."""
    bound = scan_bound if scan_bound is not None else _default_scan_bound(g, sizes)
    order = g.sorted_vertices()
    chosen: dict[str, IntSet] = {}
    vertex_keys: set[tuple[int, ...]] = set()
    edge_keys: set[tuple[int, ...]] = set()

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for a in range(bound + 1):
            label = APProfile(a, diffs[v], sizes[v]).expand()
            if label.elements in vertex_keys:
                continue
            new_edges = []
            ok = True
            for u in g.neighbors(v):
                if u not in chosen:
                    continue
                key = (label + chosen[u]).elements
                if key in edge_keys or key in new_edges:
                    ok = False
                    break
                new_edges.append(key)
            if not ok:
                continue
            chosen[v] = label
            vertex_keys.add(label.elements)
            edge_keys.update(new_edges)
            if place(i + 1):
                return True
            del chosen[v]
            vertex_keys.discard(label.elements)
            edge_keys.difference_update(new_edges)
        return False

    if not place(0):
        raise ConstructionFailedError(
            f"no injective assignment of first terms within bound {bound}"
        )
    return Labeling.make(g, chosen)


def _normalize_sizes(
    g: Graph, sizes: Optional[dict[str, int]], minimum: int
) -> dict[str, int]:
    out = {v: minimum for v in g.vertices}
    if sizes:
        for v, n in sizes.items():
            if v not in g.vertices:
                raise NotApplicableError(f"size given for unknown vertex {v!r}")
            if n < minimum:
                raise NotApplicableError(
                    f"size {n} for {v!r} below the minimum {minimum}"
                )
            out[v] = n
    return out


def construct_iso(
    g: Graph,
    d: int,
    sizes: Optional[dict[str, int]] = None,
    scan_bound: Optional[int] = None,
) -> Labeling:
    """Witness labeling in which every vertex gets an AP-set of common
    difference ``d``; classifies isoarithmetic."""
    if d < 1:
        raise NotApplicableError(f"common difference must be positive, got {d}")
    if g.isolated_vertices():
        raise IsolatedVertexError("graph has isolated vertices")
    size_map = _normalize_sizes(g, sizes, minimum=3)
    diffs = {v: d for v in g.vertices}
    return _greedy_first_terms(g, diffs, size_map, scan_bound)


def construct_bi_bipartite(
    g: Graph, d: int, k: int, scan_bound: Optional[int] = None
) -> Labeling:
    """Witness labeling on a bipartite graph with one side at difference ``d``
    and the other at ``k * d``; classifies identical-biarithmetic.

    Sizes are uniform at ``max(3, k)`` so the ratio bound k <= |low label|
    holds on every edge.
    """
    if d < 1 or k < 2:
        raise NotApplicableError(f"need d >= 1 and k >= 2, got d={d}, k={k}")
    if g.isolated_vertices():
        raise IsolatedVertexError("graph has isolated vertices")
    preds = structural_predicates(g)
    if not preds.bipartite:
        raise NotApplicableError("graph is not bipartite")
    side_x, side_y = preds.bipartition
    diffs = {v: d for v in side_x}
    diffs.update({v: k * d for v in side_y})
    sizes = {v: max(3, k) for v in g.vertices}
    return _greedy_first_terms(g, diffs, sizes, scan_bound)


def construct_bi_path(
    p: Graph,
    d1: int,
    k: int,
    sizes: Optional[Sequence[int]] = None,
    scan_bound: Optional[int] = None,
) -> Labeling:
    """Witness labeling on a path whose differences grow geometrically:
    the i-th vertex along the path gets difference ``k**(i-1) * d1``.

    ``sizes`` aligns with path order, starting from the lexicographically
    least endpoint; every size must be at least ``max(3, k)``. The result
    classifies identical-biarithmetic, and so does its line-graph transfer.
    """
    if d1 < 1 or k < 2:
        raise NotApplicableError(f"need d1 >= 1 and k >= 2, got d1={d1}, k={k}")
    preds = structural_predicates(p)
    if not preds.path or len(p.vertices) < 2:
        raise NotAPathError("graph is not a path on at least two vertices")
    ends = sorted(v for v in p.vertices if p.degree(v) == 1)
    order = [ends[0]]
    while len(order) < len(p.vertices):
        nxt = [u for u in p.neighbors(order[-1]) if u not in order]
        order.append(nxt[0])
    minimum = max(3, k)
    if sizes is None:
        size_list = [minimum] * len(order)
    else:
        size_list = list(sizes)
        if len(size_list) != len(order):
            raise NotApplicableError(
                f"got {len(size_list)} sizes for a path on {len(order)} vertices"
            )
        for n in size_list:
            if n < minimum:
                raise NotApplicableError(f"size {n} below the minimum {minimum}")
    diffs = {v: d1 * k**i for i, v in enumerate(order)}
    size_map = dict(zip(order, size_list))
    return _greedy_first_terms(p, diffs, size_map, scan_bound)


def _first_primes(n: int) -> list[int]:
    primes: list[int] = []
    c = 2
    while len(primes) < n:
        if all(c % p for p in primes):
            primes.append(c)
        c += 1
    return primes


def construct_semi(
    g: Graph,
    diffs: Optional[dict[str, int]] = None,
    sizes: Optional[dict[str, int]] = None,
    scan_bound: Optional[int] = None,
) -> Labeling:
    """Witness labeling with admissible AP vertex labels but non-AP edge
    labels; classifies semi-arithmetic.

    By default each vertex gets a distinct prime difference in name order, so
    no adjacent pair of differences divides the other and every edge label
    fails to be an AP. Custom ``diffs`` are accepted as long as the result
    still classifies semi-arithmetic; an overflow assignment (one difference
    an integer multiple of the other, with the multiplier above the smaller
    label's size) is the usual alternative.
    """
    if g.isolated_vertices():
        raise IsolatedVertexError("graph has isolated vertices")
    size_map = _normalize_sizes(g, sizes, minimum=3)
    order = g.sorted_vertices()
    if diffs is None:
        diff_map = dict(zip(order, _first_primes(len(order))))
    else:
        diff_map = dict(diffs)
        missing = [v for v in order if v not in diff_map]
        if missing:
            raise NotApplicableError(f"no difference given for vertex {missing[0]!r}")
    lab = _greedy_first_terms(g, diff_map, size_map, scan_bound)
    report = classify(g, lab)
    if report.verdict != SEMI_ARITHMETIC:
        raise ConstructionFailedError(
            f"labeling classifies {report.verdict}, not semi-arithmetic; "
            "no adjacent pair of differences may make every edge an AP"
        )
    return lab
