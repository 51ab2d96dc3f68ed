"""Simple undirected graphs with named vertices, the five associated-graph
constructions, and the structural predicates the labeling results depend on.

Vertex ids are non-empty strings. All transforms are pure and use fixed id
schemes so transformed graphs are byte-for-byte reproducible:

* line graph vertex for edge (u, v): ``"u~v"`` with u < v
* total graph points: ``"v:" + vertex`` and ``"e:" + edge id``
* subdivision vertex on edge (u, v): ``"s:u~v"``
* contraction of edge (u, v): merged vertex ``"u*v"`` unless renamed
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    EmptyLineGraphError,
    GraphConstructionError,
    ReductionNotApplicableError,
    UnknownEdgeError,
    UnknownVertexError,
)

Edge = tuple[str, str]


def canon_edge(u: str, v: str) -> Edge:
    """Canonical unordered pair: endpoints in lexicographic order."""
    if u == v:
        raise GraphConstructionError(f"self-loop at {u!r}")
    return (u, v) if u < v else (v, u)


def edge_name(e: Edge) -> str:
    """Printable id for an edge, ``"u~v"`` with u < v."""
    return f"{e[0]}~{e[1]}"


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    Isolated vertices are tolerated structurally; labeling and classification
    reject them on admission.
    """

    vertices: frozenset[str] = field(default_factory=frozenset)
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for v in self.vertices:
            if not isinstance(v, str) or not v:
                raise GraphConstructionError(f"bad vertex id {v!r}")
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphConstructionError(f"self-loop at {u!r}")
            if e != canon_edge(u, v):
                raise GraphConstructionError(f"edge {e!r} is not in canonical order")
            if u not in self.vertices or v not in self.vertices:
                raise GraphConstructionError(f"edge {e!r} has undeclared endpoint")

    @staticmethod
    def build(vertices: Iterable[str], edges: Iterable[Sequence[str]]) -> "Graph":
        """Normalising constructor: canonicalises edges, adds their endpoints."""
        vs = set(vertices)
        es = set()
        for pair in edges:
            u, v = pair
            es.add(canon_edge(u, v))
            vs.add(u)
            vs.add(v)
        return Graph(frozenset(vs), frozenset(es))

    @staticmethod
    def from_edges(edges: Iterable[Sequence[str]]) -> "Graph":
        return Graph.build((), edges)

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: str, v: str) -> bool:
        return canon_edge(u, v) in self.edges

    def neighbors(self, v: str) -> list[str]:
        if v not in self.vertices:
            raise UnknownVertexError(f"vertex {v!r} not in graph")
        return sorted(
            (b if a == v else a) for a, b in self.edges if v in (a, b)
        )

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def isolated_vertices(self) -> list[str]:
        covered = {x for e in self.edges for x in e}
        return sorted(self.vertices - covered)

    def require_edge(self, u: str, v: str) -> Edge:
        e = canon_edge(u, v)
        if e not in self.edges:
            raise UnknownEdgeError(f"edge {edge_name(e)} not in graph")
        return e


# ---------------------------------------------------------------------------
# Associated-graph constructions


def line_graph(g: Graph) -> Graph:
    """Graph on the edges of ``g``; two are adjacent when they share an endpoint."""
    if not g.edges:
        raise EmptyLineGraphError("line graph of an edgeless graph is empty")
    names = {e: edge_name(e) for e in g.edges}
    edges = []
    es = g.sorted_edges()
    for i, e1 in enumerate(es):
        for e2 in es[i + 1 :]:
            if set(e1) & set(e2):
                edges.append((names[e1], names[e2]))
    return Graph.build(names.values(), edges)


def total_graph(g: Graph) -> Graph:
    """Graph on all elements of ``g``: vertex points ``v:<id>`` and edge points
    ``e:<edge id>``, joined by adjacency or incidence in ``g``."""
    vpoint = {v: f"v:{v}" for v in g.vertices}
    epoint = {e: f"e:{edge_name(e)}" for e in g.edges}
    edges: list[tuple[str, str]] = []
    for u, v in g.edges:
        edges.append((vpoint[u], vpoint[v]))
        edges.append((vpoint[u], epoint[(u, v)]))
        edges.append((vpoint[v], epoint[(u, v)]))
    es = g.sorted_edges()
    for i, e1 in enumerate(es):
        for e2 in es[i + 1 :]:
            if set(e1) & set(e2):
                edges.append((epoint[e1], epoint[e2]))
    return Graph.build(list(vpoint.values()) + list(epoint.values()), edges)


def subdivide(g: Graph, edges: Optional[Iterable[Sequence[str]]] = None) -> Graph:
    """Replace each selected edge (u, v) by u - w - v with a fresh degree-two
    vertex ``s:u~v``. Default selects every edge."""
    if edges is None:
        selected = set(g.edges)
    else:
        selected = {g.require_edge(u, v) for u, v in edges}
    new_edges: list[tuple[str, str]] = []
    for e in g.edges:
        if e in selected:
            w = f"s:{edge_name(e)}"
            new_edges.append((e[0], w))
            new_edges.append((w, e[1]))
        else:
            new_edges.append(e)
    return Graph.build(g.vertices, new_edges)


def contract_edge(g: Graph, e: Sequence[str], new_name: Optional[str] = None) -> Graph:
    """Remove edge ``e`` and merge its endpoints into one vertex.

    Simple-graph merge policy: parallel edges collapse, loops are dropped.
    The merged vertex is named ``"u*v"`` unless ``new_name`` is given.
    """
    u, v = g.require_edge(*e)
    w = new_name if new_name is not None else f"{u}*{v}"
    if w in g.vertices - {u, v}:
        raise GraphConstructionError(f"merged vertex id {w!r} already in use")
    vertices = (g.vertices - {u, v}) | {w}
    edges = set()
    for a, b in g.edges:
        a2 = w if a in (u, v) else a
        b2 = w if b in (u, v) else b
        if a2 != b2:
            edges.add(canon_edge(a2, b2))
    return Graph(frozenset(vertices), frozenset(edges))


def topological_reduce(g: Graph, v: str) -> Graph:
    """Delete a degree-two vertex with non-adjacent neighbors and join them."""
    nbrs = g.neighbors(v)
    if len(nbrs) != 2:
        raise ReductionNotApplicableError(
            f"vertex {v!r} has degree {len(nbrs)}, need exactly 2"
        )
    a, b = nbrs
    if g.has_edge(a, b):
        raise ReductionNotApplicableError(
            f"neighbors {a!r} and {b!r} of {v!r} are adjacent"
        )
    vertices = g.vertices - {v}
    edges = {e for e in g.edges if v not in e} | {canon_edge(a, b)}
    return Graph(frozenset(vertices), frozenset(edges))


# ---------------------------------------------------------------------------
# Structural predicates


@dataclass(frozen=True)
class StructuralPredicates:
    bipartite: bool
    acyclic: bool
    path: bool
    bipartition: Optional[tuple[tuple[str, ...], tuple[str, ...]]]


def structural_predicates(g: Graph) -> StructuralPredicates:
    """Exact bipartiteness, acyclicity, and path-ness of a non-empty graph.

    The bipartition, when it exists, puts the lexicographically least vertex
    of every component on the first side, so it is deterministic.
    """
    if not g.vertices:
        raise GraphConstructionError("predicates of the empty graph")
    color: dict[str, int] = {}
    bipartite = True
    cycle_free = True
    components = 0
    for start in g.sorted_vertices():
        if start in color:
            continue
        components += 1
        color[start] = 0
        queue = [start]
        while queue:
            x = queue.pop(0)
            for y in g.neighbors(x):
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    bipartite = False
    cycle_free = len(g.edges) == len(g.vertices) - components
    degrees = [g.degree(v) for v in g.sorted_vertices()]
    if len(g.vertices) == 1:
        is_path = True
    elif len(g.vertices) == 2:
        is_path = components == 1 and len(g.edges) == 1
    else:
        is_path = (
            components == 1
            and degrees.count(1) == 2
            and degrees.count(2) == len(degrees) - 2
        )
    bipartition = None
    if bipartite:
        side0 = tuple(sorted(v for v, c in color.items() if c == 0))
        side1 = tuple(sorted(v for v, c in color.items() if c == 1))
        bipartition = (side0, side1)
    return StructuralPredicates(bipartite, cycle_free, is_path, bipartition)


# ---------------------------------------------------------------------------
# Named fixture graphs

_LETTERS = "abcdefghij"


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices named a, b, c, ..."""
    if not 2 <= n <= len(_LETTERS):
        raise GraphConstructionError(f"path size {n} out of range")
    return Graph.from_edges(
        (_LETTERS[i], _LETTERS[i + 1]) for i in range(n - 1)
    )


def cycle_graph(n: int) -> Graph:
    if not 3 <= n <= len(_LETTERS):
        raise GraphConstructionError(f"cycle size {n} out of range")
    edges = [(_LETTERS[i], _LETTERS[i + 1]) for i in range(n - 1)]
    edges.append((_LETTERS[0], _LETTERS[n - 1]))
    return Graph.from_edges(edges)


def complete_graph(n: int) -> Graph:
    if not 2 <= n <= len(_LETTERS):
        raise GraphConstructionError(f"complete graph size {n} out of range")
    names = _LETTERS[:n]
    return Graph.from_edges(
        (names[i], names[j]) for i in range(n) for j in range(i + 1, n)
    )


def star_graph(leaves: int) -> Graph:
    """Star with center ``c`` and leaves x, y, z, ..."""
    leaf_names = "xyzpqrstuv"
    if not 1 <= leaves <= len(leaf_names):
        raise GraphConstructionError(f"star size {leaves} out of range")
    return Graph.from_edges(("c", leaf_names[i]) for i in range(leaves))


def named_graph(name: str) -> Graph:
    """Fixture corpus lookup: P2..P6, C3..C6, K3..K5, K1_3..K1_5, paw,
    diamond, butterfly, 2P2."""
    name = name.strip()
    if name.startswith("P") and name[1:].isdigit():
        return path_graph(int(name[1:]))
    if name.startswith("C") and name[1:].isdigit():
        return cycle_graph(int(name[1:]))
    if name.startswith("K1_") and name[3:].isdigit():
        return star_graph(int(name[3:]))
    if name.startswith("K") and name[1:].isdigit():
        return complete_graph(int(name[1:]))
    if name == "paw":
        return Graph.from_edges([("a", "b"), ("a", "c"), ("b", "c"), ("a", "d")])
    if name == "diamond":
        return Graph.from_edges(
            [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d")]
        )
    if name == "butterfly":
        return Graph.from_edges(
            [("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"), ("c", "e"), ("d", "e")]
        )
    if name == "2P2":
        return Graph.from_edges([("a", "b"), ("c", "d")])
    raise GraphConstructionError(f"unknown graph name {name!r}")
