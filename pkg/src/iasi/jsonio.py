"""JSON and edge-list text formats for graphs, labelings, and reports.

Every emitter is canonical: object keys sorted, vertex and edge arrays in
lexicographic order, two-space indentation, one trailing newline. Equal
values therefore serialize to byte-identical documents, which is what the
golden-file and determinism tests rely on.

Graph JSON:     {"vertices": ["a", "b"], "edges": [["a", "b"]]}
Labeling JSON:  {"a": [0, 1, 2], "b": [3, 4, 5]}
A transferred labeling travels as {"graph": ..., "labels": ...}.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .errors import InputFormatError
from .graphs import Graph
from .intsets import make_intset
from .labelings import ClassReport, Labeling
from .search import SearchOutcome
from .theorems import TheoremReport


def dumps(obj: Any) -> str:
    """Canonical JSON text for an already-plain object tree."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"not valid JSON: {exc}") from None


# --- graphs -----------------------------------------------------------------


def graph_to_obj(g: Graph) -> dict:
    return {
        "vertices": g.sorted_vertices(),
        "edges": [[u, v] for u, v in g.sorted_edges()],
    }


def graph_from_obj(obj: Any) -> Graph:
    if not isinstance(obj, dict):
        raise InputFormatError("graph JSON must be an object")
    vertices = obj.get("vertices")
    edges = obj.get("edges")
    if not isinstance(vertices, list) or not all(
        isinstance(v, str) and v for v in vertices
    ):
        raise InputFormatError("graph JSON needs 'vertices': array of vertex ids")
    if not isinstance(edges, list):
        raise InputFormatError("graph JSON needs 'edges': array of vertex pairs")
    pairs = []
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, str) and x for x in e)
        ):
            raise InputFormatError(f"edge {e!r} is not a pair of vertex ids")
        pairs.append((e[0], e[1]))
    return Graph.build(vertices, pairs)


def parse_edge_list(text: str) -> Graph:
    """Graph from hand-authored text: one "u v" per line, '#' comments."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputFormatError(
                f"line {lineno}: expected 'u v', got {line!r}"
            )
        pairs.append((parts[0], parts[1]))
    if not pairs:
        raise InputFormatError("edge list has no edges")
    return Graph.from_edges(pairs)


def graph_from_text(text: str) -> Graph:
    """Graph from either JSON or edge-list text, chosen by first character."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_obj(loads(text))
    return parse_edge_list(text)


# --- labelings --------------------------------------------------------------


def labeling_to_obj(f: Labeling) -> dict:
    return {v: list(s.elements) for v, s in f.vertex_labels.items()}


def labeling_from_obj(g: Graph, obj: Any) -> Labeling:
    if not isinstance(obj, dict):
        raise InputFormatError("labeling JSON must map vertex ids to arrays")
    labels = {}
    for v, values in obj.items():
        if not isinstance(values, list):
            raise InputFormatError(f"label of {v!r} is not an array")
        labels[v] = make_intset(values)
    return Labeling.make(g, labels)


def pair_to_obj(g: Graph, f: Labeling) -> dict:
    return {"graph": graph_to_obj(g), "labels": labeling_to_obj(f)}


# --- reports ----------------------------------------------------------------


def class_report_to_obj(report: ClassReport) -> dict:
    per_edge = []
    for er in report.per_edge:
        kf: Optional[dict] = None
        if er.k_factor is not None:
            kf = {
                "low": er.k_factor.low_vertex,
                "high": er.k_factor.high_vertex,
                "k": er.k_factor.k,
                "within_bound": er.k_factor.within_bound,
            }
        per_edge.append(
            {
                "edge": list(er.edge),
                "k_factor": kf,
                "edge_ap": er.edge_ap,
                "edge_diff": er.edge_diff,
            }
        )
    return {
        "verdict": report.verdict,
        "per_edge": per_edge,
        "uniform_l": report.uniform_l,
        "failures": list(report.failures),
    }


def search_outcome_to_obj(outcome: SearchOutcome) -> dict:
    return {
        "found": outcome.found,
        "exhausted": outcome.exhausted,
        "space_size": outcome.space_size,
        "witness": None
        if outcome.witness is None
        else labeling_to_obj(outcome.witness),
        "witness_verdict": outcome.witness_verdict,
    }


def theorem_report_to_obj(report: TheoremReport) -> dict:
    return {
        "theorem": report.theorem,
        "claim": report.claim,
        "ok": report.ok,
        "results": [
            {"instance": r.instance, "ok": r.ok, "detail": r.detail}
            for r in report.results
        ],
    }
