"""Command-line front door.

One command per invocation, JSON on standard output (or to a file with
``-o``). Domain failures exit 1 with ``{"error": code, "message": ...}`` on
standard error; bad flags exit 2 via the argument parser. Default search
bounds can be overridden with ``IASI_BOUNDS="a=6,d=6,nmin=3,nmax=5"`` and
per-flag overrides win over the environment.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import jsonio
from .errors import IasiError, InputFormatError
from .graphs import (
    Graph,
    canon_edge,
    contract_edge,
    line_graph,
    subdivide,
    topological_reduce,
    total_graph,
)
from .labelings import classify
from .search import SEARCHABLE_CLASSES, SearchBounds, parse_bounds_text, search_labeling
from .theorems import verify_theorem
from .transfer import (
    construct_bi_bipartite,
    construct_bi_path,
    construct_iso,
    construct_semi,
    transfer_contract,
    transfer_line,
    transfer_reduce,
    transfer_subdivide,
    transfer_total,
)

OPS = ("line", "total", "subdivide", "contract", "reduce")
CONSTRUCTIONS = ("iso", "bi-bipartite", "bi-path", "semi")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iasi",
        description="Arithmetic integer-additive set-indexers: classify, "
        "transform, transfer, construct, search, verify-theorem.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--output", help="write the JSON document here")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument(
        "-g", "--graph", required=True, help="graph file (JSON or edge list)"
    )

    bounds = argparse.ArgumentParser(add_help=False)
    bounds.add_argument("--a-max", type=int, help="largest first term")
    bounds.add_argument("--d-max", type=int, help="largest common difference")
    bounds.add_argument("--n-min", type=int, help="smallest label size (>= 3)")
    bounds.add_argument("--n-max", type=int, help="largest label size")

    p = sub.add_parser("classify", parents=[graph, out], help="classify a labeling")
    p.add_argument("-l", "--labels", required=True, help="labeling JSON file")

    p = sub.add_parser(
        "transform", parents=[graph, out], help="apply a graph operation (no labels)"
    )
    p.add_argument("--op", required=True, choices=OPS)
    p.add_argument("--edge", help="edge 'u~v' for contract")
    p.add_argument("--vertex", help="degree-2 vertex for reduce")

    p = sub.add_parser(
        "transfer",
        parents=[graph, out],
        help="apply a graph operation and carry the labeling along",
    )
    p.add_argument("-l", "--labels", required=True, help="labeling JSON file")
    p.add_argument("--op", required=True, choices=OPS)
    p.add_argument("--edge", help="edge 'u~v' for contract")
    p.add_argument("--vertex", help="degree-2 vertex for reduce")

    p = sub.add_parser(
        "construct", parents=[graph, out], help="build a labeling of a known class"
    )
    p.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    p.add_argument("--d", type=int, default=1, help="common difference (default 1)")
    p.add_argument("--k", type=int, default=2, help="index ratio (default 2)")

    p = sub.add_parser(
        "search", parents=[graph, bounds, out], help="exhaustive witness search"
    )
    p.add_argument(
        "--class",
        dest="target_class",
        default="isoarithmetic",
        choices=SEARCHABLE_CLASSES,
        help="verdict to search for",
    )
    p.add_argument(
        "--identical-k",
        action="store_true",
        help="restrict a biarithmetic search to one shared k",
    )

    p = sub.add_parser(
        "verify-theorem", parents=[bounds, out], help="run one registered invariant"
    )
    p.add_argument("--theorem", required=True, help="registered theorem id")
    p.add_argument("--instances", help="comma-separated named graphs")

    return parser


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return jsonio.graph_from_text(_read_text(path))


def _load_labeling(path: str, g: Graph):
    return jsonio.labeling_from_obj(g, jsonio.loads(_read_text(path)))


def _parse_edge(text: str) -> tuple[str, str]:
    sep = "~" if "~" in text else ","
    parts = [p.strip() for p in text.split(sep)]
    if len(parts) != 2 or not all(parts):
        raise InputFormatError(f"cannot read edge {text!r}; use 'u~v'")
    return canon_edge(parts[0], parts[1])


def _merged_bounds(args, **fixed) -> SearchBounds:
    kwargs: dict = {}
    env = os.environ.get("IASI_BOUNDS")
    if env:
        kwargs.update(parse_bounds_text(env))
    for attr in ("a_max", "d_max", "n_min", "n_max"):
        value = getattr(args, attr, None)
        if value is not None:
            kwargs[attr] = value
    kwargs.update(fixed)
    return SearchBounds(**kwargs)


def _run_transform(args) -> dict:
    g = _load_graph(args.graph)
    if args.op == "line":
        return jsonio.graph_to_obj(line_graph(g))
    if args.op == "total":
        return jsonio.graph_to_obj(total_graph(g))
    if args.op == "subdivide":
        return jsonio.graph_to_obj(subdivide(g))
    if args.op == "contract":
        return jsonio.graph_to_obj(contract_edge(g, _parse_edge(args.edge)))
    return jsonio.graph_to_obj(topological_reduce(g, args.vertex))


def _run_transfer(args) -> dict:
    g = _load_graph(args.graph)
    f = _load_labeling(args.labels, g)
    if args.op == "line":
        g2, f2 = transfer_line(g, f)
    elif args.op == "total":
        g2, f2 = transfer_total(g, f)
    elif args.op == "subdivide":
        g2, f2 = transfer_subdivide(g, f)
    elif args.op == "contract":
        g2, f2 = transfer_contract(g, f, _parse_edge(args.edge))
    else:
        g2, f2 = transfer_reduce(g, f, args.vertex)
    return jsonio.pair_to_obj(g2, f2)


def _run_construct(args) -> dict:
    g = _load_graph(args.graph)
    if args.construction == "iso":
        f = construct_iso(g, args.d)
    elif args.construction == "bi-bipartite":
        f = construct_bi_bipartite(g, args.d, args.k)
    elif args.construction == "bi-path":
        f = construct_bi_path(g, args.d, args.k)
    else:
        f = construct_semi(g)
    return jsonio.labeling_to_obj(f)


def _dispatch(args) -> dict:
    if args.command == "classify":
        g = _load_graph(args.graph)
        f = _load_labeling(args.labels, g)
        return jsonio.class_report_to_obj(classify(g, f))
    if args.command == "transform":
        return _run_transform(args)
    if args.command == "transfer":
        return _run_transfer(args)
    if args.command == "construct":
        return _run_construct(args)
    if args.command == "search":
        g = _load_graph(args.graph)
        bounds = _merged_bounds(
            args, target_class=args.target_class, identical_k=args.identical_k
        )
        return jsonio.search_outcome_to_obj(search_labeling(g, bounds))
    instances: Optional[list[str]] = None
    if args.instances:
        instances = [s.strip() for s in args.instances.split(",") if s.strip()]
    report = verify_theorem(args.theorem, instances, _merged_bounds(args))
    return jsonio.theorem_report_to_obj(report)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "op", None) == "contract" and not getattr(args, "edge", None):
        parser.error("--op contract requires --edge 'u~v'")
    if getattr(args, "op", None) == "reduce" and not getattr(args, "vertex", None):
        parser.error("--op reduce requires --vertex")
    try:
        doc = _dispatch(args)
    except IasiError as exc:
        sys.stderr.write(jsonio.dumps({"error": exc.code, "message": str(exc)}))
        return 1
    except OSError as exc:
        sys.stderr.write(jsonio.dumps({"error": "unreadable-file", "message": str(exc)}))
        return 1
    text = jsonio.dumps(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
