"""Registry of executable labeling-transfer invariants.

Each entry pairs a stable lookup id with a check that runs the claim over a
corpus of named graphs, using the constructors for positive witnesses and the
exhaustive oracle where an existence or non-existence claim is made.

Conventions shared by all checks:

* A transfer that raises a collision did not produce a labeling; it is
  recorded in the instance detail but only counts against claims that assert
  a valid labeling must exist.
* Claims about a whole family ("... is never biarithmetic") are evaluated
  over every transfer that did succeed, and fail on the first success that
  re-classifies inside the forbidden set.
* Negative existence claims are backed by full scans with an exhaustion
  certificate, never by sampling.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

from .errors import (
    EmptyLineGraphError,
    IsolatedVertexError,
    NotApplicableError,
    ReductionNotApplicableError,
    TransferCollisionError,
    UnknownTheoremError,
)
from .graphs import Graph, edge_name, named_graph, structural_predicates
from .intsets import ap_profile, make_intset
from .labelings import (
    ARITHMETIC_FAMILY,
    BIARITHMETIC,
    IASI_NON_AP,
    IDENTICAL_BIARITHMETIC,
    ISOARITHMETIC,
    NOT_IASI,
    SEMI_ARITHMETIC,
    Labeling,
    classify,
)
from .search import SearchBounds, collect_witnesses, search_labeling
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

NEVER_BI_ALLOWED = tuple(v for v in ARITHMETIC_FAMILY if v not in (BIARITHMETIC, IDENTICAL_BIARITHMETIC)) + (
    SEMI_ARITHMETIC,
    NOT_IASI,
    IASI_NON_AP,
)
OUTSIDE_ARITHMETIC = (NOT_IASI, IASI_NON_AP)

# pinned bounds for the certified triangle non-existence scan
K3_EXHAUSTION_BOUNDS = dict(a_max=6, d_max=8, n_min=3, n_max=4)


@dataclass(frozen=True)
class InstanceResult:
    instance: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    claim: str
    ok: bool
    results: tuple[InstanceResult, ...]


def _apply(fn: Callable, *args) -> tuple[Optional[str], str]:
    """Runs a transfer; returns (verdict, note) with verdict None on no result."""
    try:
        g2, lab2 = fn(*args)
    except TransferCollisionError as exc:
        return None, f"collision: {exc}"
    except (
        NotApplicableError,
        ReductionNotApplicableError,
        IsolatedVertexError,
        EmptyLineGraphError,
    ) as exc:
        return None, f"skipped: {exc}"
    return classify(g2, lab2).verdict, "ok"


def _spread_iso(g: Graph, d: int, sizes: Optional[dict] = None) -> Labeling:
    """Isoarithmetic labeling with power-of-4 first terms.

    Sums of at most four such starts have carry-free base-4 digits, so every
    derived labeling (line, total, subdivision, contraction, reduction) keeps
    distinct edge labels and the transfer cannot collide.
    """
    labels = {}
    for i, v in enumerate(g.sorted_vertices()):
        n = 3 if sizes is None else sizes[v]
        start = 4**i
        labels[v] = make_intset([start + d * j for j in range(n)])
    lab = Labeling.make(g, labels)
    verdict = classify(g, lab).verdict
    if verdict != ISOARITHMETIC:
        raise AssertionError(f"spread labeling classified {verdict}")
    return lab


def _iso_menu(g: Graph) -> list[Labeling]:
    """Deterministic spread of isoarithmetic labelings for one graph."""
    out = []
    order = g.sorted_vertices()
    for d in (1, 2, 3):
        for sizes in (None, {v: 3 + (i % 3) for i, v in enumerate(order)}):
            out.append(construct_iso(g, d, sizes))
            out.append(_spread_iso(g, d, sizes))
    return out


def _reducible_vertices(g: Graph) -> list[str]:
    out = []
    for v in g.sorted_vertices():
        if g.degree(v) != 2:
            continue
        u, w = g.neighbors(v)
        if not g.has_edge(u, w):
            out.append(v)
    return out


def _with_class(bounds: SearchBounds, klass: str) -> SearchBounds:
    return replace(bounds, target_class=klass, identical_k=False)


def _first_witness(g: Graph, bounds: SearchBounds, klass: str) -> Optional[Labeling]:
    return search_labeling(g, _with_class(bounds, klass)).witness


@dataclass
class _Tally:
    successes: int = 0
    collisions: int = 0
    skipped: int = 0
    wrong: list[str] = field(default_factory=list)

    def take(self, desc: str, verdict: Optional[str], note: str, allowed) -> None:
        if verdict is None:
            if note.startswith("collision"):
                self.collisions += 1
            else:
                self.skipped += 1
            return
        self.successes += 1
        if verdict not in allowed:
            self.wrong.append(f"{desc} classified {verdict}")

    def result(self, instance: str, require_success: bool = True) -> InstanceResult:
        ok = not self.wrong and (self.successes > 0 or not require_success)
        bits = [f"{self.successes} transfers checked"]
        if self.collisions:
            bits.append(f"{self.collisions} collisions")
        if self.skipped:
            bits.append(f"{self.skipped} skipped")
        if self.wrong:
            bits.append("; ".join(self.wrong[:3]))
        if require_success and self.successes == 0 and not self.wrong:
            bits.append("no transfer produced a labeling")
        return InstanceResult(instance, ok, ", ".join(bits))


# --- isoarithmetic preservation (one check per associated graph) -----------


def _iso_one_shot(op: Callable, desc: str):
    def run(instances, bounds):
        results = []
        for name in instances:
            g = named_graph(name)
            tally = _Tally()
            for lab in _iso_menu(g):
                verdict, note = _apply(op, g, lab)
                tally.take(desc, verdict, note, (ISOARITHMETIC,))
            results.append(tally.result(name))
        return results

    return run


def _iso_contract(instances, bounds):
    results = []
    for name in instances:
        g = named_graph(name)
        tally = _Tally()
        for lab in _iso_menu(g):
            for e in g.sorted_edges():
                verdict, note = _apply(transfer_contract, g, lab, e)
                tally.take(f"contract {edge_name(e)}", verdict, note, (ISOARITHMETIC,))
        results.append(tally.result(name))
    return results


def _iso_reduce(instances, bounds):
    """Chains reductions at the least reducible vertex until none applies."""
    results = []
    for name in instances:
        g0 = named_graph(name)
        tally = _Tally()
        for lab0 in _iso_menu(g0):
            g, lab, step = g0, lab0, 0
            while True:
                candidates = _reducible_vertices(g)
                if not candidates:
                    break
                step += 1
                desc = f"reduction {step} at {candidates[0]}"
                try:
                    g2, lab2 = transfer_reduce(g, lab, candidates[0])
                except TransferCollisionError as exc:
                    tally.take(desc, None, f"collision: {exc}", (ISOARITHMETIC,))
                    break
                verdict = classify(g2, lab2).verdict
                tally.take(desc, verdict, "ok", (ISOARITHMETIC,))
                if verdict != ISOARITHMETIC:
                    break
                g, lab = g2, lab2
        results.append(tally.result(name))
    return results


# --- biarithmetic line/total laws ------------------------------------------


def _fixed_triangle_witness() -> tuple[Graph, Labeling]:
    g = named_graph("K3")
    lab = Labeling.make(
        g,
        {
            "a": make_intset([0, 1, 2, 3]),
            "b": make_intset([0, 2, 4]),
            "c": make_intset([1, 5, 9]),
        },
    )
    return g, lab


def _line_iso_iff_bipartite(instances, bounds):
    results = []
    for name in instances:
        g = named_graph(name)
        tally = _Tally()
        if structural_predicates(g).bipartite:
            for k in (2, 3):
                lab = construct_bi_bipartite(g, 1, k)
                verdict, note = _apply(transfer_line, g, lab)
                tally.take(f"line of k={k} witness", verdict, note, (ISOARITHMETIC,))
            results.append(tally.result(name))
            continue
        labs = []
        if name == "K3":
            labs.append(_fixed_triangle_witness()[1])
        witness = _first_witness(g, bounds, BIARITHMETIC)
        if witness is not None:
            labs.append(witness)
        if not labs:
            results.append(
                InstanceResult(name, False, "no biarithmetic witness within bounds")
            )
            continue
        allowed = tuple(v for v in ARITHMETIC_FAMILY if v != ISOARITHMETIC) + (
            SEMI_ARITHMETIC,
            NOT_IASI,
            IASI_NON_AP,
        )
        for i, lab in enumerate(labs):
            verdict, note = _apply(transfer_line, g, lab)
            tally.take(f"line of witness {i}", verdict, note, allowed)
        results.append(tally.result(name, require_success=False))
    return results


def _line_of_cyclic_identical_never_bi(instances, bounds):
    results = []
    for name in instances:
        g = named_graph(name)
        witnesses, _ = collect_witnesses(
            g, _with_class(bounds, IDENTICAL_BIARITHMETIC), limit=8
        )
        if not witnesses:
            results.append(
                InstanceResult(name, False, "no identical-biarithmetic witness found")
            )
            continue
        tally = _Tally()
        for i, lab in enumerate(witnesses):
            verdict, note = _apply(transfer_line, g, lab)
            tally.take(f"line of witness {i}", verdict, note, NEVER_BI_ALLOWED)
        results.append(tally.result(name, require_success=False))
    return results


def _triangle_exhaustion_result(instance: str) -> InstanceResult:
    outcome = search_labeling(
        named_graph("K3"),
        SearchBounds(target_class=IDENTICAL_BIARITHMETIC, **K3_EXHAUSTION_BOUNDS),
    )
    ok = (not outcome.found) and outcome.exhausted
    return InstanceResult(
        instance,
        ok,
        f"identical-biarithmetic triangle search: found={outcome.found}, "
        f"exhausted={outcome.exhausted}, space={outcome.space_size}",
    )


def _line_bi_iff_path(instances, bounds):
    results = []
    for name in instances:
        g = named_graph(name)
        preds = structural_predicates(g)
        if name == "K3":
            results.append(_triangle_exhaustion_result(name))
            continue
        tally = _Tally()
        if preds.path and len(g.vertices) >= 3:
            for k in (2, 3):
                lab = construct_bi_path(g, 1, k)
                verdict, note = _apply(transfer_line, g, lab)
                tally.take(
                    f"line of path witness k={k}",
                    verdict,
                    note,
                    (IDENTICAL_BIARITHMETIC,),
                )
            results.append(tally.result(name))
            continue
        if preds.bipartite:
            labs = [construct_bi_bipartite(g, 1, 2)]
        else:
            w = _first_witness(g, bounds, BIARITHMETIC)
            labs = [w] if w is not None else []
        witness = _first_witness(g, bounds, IDENTICAL_BIARITHMETIC)
        if witness is not None:
            labs.append(witness)
        for i, lab in enumerate(labs):
            verdict, note = _apply(transfer_line, g, lab)
            tally.take(f"line of witness {i}", verdict, note, NEVER_BI_ALLOWED)
        results.append(tally.result(name, require_success=False))
    return results


def _overflow_labeling(g: Graph, k: int = 4) -> Labeling:
    """Geometric differences k^i with size-3 labels, so every ratio overflows."""
    diffs = {v: k**i for i, v in enumerate(g.sorted_vertices())}
    return construct_semi(g, diffs)


def _overflow_semi_then_line_non_ap(instances, bounds):
    results = []
    for name in instances:
        g = named_graph(name)
        lab = _overflow_labeling(g)
        verdict = classify(g, lab).verdict
        if verdict != SEMI_ARITHMETIC:
            results.append(
                InstanceResult(name, False, f"overflow labeling classified {verdict}")
            )
            continue
        try:
            g2, lab2 = transfer_line(g, lab)
        except TransferCollisionError as exc:
            results.append(InstanceResult(name, True, f"line collision: {exc}"))
            continue
        non_ap = [v for v in g2.sorted_vertices() if ap_profile(lab2.label(v)) is None]
        verdict2 = classify(g2, lab2).verdict
        ok = bool(non_ap) and verdict2 in OUTSIDE_ARITHMETIC
        results.append(
            InstanceResult(
                name,
                ok,
                f"semi-arithmetic confirmed; line has {len(non_ap)} non-AP vertex "
                f"labels and classified {verdict2}",
            )
        )
    return results


def _spread_identical(g: Graph, k: int = 2) -> Labeling:
    """Identical-biarithmetic labeling of a bipartite graph with base-100
    power starts, wide enough that total and subdivision transfers of it
    cannot collide."""
    preds = structural_predicates(g)
    if not preds.bipartite:
        raise NotApplicableError("spread identical labeling needs a bipartite graph")
    side0 = set(preds.bipartition[0])
    labels = {}
    for i, v in enumerate(g.sorted_vertices()):
        d = 1 if v in side0 else k
        start = 100**i
        labels[v] = make_intset([start + d * j for j in range(3)])
    lab = Labeling.make(g, labels)
    verdict = classify(g, lab).verdict
    if verdict != IDENTICAL_BIARITHMETIC:
        raise AssertionError(f"spread labeling classified {verdict}")
    return lab


def _identical_menu(g: Graph, bounds: SearchBounds) -> list[Labeling]:
    """Identical-biarithmetic witnesses: oracle first, constructors as backup."""
    labs: list[Labeling] = []
    if len(g.vertices) <= 4:
        w = _first_witness(g, bounds, IDENTICAL_BIARITHMETIC)
        if w is not None:
            labs.append(w)
    preds = structural_predicates(g)
    if preds.path and len(g.vertices) >= 2:
        try:
            labs.append(construct_bi_path(g, 1, 2))
        except NotApplicableError:
            pass
    elif preds.bipartite:
        labs.append(construct_bi_bipartite(g, 1, 2))
    if preds.bipartite:
        labs.append(_spread_identical(g))
    return labs


def _total_stays_arithmetic(instances, bounds):
    allowed = ARITHMETIC_FAMILY
    results = []
    for name in instances:
        g = named_graph(name)
        labs = _identical_menu(g, bounds)
        if not labs:
            results.append(InstanceResult(name, False, "no identical witness found"))
            continue
        tally = _Tally()
        for i, lab in enumerate(labs):
            verdict, note = _apply(transfer_total, g, lab)
            tally.take(f"total of witness {i}", verdict, note, allowed)
        results.append(tally.result(name, require_success=False))
    return results


def _total_never_bi(instances, bounds):
    results = []
    for name in instances:
        if name == "K3-exhaustion":
            results.append(_triangle_exhaustion_result(name))
            continue
        g = named_graph(name)
        labs = _identical_menu(g, bounds)
        if not labs:
            results.append(InstanceResult(name, False, "no identical witness found"))
            continue
        tally = _Tally()
        for i, lab in enumerate(labs):
            verdict, note = _apply(transfer_total, g, lab)
            tally.take(f"total of witness {i}", verdict, note, NEVER_BI_ALLOWED)
        results.append(tally.result(name, require_success=False))
    return results


def _contract_witness_never_bi(instances, bounds):
    results = []
    for name in instances:
        g = named_graph(name)
        witness = _first_witness(g, bounds, IDENTICAL_BIARITHMETIC)
        if witness is None:
            results.append(InstanceResult(name, False, "no identical witness found"))
            continue
        tally = _Tally()
        for e in g.sorted_edges():
            verdict, note = _apply(transfer_contract, g, witness, e)
            tally.take(f"contract {edge_name(e)}", verdict, note, NEVER_BI_ALLOWED)
        results.append(tally.result(name))
    return results


def _reduce_witness_never_bi(instances, bounds):
    results = []
    for name in instances:
        g = named_graph(name)
        if name.startswith("P"):
            witness: Optional[Labeling] = construct_bi_path(g, 1, 2)
        else:
            witness = _first_witness(g, bounds, IDENTICAL_BIARITHMETIC)
        if witness is None:
            results.append(InstanceResult(name, False, "no biarithmetic witness found"))
            continue
        tally = _Tally()
        for v in _reducible_vertices(g):
            verdict, note = _apply(transfer_reduce, g, witness, v)
            tally.take(f"reduce at {v}", verdict, note, NEVER_BI_ALLOWED)
        results.append(tally.result(name))
    return results


def _subdivide_witness_never_bi(instances, bounds):
    results = []
    overall_success = 0
    for name in instances:
        g = named_graph(name)
        if name.startswith("P") and len(g.vertices) >= 3:
            witness: Optional[Labeling] = construct_bi_path(g, 1, 2)
        else:
            witness = _first_witness(g, bounds, IDENTICAL_BIARITHMETIC)
        if witness is None:
            results.append(InstanceResult(name, False, "no biarithmetic witness found"))
            continue
        tally = _Tally()
        verdict, note = _apply(transfer_subdivide, g, witness)
        tally.take("subdivide", verdict, note, NEVER_BI_ALLOWED)
        overall_success += tally.successes
        results.append(tally.result(name, require_success=False))
    if results and overall_success == 0:
        results.append(
            InstanceResult("any-success", False, "every subdivision collided")
        )
    return results


# --- semi-arithmetic transfers ---------------------------------------------

SEMI_CORPUS = (
    "P2",
    "K3",
    "K1_3",
    "K1_4",
    "K1_5",
    "paw",
    "diamond",
    "butterfly",
    "K4",
    "K5",
)

FORBIDDEN_AFTER_SEMI = ARITHMETIC_FAMILY + (SEMI_ARITHMETIC,)


def semi_corpus_labeling(name: str) -> tuple[Graph, Labeling]:
    """The corpus semi-arithmetic labeling for a named graph: distinct prime
    differences in vertex order, size-3 labels."""
    g = named_graph(name)
    return g, construct_semi(g)


def _least_non_ap_edge(g: Graph, lab: Labeling):
    for e in g.sorted_edges():
        if ap_profile(lab.edge_labels[e]) is None:
            return e
    raise NotApplicableError("labeling has no non-AP edge to contract")


def _semi_transfer_runner(op_name: str):
    def run(instances, bounds):
        results = []
        for name in instances:
            g, lab = semi_corpus_labeling(name)
            if op_name == "line":
                verdict, note = _apply(transfer_line, g, lab)
            elif op_name == "total":
                verdict, note = _apply(transfer_total, g, lab)
            elif op_name == "contract":
                e = _least_non_ap_edge(g, lab)
                verdict, note = _apply(transfer_contract, g, lab, e)
            elif op_name == "subdivide":
                verdict, note = _apply(transfer_subdivide, g, lab)
            else:
                reducible = _reducible_vertices(g)
                if not reducible:
                    results.append(
                        InstanceResult(
                            name, True, "no reducible vertex; claim is vacuous here"
                        )
                    )
                    continue
                verdict, note = _apply(transfer_reduce, g, lab, reducible[0])
            if verdict is None and note.startswith("collision"):
                results.append(
                    InstanceResult(name, True, f"transfer not an IASI ({note})")
                )
            elif verdict is None:
                results.append(InstanceResult(name, True, note))
            elif verdict in FORBIDDEN_AFTER_SEMI:
                results.append(
                    InstanceResult(name, False, f"{op_name} classified {verdict}")
                )
            else:
                results.append(
                    InstanceResult(name, True, f"{op_name} classified {verdict}")
                )
        return results

    return run


# --- registry ---------------------------------------------------------------


@dataclass(frozen=True)
class _Entry:
    claim: str
    instances: tuple[str, ...]
    runner: Callable


_REGISTRY: dict[str, _Entry] = {
    "T2.3": _Entry(
        "contracting an edge of an isoarithmetic labeling stays isoarithmetic",
        ("P3", "P4", "C3", "C4", "K1_3", "K4"),
        _iso_contract,
    ),
    "T2.5": _Entry(
        "chains of topological reductions of an isoarithmetic labeling stay isoarithmetic",
        ("P3", "P4", "P5", "C4", "C5", "C6"),
        _iso_reduce,
    ),
    "T2.7": _Entry(
        "subdividing every edge of an isoarithmetic labeling stays isoarithmetic",
        ("P2", "P3", "C3", "C4", "K1_3"),
        _iso_one_shot(transfer_subdivide, "subdivide"),
    ),
    "T2.9": _Entry(
        "the line transfer of an isoarithmetic labeling is isoarithmetic",
        ("P3", "P4", "C3", "C4", "C5", "K1_3"),
        _iso_one_shot(transfer_line, "line"),
    ),
    "T2.11": _Entry(
        "the total transfer of an isoarithmetic labeling is isoarithmetic",
        ("P2", "P3", "C3", "C4"),
        _iso_one_shot(transfer_total, "total"),
    ),
    "T3.2": _Entry(
        "the line transfer of a biarithmetic labeling is isoarithmetic exactly on bipartite graphs",
        ("K1_3", "C4", "P3", "P4", "C6", "K3", "C5", "paw"),
        _line_iso_iff_bipartite,
    ),
    "T3.3": _Entry(
        "line transfers of identical-biarithmetic labelings of cyclic graphs are never biarithmetic",
        ("C4", "C6"),
        _line_of_cyclic_identical_never_bi,
    ),
    "T3.5": _Entry(
        "the line transfer of a biarithmetic labeling is biarithmetic exactly on paths",
        ("P3", "P4", "P5", "K1_3", "C4", "K3"),
        _line_bi_iff_path,
    ),
    "T3.6": _Entry(
        "a ratio overflow forces semi-arithmetic, and its line transfer has a non-AP vertex label",
        ("P3", "P4"),
        _overflow_semi_then_line_non_ap,
    ),
    "T3.7": _Entry(
        "the total transfer of an identical-biarithmetic labeling stays arithmetic",
        ("P2", "C4", "K1_3", "P3"),
        _total_stays_arithmetic,
    ),
    "T3.8": _Entry(
        "the total transfer of a biarithmetic labeling stays arithmetic (identical reading)",
        ("P2", "C4", "K1_3", "P3", "P4"),
        _total_stays_arithmetic,
    ),
    "T3.9": _Entry(
        "the total transfer of a biarithmetic labeling is never biarithmetic (identical reading)",
        ("P2", "C4", "K1_3", "P3", "K3-exhaustion"),
        _total_never_bi,
    ),
    "O3.10": _Entry(
        "contracting an identical-biarithmetic cycle witness never yields biarithmetic",
        ("C4",),
        _contract_witness_never_bi,
    ),
    "P3.11": _Entry(
        "topological reduction of a biarithmetic witness is never biarithmetic",
        ("C4", "P4"),
        _reduce_witness_never_bi,
    ),
    "T3.12": _Entry(
        "subdividing a biarithmetic witness is never biarithmetic",
        ("P2", "P3", "C4"),
        _subdivide_witness_never_bi,
    ),
    "P4.1": _Entry(
        "the line transfer of a semi-arithmetic labeling leaves the arithmetic and semi-arithmetic classes",
        SEMI_CORPUS,
        _semi_transfer_runner("line"),
    ),
    "P4.2": _Entry(
        "the total transfer of a semi-arithmetic labeling leaves the arithmetic and semi-arithmetic classes",
        SEMI_CORPUS,
        _semi_transfer_runner("total"),
    ),
    "P4.3": _Entry(
        "contracting a non-AP edge of a semi-arithmetic labeling leaves the arithmetic and semi-arithmetic classes",
        SEMI_CORPUS,
        _semi_transfer_runner("contract"),
    ),
    "P4.4": _Entry(
        "subdividing a semi-arithmetic labeling leaves the arithmetic and semi-arithmetic classes",
        SEMI_CORPUS,
        _semi_transfer_runner("subdivide"),
    ),
    "P4.5": _Entry(
        "topological reduction of a semi-arithmetic labeling leaves the arithmetic and semi-arithmetic classes",
        SEMI_CORPUS,
        _semi_transfer_runner("reduce"),
    ),
}

THEOREM_IDS = tuple(_REGISTRY)


def verify_theorem(
    name: str,
    instances: Optional[Sequence[str]] = None,
    bounds: Optional[SearchBounds] = None,
) -> TheoremReport:
    """Runs one registered invariant over its corpus slice."""
    entry = _REGISTRY.get(name)
    if entry is None:
        raise UnknownTheoremError(
            f"unknown theorem id {name!r}; known: {', '.join(THEOREM_IDS)}"
        )
    chosen = tuple(instances) if instances else entry.instances
    effective = bounds if bounds is not None else SearchBounds()
    results = tuple(entry.runner(chosen, effective))
    return TheoremReport(name, entry.claim, all(r.ok for r in results), results)
