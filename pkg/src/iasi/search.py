"""Exhaustive search for labelings in a given verdict class.

The search space is the set of arithmetic-progression profiles ``(a, d, n)``
with ``0 <= a <= a_max``, ``1 <= d <= d_max`` and ``n_min <= n <= n_max``,
assigned one per vertex. Profiles are enumerated in ascending ``(a, d, n)``
order and vertices in ascending name order, so the first witness found is the
lexicographically least one. An outcome with ``exhausted=True`` certifies that
the entire space (``P ** |V|`` assignments) was scanned.

Two independent pair tables back the scan: an AP table filled by expanding and
sorting each pairwise sumset, and a ratio table filled from profile arithmetic
(difference divisibility plus the size bound). Search classes prune on the
ratio route; the AP route is used where the class definition mentions edge
APs. The two routes are never merged, so they can cross-check each other.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import backend
from .errors import (
    InvalidBoundsError,
    IsolatedVertexError,
    SearchTooLargeError,
)
from .graphs import Graph
from .intsets import APProfile
from .labelings import (
    ARITHMETIC_MIXED,
    BIARITHMETIC,
    IDENTICAL_BIARITHMETIC,
    ISOARITHMETIC,
    SEMI_ARITHMETIC,
    Labeling,
    classify,
)

DEFAULT_A_MAX = 6
DEFAULT_D_MAX = 6
DEFAULT_N_MIN = 3
DEFAULT_N_MAX = 5
DEFAULT_VERTEX_CAP = 6

# beyond this many profiles the pair tables stop being cheap to hold
MAX_PROFILES = 2000

SEARCHABLE_CLASSES = (
    ISOARITHMETIC,
    IDENTICAL_BIARITHMETIC,
    BIARITHMETIC,
    ARITHMETIC_MIXED,
    SEMI_ARITHMETIC,
)


@dataclass(frozen=True)
class SearchBounds:
    """Profile bounds plus the verdict class being searched for."""

    a_max: int = DEFAULT_A_MAX
    d_max: int = DEFAULT_D_MAX
    n_min: int = DEFAULT_N_MIN
    n_max: int = DEFAULT_N_MAX
    target_class: str = ISOARITHMETIC
    identical_k: bool = False

    def __post_init__(self) -> None:
        if self.a_max < 0:
            raise InvalidBoundsError(f"a_max must be non-negative, got {self.a_max}")
        if self.d_max < 1:
            raise InvalidBoundsError(f"d_max must be at least 1, got {self.d_max}")
        if self.n_min < 3:
            raise InvalidBoundsError(
                f"n_min must be at least 3 (smaller sets are never admissible), got {self.n_min}"
            )
        if self.n_max < self.n_min:
            raise InvalidBoundsError(
                f"n_max must be at least n_min, got n_min={self.n_min} n_max={self.n_max}"
            )
        if self.target_class not in SEARCHABLE_CLASSES:
            raise InvalidBoundsError(
                f"cannot search for class {self.target_class!r}; "
                f"choose one of {', '.join(SEARCHABLE_CLASSES)}"
            )
        if self.identical_k and self.target_class not in (
            BIARITHMETIC,
            IDENTICAL_BIARITHMETIC,
        ):
            raise InvalidBoundsError(
                "identical_k only applies to biarithmetic searches, "
                f"not {self.target_class!r}"
            )

    @property
    def effective_class(self) -> str:
        if self.target_class == BIARITHMETIC and self.identical_k:
            return IDENTICAL_BIARITHMETIC
        return self.target_class

    @property
    def n_profiles(self) -> int:
        return (self.a_max + 1) * self.d_max * (self.n_max - self.n_min + 1)


def parse_bounds_text(text: str) -> dict[str, int]:
    """Parses ``"a=6,d=6,nmin=3,nmax=5"`` into SearchBounds keyword form."""
    keys = {"a": "a_max", "d": "d_max", "nmin": "n_min", "nmax": "n_max"}
    out: dict[str, int] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, value = part.partition("=")
        name = name.strip().lower()
        if not sep or name not in keys:
            raise InvalidBoundsError(
                f"bad bounds entry {part!r}; expected a=..,d=..,nmin=..,nmax=.."
            )
        try:
            out[keys[name]] = int(value.strip())
        except ValueError:
            raise InvalidBoundsError(f"bounds entry {part!r} is not an integer") from None
    return out


@dataclass(frozen=True)
class _Tables:
    profiles: tuple[APProfile, ...]
    ap: bytes  # pairwise sumset is an AP, by direct expansion
    kb: bytes  # ratio exists and respects the size bound, by arithmetic
    kv: object  # array('i'): the ratio itself, 0 when the diffs do not divide
    sids: object  # array('i'): interned id of the pairwise sumset
    n_sids: int


def profile_list(a_max: int, d_max: int, n_min: int, n_max: int) -> tuple[APProfile, ...]:
    return tuple(
        APProfile(a, d, n)
        for a in range(a_max + 1)
        for d in range(1, d_max + 1)
        for n in range(n_min, n_max + 1)
    )


@lru_cache(maxsize=8)
def _tables(a_max: int, d_max: int, n_min: int, n_max: int) -> _Tables:
    count = (a_max + 1) * d_max * (n_max - n_min + 1)
    if count > MAX_PROFILES:
        raise SearchTooLargeError(
            f"{count} profiles exceed the table limit of {MAX_PROFILES}; tighten the bounds"
        )
    profiles = profile_list(a_max, d_max, n_min, n_max)
    sets = [p.expand() for p in profiles]
    P = len(profiles)
    ap = bytearray(P * P)
    kb = bytearray(P * P)
    kv = array("i", bytes(4 * P * P))
    sid = array("i", bytes(4 * P * P))
    intern: dict[tuple[int, ...], int] = {}
    for i in range(P):
        pi = profiles[i]
        for j in range(i, P):
            pj = profiles[j]
            sums = tuple(sorted({x + y for x in sets[i] for y in sets[j]}))
            gap = sums[1] - sums[0]
            is_ap = all(sums[t + 1] - sums[t] == gap for t in range(1, len(sums) - 1))
            s = intern.setdefault(sums, len(intern))
            if pi.diff <= pj.diff:
                d_low, d_high, low_len = pi.diff, pj.diff, pi.length
            else:
                d_low, d_high, low_len = pj.diff, pi.diff, pj.length
            k = d_high // d_low if d_high % d_low == 0 else 0
            within = k != 0 and k <= low_len
            for cell in (i * P + j, j * P + i):
                ap[cell] = is_ap
                kb[cell] = within
                kv[cell] = k
                sid[cell] = s
    return _Tables(profiles, bytes(ap), bytes(kb), kv, sid, len(intern))


@dataclass(frozen=True)
class _GraphArrays:
    names: tuple[str, ...]
    lower_ptr: object  # array('i'), CSR offsets of the lower-neighbor lists
    lower_nbr: object  # array('i'), neighbors with smaller index, ascending
    edges_u: object  # array('i'), edge endpoints with u < v
    edges_v: object


def _graph_arrays(g: Graph) -> _GraphArrays:
    names = tuple(g.sorted_vertices())
    index = {v: i for i, v in enumerate(names)}
    lower: list[list[int]] = [[] for _ in names]
    eu: list[int] = []
    ev: list[int] = []
    for a, b in g.sorted_edges():
        u, v = sorted((index[a], index[b]))
        lower[v].append(u)
        eu.append(u)
        ev.append(v)
    ptr = array("i", [0])
    flat = array("i")
    for nbrs in lower:
        flat.extend(sorted(nbrs))
        ptr.append(len(flat))
    return _GraphArrays(names, ptr, flat, array("i", eu), array("i", ev))


def _class_config(tables: _Tables, klass: str) -> tuple[bytes, bool, int, bytes]:
    """Returns (allow, track_identical, final_mode, check) for a verdict class."""
    P = len(tables.profiles)
    kv = tables.kv
    if klass == ISOARITHMETIC:
        allow = bytes(1 if kv[c] == 1 else 0 for c in range(P * P))
        return allow, False, backend.FINAL_NONE, b""
    if klass == IDENTICAL_BIARITHMETIC:
        allow = bytes(1 if tables.kb[c] and kv[c] >= 2 else 0 for c in range(P * P))
        return allow, True, backend.FINAL_NONE, b""
    if klass == BIARITHMETIC:
        allow = bytes(1 if tables.kb[c] and kv[c] >= 2 else 0 for c in range(P * P))
        return allow, False, backend.FINAL_K_NOT_ALL_EQUAL, b""
    if klass == ARITHMETIC_MIXED:
        return tables.kb, False, backend.FINAL_K_MIXED, b""
    if klass == SEMI_ARITHMETIC:
        return bytes(P * P).replace(b"\x00", b"\x01"), False, backend.FINAL_EXISTS_FAIL, tables.ap
    raise InvalidBoundsError(f"cannot search for class {klass!r}")


def _require_searchable(g: Graph, vertex_cap: int) -> None:
    if len(g.vertices) > vertex_cap:
        raise SearchTooLargeError(
            f"graph has {len(g.vertices)} vertices, above the cap of {vertex_cap}"
        )
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(
            f"vertex {isolated[0]!r} has no edges, so no labeling can be classified"
        )


def _labeling_from(g: Graph, tables: _Tables, arrays: _GraphArrays, assignment) -> Labeling:
    values = {
        arrays.names[i]: tables.profiles[p].expand() for i, p in enumerate(assignment)
    }
    return Labeling.make(g, values)


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one exhaustive scan.

    ``exhausted`` is True only when every assignment in the space was visited;
    a successful first-witness search stops early, so ``found`` implies
    ``exhausted`` is False.
    """

    found: bool
    exhausted: bool
    space_size: int
    witness: Optional[Labeling]
    witness_verdict: Optional[str]


def search_labeling(
    g: Graph,
    bounds: SearchBounds,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> SearchOutcome:
    """Scans for the lexicographically least labeling in the requested class."""
    if not g.vertices:
        return SearchOutcome(False, True, 1, None, None)
    _require_searchable(g, vertex_cap)
    tables = _tables(bounds.a_max, bounds.d_max, bounds.n_min, bounds.n_max)
    arrays = _graph_arrays(g)
    allow, track, final_mode, check = _class_config(tables, bounds.effective_class)
    res = backend.enumerate_labelings(
        len(arrays.names),
        arrays.lower_ptr,
        arrays.lower_nbr,
        arrays.edges_u,
        arrays.edges_v,
        len(tables.profiles),
        allow,
        tables.kv,
        tables.sids,
        tables.n_sids,
        track,
        final_mode,
        check,
        backend.RUN_FIRST,
        0,
    )
    space = len(tables.profiles) ** len(arrays.names)
    if res["first"] is None:
        return SearchOutcome(False, True, space, None, None)
    witness = _labeling_from(g, tables, arrays, res["first"])
    return SearchOutcome(True, False, space, witness, classify(g, witness).verdict)


@dataclass(frozen=True)
class ClassCount:
    """Census of one scan: candidates surviving pruning, and matches."""

    space_size: int
    n_scanned: int
    n_matched: int


def count_labelings(
    g: Graph,
    bounds: SearchBounds,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> ClassCount:
    """Counts every labeling of the requested class within the bounds."""
    if not g.vertices:
        return ClassCount(1, 0, 0)
    _require_searchable(g, vertex_cap)
    tables = _tables(bounds.a_max, bounds.d_max, bounds.n_min, bounds.n_max)
    arrays = _graph_arrays(g)
    allow, track, final_mode, check = _class_config(tables, bounds.effective_class)
    res = backend.enumerate_labelings(
        len(arrays.names),
        arrays.lower_ptr,
        arrays.lower_nbr,
        arrays.edges_u,
        arrays.edges_v,
        len(tables.profiles),
        allow,
        tables.kv,
        tables.sids,
        tables.n_sids,
        track,
        final_mode,
        check,
        backend.RUN_COUNT,
        0,
    )
    space = len(tables.profiles) ** len(arrays.names)
    return ClassCount(space, res["n_complete"], res["n_pass"])


def collect_witnesses(
    g: Graph,
    bounds: SearchBounds,
    limit: int = 0,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> tuple[list[Labeling], bool]:
    """Gathers class witnesses in scan order; returns (witnesses, truncated).

    ``limit=0`` collects everything, which certifies the list is complete.
    """
    if not g.vertices:
        return [], False
    _require_searchable(g, vertex_cap)
    tables = _tables(bounds.a_max, bounds.d_max, bounds.n_min, bounds.n_max)
    arrays = _graph_arrays(g)
    allow, track, final_mode, check = _class_config(tables, bounds.effective_class)
    res = backend.enumerate_labelings(
        len(arrays.names),
        arrays.lower_ptr,
        arrays.lower_nbr,
        arrays.edges_u,
        arrays.edges_v,
        len(tables.profiles),
        allow,
        tables.kv,
        tables.sids,
        tables.n_sids,
        track,
        final_mode,
        check,
        backend.RUN_COLLECT,
        limit,
    )
    labelings = [_labeling_from(g, tables, arrays, w) for w in res["witnesses"]]
    return labelings, res["truncated"]


@dataclass(frozen=True)
class AgreementReport:
    """Two full scans of the same space, pruned by opposite routes.

    The first scan keeps labelings whose edges all pass the ratio test and
    then checks every edge sumset is an AP by direct expansion; the second
    swaps the roles. Perfect agreement means the two edge conditions held for
    exactly the same labelings.
    """

    space_size: int
    n_ratio_scanned: int
    n_ratio_all_ap: int
    n_ap_scanned: int
    n_ap_all_ratio: int
    mismatch: Optional[Labeling]

    @property
    def agree(self) -> bool:
        return (
            self.mismatch is None
            and self.n_ratio_scanned == self.n_ratio_all_ap
            and self.n_ap_scanned == self.n_ap_all_ratio
            and self.n_ratio_scanned == self.n_ap_scanned
        )


def edge_condition_agreement(
    g: Graph,
    a_max: int = DEFAULT_A_MAX,
    d_max: int = DEFAULT_D_MAX,
    n_min: int = DEFAULT_N_MIN,
    n_max: int = DEFAULT_N_MAX,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> AgreementReport:
    """Cross-checks the ratio test against direct AP expansion on every edge.

    Both scans run over all injective assignments of admissible profiles with
    injective edge sumsets, so each counts genuine labelings of ``g``.
    """
    _require_searchable(g, vertex_cap)
    tables = _tables(a_max, d_max, n_min, n_max)
    arrays = _graph_arrays(g)

    def scan(allow: bytes, check: bytes) -> dict:
        return backend.enumerate_labelings(
            len(arrays.names),
            arrays.lower_ptr,
            arrays.lower_nbr,
            arrays.edges_u,
            arrays.edges_v,
            len(tables.profiles),
            allow,
            tables.kv,
            tables.sids,
            tables.n_sids,
            False,
            backend.FINAL_ALL,
            check,
            backend.RUN_COUNT,
            0,
        )

    by_ratio = scan(tables.kb, tables.ap)
    by_ap = scan(tables.ap, tables.kb)
    bad = by_ratio["first_fail"] or by_ap["first_fail"]
    mismatch = _labeling_from(g, tables, arrays, bad) if bad is not None else None
    return AgreementReport(
        len(tables.profiles) ** len(arrays.names),
        by_ratio["n_complete"],
        by_ratio["n_pass"],
        by_ap["n_complete"],
        by_ap["n_pass"],
        mismatch,
    )
