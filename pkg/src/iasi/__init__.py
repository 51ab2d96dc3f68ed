"""Integer-additive set-indexer labelings with arithmetic structure.

A vertex labeling by finite sets of non-negative integers induces a sumset
label on every edge; when both labelings are injective the graph carries an
integer-additive set-indexer. This package classifies such labelings by the
arithmetic shape of the labels, carries them across the classical graph
operations (line graph, total graph, subdivision, contraction, topological
reduction), constructs labelings of a requested class, and settles existence
questions by exhaustive bounded search with exhaustion certificates.
"""

from .backend import BACKEND
from .errors import (
    ConstructionFailedError,
    EmptyLineGraphError,
    GraphConstructionError,
    IasiError,
    InputFormatError,
    IntOverflowError,
    InvalidBoundsError,
    InvalidSetError,
    IsolatedVertexError,
    NoKFactorError,
    NotAdmissibleError,
    NotApplicableError,
    NotAPathError,
    PartialLabelingError,
    ReductionNotApplicableError,
    SearchTooLargeError,
    TransferCollisionError,
    UnknownEdgeError,
    UnknownTheoremError,
    UnknownVertexError,
)
from .graphs import (
    Graph,
    StructuralPredicates,
    canon_edge,
    complete_graph,
    contract_edge,
    cycle_graph,
    edge_name,
    line_graph,
    named_graph,
    path_graph,
    star_graph,
    structural_predicates,
    subdivide,
    topological_reduce,
    total_graph,
)
from .intsets import (
    MIN_ADMISSIBLE_LEN,
    APProfile,
    IntSet,
    admissible_profile,
    ap_profile,
    deterministic_index,
    is_ap,
    make_intset,
    set_indexing_number,
    sumset,
)
from .labelings import (
    ARITHMETIC_FAMILY,
    ARITHMETIC_MIXED,
    BIARITHMETIC,
    IASI_NON_AP,
    IDENTICAL_BIARITHMETIC,
    ISOARITHMETIC,
    NOT_IASI,
    SEMI_ARITHMETIC,
    VERDICTS,
    ClassReport,
    EdgeReport,
    InjectivityReport,
    KFactor,
    Labeling,
    classify,
    edge_k_factor,
    induced_edge_label,
    is_l_uniform,
    restrict,
    verify_iasi,
)
from .search import (
    SEARCHABLE_CLASSES,
    AgreementReport,
    ClassCount,
    SearchBounds,
    SearchOutcome,
    collect_witnesses,
    count_labelings,
    edge_condition_agreement,
    parse_bounds_text,
    search_labeling,
)
from .theorems import (
    SEMI_CORPUS,
    THEOREM_IDS,
    InstanceResult,
    TheoremReport,
    semi_corpus_labeling,
    verify_theorem,
)
from .transfer import (
    TRANSFERABLE,
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

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
