"""Exception hierarchy. Every error carries a stable machine-readable code
string that the CLI surfaces in its error JSON."""

from __future__ import annotations


class IasiError(Exception):
    """Base class for all domain errors."""

    code = "error"


class InvalidSetError(IasiError):
    code = "invalid-set"


class IntOverflowError(IasiError):
    """A label element or sum exceeds the 64-bit unsigned range."""

    code = "overflow"


class NotAdmissibleError(IasiError):
    """Label is not an arithmetic-progression set of at least three elements."""

    code = "not-admissible-label"


class GraphConstructionError(IasiError):
    code = "invalid-graph"


class UnknownVertexError(IasiError):
    code = "unknown-vertex"


class UnknownEdgeError(IasiError):
    code = "unknown-edge"


class EmptyLineGraphError(IasiError):
    code = "empty-line-graph"


class ReductionNotApplicableError(IasiError):
    code = "reduction-not-applicable"


class IsolatedVertexError(IasiError):
    code = "isolated-vertex"


class PartialLabelingError(IasiError):
    code = "partial-labeling"


class NoKFactorError(IasiError):
    """Neither endpoint's common difference divides the other's."""

    code = "no-k-factor"


class TransferCollisionError(IasiError):
    """A labeling transfer broke injectivity; reported, never repaired."""

    code = "transfer-collision"


class ConstructionFailedError(IasiError):
    code = "construction-failed"


class NotApplicableError(IasiError):
    code = "not-applicable"


class NotAPathError(IasiError):
    code = "not-a-path"


class InvalidBoundsError(IasiError):
    code = "invalid-bounds"


class SearchTooLargeError(IasiError):
    code = "search-too-large"


class UnknownTheoremError(IasiError):
    code = "unknown-theorem"


class InputFormatError(IasiError):
    """Unparseable graph/labeling input."""

    code = "malformed-input"
