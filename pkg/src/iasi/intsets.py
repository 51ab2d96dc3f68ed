"""Finite sets of non-negative integers, sumset arithmetic, and
arithmetic-progression profiles.

These are the label values: a vertex carries an ``IntSet`` and every edge gets
the sumset of its endpoint labels. An ``APProfile`` is the canonical
``(first, diff, length)`` form of a label whose elements are in arithmetic
progression; its ``diff`` is the common difference the classifier reasons
about.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import IntOverflowError, InvalidSetError, NotAdmissibleError

#: Hard ceiling for label elements and sums (64-bit unsigned).
MAX_ELEMENT = 2**64 - 1

#: Smallest label size admissible on a vertex.
MIN_ADMISSIBLE_LEN = 3


@dataclass(frozen=True, order=True)
class IntSet:
    """Immutable, sorted, duplicate-free set of non-negative integers.

    Construct through :func:`make_intset`, which validates and normalises.
    """

    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, value: int) -> bool:
        return value in self.elements

    def __add__(self, other: "IntSet") -> "IntSet":
        return sumset(self, other)

    def __repr__(self) -> str:
        return "{%s}" % ", ".join(str(e) for e in self.elements)


@dataclass(frozen=True)
class APProfile:
    """Canonical form of an arithmetic-progression set.

    ``expand()`` reproduces the source set exactly:
    ``{first + i * diff : 0 <= i < length}``.
    """

    first: int
    diff: int
    length: int

    def __post_init__(self) -> None:
        if self.first < 0 or self.diff < 1 or self.length < 1:
            raise InvalidSetError(
                f"bad profile (first={self.first}, diff={self.diff}, length={self.length})"
            )

    def expand(self) -> IntSet:
        return make_intset(self.first + i * self.diff for i in range(self.length))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.first, self.diff, self.length)


def make_intset(values: Iterable[int]) -> IntSet:
    """Build an :class:`IntSet` from any iterable of non-negative integers.

    Deduplicates and sorts. Empty input, negative values, non-integers, and
    values above the 64-bit range are rejected.
    """
    checked = []
    for e in values:
        if not isinstance(e, int) or isinstance(e, bool):
            raise InvalidSetError(f"label element {e!r} is not an integer")
        if e < 0:
            raise InvalidSetError(f"label element {e} is negative")
        if e > MAX_ELEMENT:
            raise IntOverflowError(f"label element {e} exceeds 64-bit range")
        checked.append(e)
    if not checked:
        raise InvalidSetError("label set must be non-empty")
    return IntSet(tuple(sorted(set(checked))))


def sumset(a: IntSet, b: IntSet) -> IntSet:
    """Pairwise-sum set ``{x + y : x in a, y in b}``."""
    if a.elements[-1] + b.elements[-1] > MAX_ELEMENT:
        raise IntOverflowError(
            f"sum {a.elements[-1]} + {b.elements[-1]} exceeds 64-bit range"
        )
    return IntSet(tuple(sorted({x + y for x in a.elements for y in b.elements})))


def ap_profile(s: IntSet) -> Optional[APProfile]:
    """Return the AP profile of ``s``, or ``None`` if its gaps are unequal.

    Singletons use the convention ``diff=1`` so the function is total on
    valid sets; that convention never reaches classification because
    singletons are below the admissible vertex-label size.
    """
    elems = s.elements
    if len(elems) == 1:
        return APProfile(elems[0], 1, 1)
    diff = elems[1] - elems[0]
    for i in range(2, len(elems)):
        if elems[i] - elems[i - 1] != diff:
            return None
    return APProfile(elems[0], diff, len(elems))


def is_ap(s: IntSet) -> bool:
    """True when the elements of ``s`` form an arithmetic progression."""
    return ap_profile(s) is not None


def admissible_profile(s: IntSet) -> Optional[APProfile]:
    """AP profile when ``s`` is admissible as a vertex label, else ``None``.

    Admissible means: an AP-set with at least three elements.
    """
    p = ap_profile(s)
    if p is None or p.length < MIN_ADMISSIBLE_LEN:
        return None
    return p


def deterministic_index(s: IntSet) -> int:
    """Common difference of an admissible AP-set label."""
    p = admissible_profile(s)
    if p is None:
        raise NotAdmissibleError(
            f"{s!r} is not an AP-set of at least {MIN_ADMISSIBLE_LEN} elements"
        )
    return p.diff


def set_indexing_number(s: IntSet) -> int:
    """Cardinality of a label set."""
    return len(s)
