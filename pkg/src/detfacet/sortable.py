"""The sorting operator on faces and sortability of face families and complexes.

A complex is sortable when sorting any two of its faces, of any sizes,
gives two faces again. Restricting to equal-size pairs is strictly weaker:
the independence complex of the claw passes it under every labelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError

__all__ = [
    "sort_pair",
    "SortabilityResult",
    "is_sortable_family",
    "is_sortable_complex",
    "sortable_by_cardinality",
]


def sort_pair(F, G, *, equal_size: bool = True) -> tuple:
    """Odd/even split of the merged multiset ``F + G``.

    With ``equal_size=False`` faces of different sizes are allowed and the
    first output takes the extra element.

    >>> sort_pair((1, 4), (2, 3))
    ((1, 3), (2, 4))
    """
    F, G = tuple(F), tuple(G)
    if equal_size and len(F) != len(G):
        raise PreconditionError(f"faces of different sizes: {F} and {G}")
    merged = sorted(F + G)
    return tuple(merged[0::2]), tuple(merged[1::2])


@dataclass(frozen=True)
class SortabilityResult:
    sortable: bool
    failing_pair: tuple | None = None  # (F, G, sorted pair)

    def __bool__(self):
        return self.sortable

    def to_json(self) -> dict:
        if self.failing_pair is None:
            return {"sortable": self.sortable, "failing_pair": None}
        F, G, (A, B) = self.failing_pair
        return {"sortable": self.sortable, "failing_pair": [list(F), list(G), [list(A), list(B)]]}


def _check_pairs(family: set, pairs) -> SortabilityResult:
    for F, G in pairs:
        A, B = sort_pair(F, G, equal_size=False)
        if A not in family or B not in family:
            return SortabilityResult(False, (F, G, (A, B)))
    return SortabilityResult(True)


def is_sortable_family(faces) -> SortabilityResult:
    """Equal-size family closed under :func:`sort_pair`; the first offending pair is reported."""
    family = {tuple(sorted(f)) for f in faces}
    sizes = {len(f) for f in family}
    if len(sizes) > 1:
        raise PreconditionError(f"mixed face sizes {sorted(sizes)}")
    return _check_pairs(family, combinations(sorted(family), 2))


def sortable_by_cardinality(faces_by_size: dict) -> dict:
    """Per-size verdicts (pairs of equal size only)."""
    return {k: is_sortable_family(v) for k, v in sorted(faces_by_size.items())}


def is_sortable_complex(faces_by_size: dict) -> SortabilityResult:
    """Every pair of faces, of any sizes, sorts into two faces."""
    family = set()
    for k, faces in faces_by_size.items():
        for f in faces:
            f = tuple(sorted(f))
            if len(f) != k:
                raise PreconditionError(f"face {f} filed under size {k}")
            family.add(f)
    return _check_pairs(family, combinations(sorted(family, key=lambda f: (len(f), f)), 2))
