"""Query-count calculators and the distinguishing-index-set construction.

Bounds are reported as a leading numeric term plus a note for any
additive term whose constant is not pinned down; no invented constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import backend


def distinguishing_index_set(strings) -> list[int]:
    """Positions (0-based) on which the given distinct strings stay
    pairwise distinct; at most len(strings) - 1 of them.

    Inductive construction: strings are added one at a time; a new string
    can collide with at most one previous string on the current set, and
    the lowest position where the two differ is then added.
    """
    items = list(strings)
    if len(items) < 2:
        raise ValueError(f"need at least 2 strings, got {len(items)}")
    length = len(items[0])
    for s in items:
        if len(s) != length:
            raise ValueError("strings must have equal length")
        if set(s) - {"0", "1"}:
            raise ValueError(f"strings must be over '0'/'1', got {s!r}")
    if len(set(items)) != len(items):
        raise ValueError("input strings must be pairwise distinct")
    chosen: set[int] = set()
    for m in range(1, len(items)):
        colliders = [
            j
            for j in range(m)
            if all(items[j][i] == items[m][i] for i in chosen)
        ]
        if not colliders:
            continue
        if len(colliders) > 1:
            raise AssertionError(
                "more than one collision: earlier strings not distinct on the set"
            )
        other = items[colliders[0]]
        lowest = next(i for i in range(length) if other[i] != items[m][i])
        chosen.add(lowest)
    return sorted(chosen)


@dataclass(frozen=True)
class SweepResult:
    cases: int
    oversize: int
    non_injective: int

    @property
    def ok(self) -> bool:
        return self.oversize == 0 and self.non_injective == 0


def distinguishing_sweep(nbits: int, k: int) -> SweepResult:
    """Exhaustively run the construction on every sorted k-subset of the
    length-nbits strings and count violations of either guarantee.
    """
    if not 1 <= nbits <= 20:
        raise ValueError(f"nbits must be in 1..20, got {nbits}")
    if not 2 <= k <= (1 << nbits):
        raise ValueError(f"k must be in 2..2^nbits, got {k}")
    cases, oversize, non_injective = backend.distinguishing_sweep(nbits, k)
    return SweepResult(cases, oversize, non_injective)


def grover_upper_bound(n: int, weight: int) -> tuple[float, str]:
    """Leading query count (pi/4) sqrt(2^n / weight) for locating an input
    where the function is 1, followed by identification among at most
    `weight` shift candidates.

    Valid for 1 <= weight <= 2^{n-1}; the identification stage adds an
    O(sqrt(weight)) term whose constant is left symbolic in the note.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= weight <= (1 << (n - 1)):
        raise ValueError(
            f"weight must be in 1..2^(n-1) = {1 << (n - 1)}, got {weight}"
        )
    leading = (math.pi / 4.0) * math.sqrt((1 << n) / weight)
    return leading, f"plus O(sqrt({weight})) identification overhead (constant unspecified)"


def search_lower_bound(n: int, weight: int) -> float:
    """Scale sqrt(2^n / weight) of the adversary lower bound for functions
    with no undetectable shifts; the Omega(.) constant is unspecified and
    only the leading scale is reported.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if weight < 1:
        raise ValueError(f"weight must be >= 1, got {weight}")
    return math.sqrt((1 << n) / weight)
