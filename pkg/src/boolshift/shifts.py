"""Shift structure: undetectable shifts, anti-shifts, bentness, and the
exact one-query feasibility test.

A string s is a b-shift of f when f(x XOR s) = f(x) XOR b for all x,
equivalently when the autocorrelation satisfies (F*F)(s) = (-1)^b.  The
0-shifts form a linear subspace; the anti-shifts, when present, form a
single coset of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .boolfn import BooleanFunction, dot2, hamming_weight
from .fourier import autocorr_numerators, signed_numerators


@dataclass(frozen=True)
class ShiftStructure:
    n: int
    undetectable_basis: tuple[int, ...]
    anti_shift: int | None

    def undetectable_shifts(self) -> list[int]:
        """All 2^dim elements of the 0-shift subspace."""
        span = [0]
        for b in self.undetectable_basis:
            span += [v ^ b for v in span]
        return sorted(span)

    def anti_shifts(self) -> list[int]:
        if self.anti_shift is None:
            return []
        return sorted(self.anti_shift ^ v for v in self.undetectable_shifts())


@dataclass(frozen=True)
class ExactOneQueryWitness:
    feasible: bool
    p_empty: Fraction | None
    k: int | None


def gf2_reduce(vectors) -> list[int]:
    """Reduced basis of span(vectors) over GF(2).

    Pivots on the lowest set bit; rows fully reduced against each other;
    emitted in increasing integer order (canonical for golden tests).
    """
    basis: dict[int, int] = {}
    for vec in vectors:
        cur = int(vec)
        while cur:
            pivot = cur & -cur
            if pivot in basis:
                cur ^= basis[pivot]
            else:
                basis[pivot] = cur
                break
    for p in sorted(basis):
        for q in list(basis):
            if q != p and basis[q] & p:
                basis[q] ^= basis[p]
    return sorted(basis.values())


def gf2_rank(vectors) -> int:
    return len(gf2_reduce(vectors))


def find_b_shifts(f: BooleanFunction) -> ShiftStructure:
    """Scan the exact autocorrelation for 0-shifts and anti-shifts."""
    size = 1 << f.n
    ac = autocorr_numerators(f)
    zeros = [s for s in range(1, size) if int(ac[s]) == size]
    antis = [s for s in range(size) if int(ac[s]) == -size]
    basis = gf2_reduce(zeros)
    anti = min(antis) if antis else None
    return ShiftStructure(f.n, tuple(basis), anti)


def is_bent(f: BooleanFunction) -> bool:
    """Flat-spectrum test: |Fhat(w)| = 2^{-n/2} for all w, exactly.

    Cross-checked against the autocorrelation characterization
    (F*F) = delta_0; disagreement would be an implementation bug.
    """
    size = 1 << f.n
    u = signed_numerators(f)
    by_spectrum = bool((u.astype(np.int64) ** 2 == size).all())
    ac = autocorr_numerators(f)
    by_autocorr = int(ac[0]) == size and all(int(v) == 0 for v in ac[1:])
    if by_spectrum != by_autocorr:
        raise AssertionError(
            "flat-spectrum and autocorrelation bentness tests disagree"
        )
    return by_spectrum


def exact_one_query_feasible(f: BooleanFunction) -> ExactOneQueryWitness:
    """Can the hidden shift of f be found exactly with a single query?

    Feasible iff the autocorrelation is constant -k/2^n off zero for some
    integer k >= 0 and (2^n - 2|f|)^2 = 2^n - (2^n - 1) k; the no-query
    probability is then p_empty = k / (2^n + k).  For n >= 2 this forces
    k = 0 and coincides with bentness (asserted); n = 1 admits k = 2.
    """
    size = 1 << f.n
    ac = [int(v) for v in autocorr_numerators(f)]
    off = set(ac[1:])
    feasible = False
    k = None
    if len(off) == 1:
        const = off.pop()
        if const <= 0:
            cand = -const
            weight = hamming_weight(f)
            if (size - 2 * weight) ** 2 == size - (size - 1) * cand:
                feasible = True
                k = cand
    if f.n >= 2:
        bent = is_bent(f)
        if feasible != bent or (feasible and k != 0):
            raise AssertionError(
                "one-query feasibility disagrees with bentness for n >= 2"
            )
    if not feasible:
        return ExactOneQueryWitness(False, None, None)
    return ExactOneQueryWitness(True, Fraction(k, size + k), k)


def coset_confinement_check(f: BooleanFunction) -> bool:
    """Verify, for this f, the biconditional between nonzero b-shifts and
    spectral support confined to one coset of a hyperplane.

    Direction 1: every nonzero b-shift s forces Fhat(w) = 0 whenever
    w.s != b.  Direction 2: every hyperplane coset {w : w.s = b} that
    contains the whole support certifies s as a b-shift.  A False return
    is a theorem violation, not a property of f.
    """
    size = 1 << f.n
    u = signed_numerators(f)
    support = [w for w in range(size) if int(u[w]) != 0]
    ac = autocorr_numerators(f)
    b_shifts = {}
    for s in range(1, size):
        if int(ac[s]) == size:
            b_shifts[s] = 0
        elif int(ac[s]) == -size:
            b_shifts[s] = 1
    for s, b in b_shifts.items():
        if any(dot2(w, s) != b for w in support):
            return False
    for s in range(1, size):
        for b in (0, 1):
            if all(dot2(w, s) == b for w in support):
                if b_shifts.get(s) != b:
                    return False
    return True
