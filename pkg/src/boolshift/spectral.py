"""Support sets of t-fold spectra, the sumset expansion law, and the
rejection-sampling probability window.

S_t = {w : Fhat^(t)(w) != 0} obeys S_{t+1} = S_t + S_1 (XOR sumset).  When
S_1 is not confined to a coset of a hyperplane (equivalently, f has no
nonzero b-shift of either kind) the support fills up within t <= n steps;
when it is confined, every S_t stays inside a coset of that hyperplane
(w . s constant on S_1 forces w . s = t * const on S_t), so full support
is never reached.  Membership is always decided with the exact integer
zero test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .boolfn import BooleanFunction
from .fourier import _wht_ints, tfold_sq_numerators
from .pgm import success_probability
from .shifts import gf2_rank

_I64_SAFE_BITS = 62


class SupportSet:
    """Subset of Z_2^n as a boolean mask over integer indices."""

    __slots__ = ("n", "t", "mask")

    def __init__(self, n: int, mask: np.ndarray, t: int | None = None):
        if mask.size != 1 << n:
            raise ValueError(f"mask has {mask.size} entries, expected {1 << n}")
        self.n = n
        self.t = t
        self.mask = mask.astype(bool)
        self.mask.setflags(write=False)

    @property
    def size(self) -> int:
        return int(self.mask.sum())

    def members(self) -> list[int]:
        return [int(w) for w in np.flatnonzero(self.mask)]

    def __contains__(self, w: int) -> bool:
        return bool(self.mask[w])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SupportSet):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.mask, other.mask))

    def __hash__(self):
        return hash((self.n, self.mask.tobytes()))

    def __repr__(self) -> str:
        return f"SupportSet(n={self.n}, t={self.t}, size={self.size})"


def support_from_members(n: int, members) -> SupportSet:
    mask = np.zeros(1 << n, dtype=bool)
    for w in members:
        mask[w] = True
    return SupportSet(n, mask)


def support(f: BooleanFunction, t: int) -> SupportSet:
    """S_t via the exact integer zero test of the t-fold spectrum."""
    nums = tfold_sq_numerators(f, t)
    mask = np.array([int(c) != 0 for c in nums])
    return SupportSet(f.n, mask, t)


def sumset(a: SupportSet, b: SupportSet) -> SupportSet:
    """XOR sumset {x ^ y : x in a, y in b}, via indicator convolution.

    The convolution counts representations exactly (integers), so the
    resulting membership is exact.
    """
    if a.n != b.n:
        raise ValueError(f"size mismatch: n={a.n} vs n={b.n}")
    t = a.t + b.t if (a.t is not None and b.t is not None) else None
    return SupportSet(a.n, _sumset_mask(a.n, a.mask, b.mask), t)


def _sumset_mask(n: int, mask_a: np.ndarray, mask_b: np.ndarray) -> np.ndarray:
    size = 1 << n
    if 3 * n <= _I64_SAFE_BITS:
        ta = backend.wht_rows_i64(mask_a.astype(np.int64)[None, :])[0]
        tb = backend.wht_rows_i64(mask_b.astype(np.int64)[None, :])[0]
        counts = backend.wht_rows_i64((ta * tb)[None, :])[0] // size
        return counts > 0
    ta = _wht_ints(mask_a.astype(int))
    tb = _wht_ints(mask_b.astype(int))
    counts = _wht_ints([x * y for x, y in zip(ta, tb)])
    return np.array([c // size > 0 for c in counts])


def minimal_full_support_t(f: BooleanFunction) -> int | None:
    """Smallest t with S_t equal to all of Z_2^n, or None.

    None is returned exactly when S_1 is confined to a coset of a
    hyperplane, i.e. when the differences of S_1 members span a proper
    subspace; by the coset-confinement lemma this happens iff f has a
    nonzero b-shift (an undetectable shift pins S_1 inside a hyperplane,
    an anti-shift inside its complement coset, and either way the sumset
    iteration can never fill the space).  Otherwise every target needs at
    most n difference-basis summands, so full support arrives by t = n
    (asserted).
    """
    s1 = support(f, 1)
    members = s1.members()
    w0 = members[0]
    if gf2_rank([w ^ w0 for w in members]) < f.n:
        return None
    mask = s1.mask
    t = 1
    while not mask.all():
        if t >= f.n:
            raise AssertionError(
                "support did not fill within n sumset steps despite no confinement"
            )
        mask = _sumset_mask(f.n, mask, s1.mask)
        t += 1
    return t


@dataclass(frozen=True)
class QrsParams:
    n: int
    t: int
    p_min: float
    p_max: float


def qrs_params(f: BooleanFunction, t: int) -> QrsParams:
    """Achievable success-probability window for rejection sampling with
    t parallel queries: p_min = (2^{-n/2} sum_w Fhat^(t)(w))^2 and
    p_max = |S_t| / 2^n.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    p_min = success_probability(f, t)
    p_max = support(f, t).size / (1 << f.n)
    return QrsParams(f.n, t, p_min, p_max)
