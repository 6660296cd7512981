"""Pure-NumPy implementations of the hot kernels.

These are the fallback path selected by ``BOOLSHIFT_BACKEND=numpy`` (or
when numba is not installed); see :mod:`boolshift.backend`.  The numba
implementations in ``_kernels_numba`` perform the same operations in the
same order, so integer results are bitwise identical and float results
agree to rounding.
"""

from __future__ import annotations

import itertools

import numpy as np


def wht_rows_f64(mat: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard butterfly applied to each row.

    ``mat`` has shape (rows, N) with N a power of two.  Returns a new
    float64 array with ``out[r, w] = sum_x (-1)^{popcount(w & x)} mat[r, x]``.
    """
    out = np.array(mat, dtype=np.float64, copy=True)
    _butterfly(out)
    return out


def wht_rows_i64(mat: np.ndarray) -> np.ndarray:
    """Exact integer butterfly; caller must ensure values stay below 2^63."""
    out = np.array(mat, dtype=np.int64, copy=True)
    _butterfly(out)
    return out


def _butterfly(out: np.ndarray) -> None:
    rows, size = out.shape
    h = 1
    while h < size:
        v = out.reshape(rows, size // (2 * h), 2, h)
        top = v[:, :, 0, :].copy()
        bot = v[:, :, 1, :].copy()
        v[:, :, 0, :] = top + bot
        v[:, :, 1, :] = top - bot
        h *= 2


def success_probs(signs: np.ndarray, t: int) -> np.ndarray:
    """Measurement success probability for each row of phase values.

    ``signs`` has shape (rows, N) holding (-1)^{f(x)} as float64.  For each
    row the t-fold squared spectrum is formed through the transform route
    and the result is (sum_w of its square roots)^2 / N.
    """
    rows, size = signs.shape
    u = wht_rows_f64(signs) / size
    ac = wht_rows_f64(u * u)
    conv = wht_rows_f64(ac**t) / size
    np.clip(conv, 0.0, None, out=conv)
    total = np.sqrt(conv).sum(axis=1)
    return total * total / size


def distinguishing_sweep(nbits: int, k: int) -> tuple[int, int, int]:
    """Run the greedy index-set construction on every sorted k-subset of
    the 2^nbits bit strings of length nbits.

    Returns (cases, oversize, non_injective): the number of subsets
    processed, how many produced an index set larger than k-1, and how
    many left two strings equal on the chosen indices.  Vectorized in
    lockstep across all subsets.
    """
    total = 1 << nbits
    combos = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(total), k)),
        dtype=np.int64,
    ).reshape(-1, k)
    cases = combos.shape[0]
    masks = np.zeros(cases, dtype=np.int64)
    for m in range(1, k):
        new = combos[:, m : m + 1]
        agree = ((combos[:, :m] ^ new) & masks[:, None]) == 0
        hit = agree.any(axis=1)
        j = np.argmax(agree, axis=1)
        diff = (combos[np.arange(cases), j] ^ combos[:, m]) & -(
            combos[np.arange(cases), j] ^ combos[:, m]
        )
        masks = np.where(hit, masks | diff, masks)
    sizes = np.zeros(cases, dtype=np.int64)
    tmp = masks.copy()
    for _ in range(nbits):
        sizes += tmp & 1
        tmp >>= 1
    oversize = int((sizes > k - 1).sum())
    non_injective = 0
    for i in range(k):
        for j in range(i + 1, k):
            non_injective += int((((combos[:, i] ^ combos[:, j]) & masks) == 0).sum())
    return cases, oversize, non_injective
