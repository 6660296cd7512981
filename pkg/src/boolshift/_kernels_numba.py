"""Numba-compiled implementations of the hot kernels.

Same contracts as :mod:`boolshift._kernels_numpy`; importing this module
requires numba.  ``cache=True`` persists the compiled artifacts next to
the source so repeated runs skip compilation.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _butterfly_f64(out):
    rows, size = out.shape
    for r in range(rows):
        h = 1
        while h < size:
            for i in range(0, size, 2 * h):
                for j in range(i, i + h):
                    a = out[r, j]
                    b = out[r, j + h]
                    out[r, j] = a + b
                    out[r, j + h] = a - b
            h *= 2


@njit(cache=True)
def _butterfly_i64(out):
    rows, size = out.shape
    for r in range(rows):
        h = 1
        while h < size:
            for i in range(0, size, 2 * h):
                for j in range(i, i + h):
                    a = out[r, j]
                    b = out[r, j + h]
                    out[r, j] = a + b
                    out[r, j + h] = a - b
            h *= 2


def wht_rows_f64(mat: np.ndarray) -> np.ndarray:
    out = np.array(mat, dtype=np.float64, copy=True)
    _butterfly_f64(out)
    return out


def wht_rows_i64(mat: np.ndarray) -> np.ndarray:
    out = np.array(mat, dtype=np.int64, copy=True)
    _butterfly_i64(out)
    return out


@njit(cache=True)
def _success_probs(signs, t):
    rows, size = signs.shape
    probs = np.empty(rows, dtype=np.float64)
    buf = np.empty(size, dtype=np.float64)
    for r in range(rows):
        for i in range(size):
            buf[i] = signs[r, i]
        _row_butterfly(buf)
        for i in range(size):
            v = buf[i] / size
            buf[i] = v * v
        _row_butterfly(buf)
        for i in range(size):
            buf[i] = buf[i] ** t
        _row_butterfly(buf)
        total = 0.0
        for i in range(size):
            v = buf[i] / size
            if v > 0.0:
                total += np.sqrt(v)
        probs[r] = total * total / size
    return probs


@njit(cache=True)
def _row_butterfly(buf):
    size = buf.shape[0]
    h = 1
    while h < size:
        for i in range(0, size, 2 * h):
            for j in range(i, i + h):
                a = buf[j]
                b = buf[j + h]
                buf[j] = a + b
                buf[j + h] = a - b
        h *= 2


def success_probs(signs: np.ndarray, t: int) -> np.ndarray:
    return _success_probs(np.ascontiguousarray(signs, dtype=np.float64), t)


@njit(cache=True)
def _distinguishing_sweep(nbits, k):
    total = 1 << nbits
    idx = np.arange(k)
    strings = np.empty(k, dtype=np.int64)
    cases = 0
    oversize = 0
    non_injective = 0
    while True:
        for i in range(k):
            strings[i] = idx[i]
        mask = np.int64(0)
        for m in range(1, k):
            agree = -1
            for j in range(m):
                if (strings[j] ^ strings[m]) & mask == 0:
                    agree = j
                    break
            if agree >= 0:
                diff = strings[agree] ^ strings[m]
                mask |= diff & (-diff)
        size = 0
        tmp = mask
        while tmp:
            size += tmp & 1
            tmp >>= 1
        if size > k - 1:
            oversize += 1
        for i in range(k):
            for j in range(i + 1, k):
                if (strings[i] ^ strings[j]) & mask == 0:
                    non_injective += 1
        cases += 1
        # advance to the next sorted combination
        pos = k - 1
        while pos >= 0 and idx[pos] == total - k + pos:
            pos -= 1
        if pos < 0:
            break
        idx[pos] += 1
        for i in range(pos + 1, k):
            idx[i] = idx[i - 1] + 1
    return cases, oversize, non_injective


def distinguishing_sweep(nbits: int, k: int) -> tuple[int, int, int]:
    cases, oversize, non_injective = _distinguishing_sweep(nbits, k)
    return int(cases), int(oversize), int(non_injective)
