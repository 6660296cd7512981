"""Benchmark the numba kernels against the pure-NumPy fallbacks.

Run with ``python -m boolshift.bench``.  Times both implementations of
each hot kernel on representative workloads and reports the agreement
between their outputs (integer kernels must match exactly).
"""

from __future__ import annotations

import time

import numpy as np

from . import _kernels_numpy


def _time(fn, *args, repeat: int = 5):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    try:
        from . import _kernels_numba
    except ImportError:
        print("numba not available; nothing to compare against the NumPy kernels")
        return 1

    rng = np.random.default_rng(0)
    rows_f = rng.standard_normal((64, 1 << 14))
    rows_i = rng.integers(-1000, 1000, size=(256, 1 << 10)).astype(np.int64)
    signs = (1.0 - 2.0 * rng.integers(0, 2, size=(2000, 256))).astype(np.float64)

    workloads = [
        ("wht_rows_f64 (64 x 16384)", "wht_rows_f64", (rows_f,)),
        ("wht_rows_i64 (256 x 1024)", "wht_rows_i64", (rows_i,)),
        ("success_probs (2000 fn, n=8, t=2)", "success_probs", (signs, 2)),
        ("distinguishing_sweep (N=5, k=4)", "distinguishing_sweep", (5, 4)),
    ]

    print(f"{'kernel':40s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}  agreement")
    for label, name, args in workloads:
        nb_fn = getattr(_kernels_numba, name)
        np_fn = getattr(_kernels_numpy, name)
        nb_fn(*args)  # trigger compilation before timing
        t_nb, out_nb = _time(nb_fn, *args)
        t_np, out_np = _time(np_fn, *args)
        if isinstance(out_nb, tuple):
            agree = "exact" if out_nb == out_np else f"MISMATCH {out_nb} vs {out_np}"
        elif out_nb.dtype == np.int64:
            agree = "exact" if np.array_equal(out_nb, out_np) else "MISMATCH"
        else:
            diff = float(np.abs(out_nb - out_np).max())
            agree = f"max|diff|={diff:.3g}"
        print(
            f"{label:40s} {t_nb * 1e3:9.2f}ms {t_np * 1e3:9.2f}ms "
            f"{t_np / t_nb:7.2f}x  {agree}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
