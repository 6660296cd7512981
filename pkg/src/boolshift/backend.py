"""Kernel backend selection.

The hot numeric kernels (Walsh-Hadamard butterflies, batched success
probabilities, the exhaustive distinguishing-set sweep) exist twice: a
numba-compiled version and a pure-NumPy version with identical contracts.

The environment variable ``BOOLSHIFT_BACKEND`` picks the active set:

* unset      -- numba if importable, NumPy otherwise;
* ``numba``  -- require numba, raise if missing;
* ``numpy``  -- force the pure-NumPy path.

``python -m boolshift.bench`` times both paths and checks they agree.
"""

from __future__ import annotations

import os

from . import _kernels_numpy

_requested = os.environ.get("BOOLSHIFT_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"BOOLSHIFT_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

ACTIVE = "numpy"
_impl = _kernels_numpy
if _requested != "numpy":
    try:
        from . import _kernels_numba

        ACTIVE = "numba"
        _impl = _kernels_numba
    except ImportError:
        if _requested == "numba":
            raise

wht_rows_f64 = _impl.wht_rows_f64
wht_rows_i64 = _impl.wht_rows_i64
success_probs = _impl.success_probs
distinguishing_sweep = _impl.distinguishing_sweep

__all__ = [
    "ACTIVE",
    "wht_rows_f64",
    "wht_rows_i64",
    "success_probs",
    "distinguishing_sweep",
]
