import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from boolshift import backend


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # trigger JIT compilation once so timed tests measure the computation
    backend.wht_rows_f64(np.zeros((1, 4)))
    backend.wht_rows_i64(np.zeros((1, 4), dtype=np.int64))
    backend.success_probs(np.ones((1, 4)), 2)
    backend.distinguishing_sweep(2, 2)


try:
    from hypothesis import settings

    settings.register_profile("suite", max_examples=50, deadline=None)
    settings.load_profile("suite")
except ImportError:
    pass
