import os
import subprocess
import sys

import numpy as np
import pytest

from forestsym import _kernels
from forestsym.graphs import enumerate_hessenberg, graph_of

needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba unavailable")


@needs_numba
@pytest.mark.parametrize("n", range(1, 6))
def test_backend_parity(n):
    for m in enumerate_hessenberg(n):
        e = graph_of(m).edges
        for proper in (True, False):
            a = _kernels.coloring_histogram(n, e, proper, "numba")
            b = _kernels.coloring_histogram(n, e, proper, "numpy")
            assert np.array_equal(a, b)
        assert np.array_equal(
            _kernels.orientation_histogram(n, e, "numba"), _kernels.orientation_histogram(n, e, "numpy")
        )


def test_totals():
    e = graph_of(enumerate_hessenberg(4)[-1]).edges
    counts = _kernels.coloring_histogram(4, e, False)
    # content must be a partition, so only weakly decreasing multiplicities count
    assert counts.sum() > 0
    assert _kernels.orientation_histogram(4, e).sum() == 2 ** len(e)


def test_env_flag_selects_numpy():
    env = dict(os.environ, FORESTSYM_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from forestsym import _kernels; print(_kernels.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "numpy"
