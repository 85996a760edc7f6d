import numpy as np
import pytest

from divmat import generate, kernels
from divmat.concavity import _MODES, _Table


@pytest.mark.skipif(kernels.compiled_scan is None, reason="compiled kernel not built")
@pytest.mark.parametrize("seed", range(150))
def test_compiled_and_python_scans_agree(seed):
    f = generate.random_tabular(seed, max_value=4)
    t = _Table(f, 4096)
    for prop, (mode, enc) in _MODES.items():
        vals = t.ranks() if enc == "ranks" else t.scaled()
        a = kernels.compiled_scan(mode, t.coords, t.lin, t.pos, vals, t.strides)
        b = kernels.python_scan(mode, t.coords, t.lin, t.pos, vals, t.strides)
        assert a == b, prop


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")


def test_huge_values_use_python_ints():
    coords = np.array([[0], [1], [2]], dtype=np.int64)
    lin = np.array([0, 1, 2], dtype=np.int64)
    pos = np.array([0, 1, 2], dtype=np.int64)
    vals = [0, 3 * 10 ** 30, 10 ** 31]
    hit = kernels.scan(kernels.MNAT, coords, lin, pos, vals, np.array([1], dtype=np.int64))
    assert hit == (2, 0, 0)


def test_environment_forces_python_fallback():
    import os
    import subprocess
    import sys
    code = ("import divmat; from divmat import catalog; from divmat.concavity import "
            "check_pseudo_mnat; print(divmat.BACKEND, "
            "check_pseudo_mnat(catalog.claim2_counterexample()[1]).holds)")
    env = dict(os.environ, DIVMAT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    assert out == ["python", "False"]
