"""Backend selection for the exchange scan.

The compiled extension is used when it was built; setting
``DIVMAT_PURE_PYTHON=1`` forces the pure-Python implementation.
"""
import os

from . import _exchange_py

ORDINAL = _exchange_py.ORDINAL
MNAT = _exchange_py.MNAT
M = _exchange_py.M
PSEUDO = _exchange_py.PSEUDO
PSEUDO_PLUS = _exchange_py.PSEUDO_PLUS
SEMISTRICT = _exchange_py.SEMISTRICT

python_scan = _exchange_py.scan

try:
    from ._exchange import scan as compiled_scan
except ImportError:  # extension not built
    compiled_scan = None

if compiled_scan is not None and not os.environ.get("DIVMAT_PURE_PYTHON"):
    BACKEND = "cython"
    _default = compiled_scan
else:
    BACKEND = "python"
    _default = python_scan

INT64_SAFE = 2 ** 61


def scan(mode, coords, lin, pos, vals, strides):
    """Dispatch to the active backend; huge values always go to Python ints."""
    if _default is compiled_scan and vals and max(abs(v) for v in vals) < INT64_SAFE:
        return compiled_scan(mode, coords, lin, pos, vals, strides)
    return python_scan(mode, coords, lin, pos, vals, strides)
