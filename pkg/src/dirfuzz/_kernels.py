"""Backend selection for the hot loops.

The compiled extension is used when it imports and the automaton has at
most 64 states; otherwise the pure-Python module runs.  Setting
``DIRFUZZ_PURE_PYTHON=1`` forces the fallback at import time.
"""

import os
from contextlib import contextmanager

from dirfuzz import _pykernels

try:
    from dirfuzz import _ckernels
except ImportError:  # extension not built
    _ckernels = None

if os.environ.get("DIRFUZZ_PURE_PYTHON"):
    _ckernels = None

_active = _ckernels


def available_backends():
    return ["python"] + (["cython"] if _ckernels is not None else [])


def backend():
    return "cython" if _active is not None else "python"


@contextmanager
def use_backend(name):
    """Temporarily force ``"python"`` or ``"cython"``."""
    global _active
    if name == "cython" and _ckernels is None:
        raise RuntimeError("compiled kernels are not available")
    if name not in ("python", "cython"):
        raise ValueError(f"unknown backend: {name}")
    saved = _active
    _active = _ckernels if name == "cython" else None
    try:
        yield
    finally:
        _active = saved


def _pick(n):
    if _active is not None and n <= _ckernels.MAX_STATES:
        return _active
    return _pykernels


def image(row, bits):
    return _pick(len(row)).image(row, bits)


def maxmin_step(vec, table_x):
    return _pick(len(vec)).maxmin_step(vec, table_x)


def is_final(config, mode):
    return _pick(len(config)).is_final(config, mode)


def explore(rows, initial, mode, cap, stop_at_final=False):
    return _pick(len(initial)).explore(rows, initial, mode, cap, stop_at_final)


def merge_worklist(inv, n):
    return _pick(n).merge_worklist(inv, n)
