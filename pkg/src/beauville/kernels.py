"""Kernel backend selection.

The enumeration kernels exist twice: a compiled Cython extension
(_kernels_c) and a pure-Python fallback (_kernels_py) with identical
signatures.  The extension is used when it imported cleanly and the
BEAUVILLE_NO_EXT environment variable is unset; benchmarks/bench_kernels.py
compares the two lanes on the same workload.
"""

from __future__ import annotations

import os

from . import _kernels_py

_impl = _kernels_py
if not os.environ.get("BEAUVILLE_NO_EXT"):
    try:
        from . import _kernels_c as _ext  # type: ignore[attr-defined]

        _impl = _ext
    except ImportError:
        pass

BACKEND: str = _impl.BACKEND

closure_mul = _impl.closure_mul
conj_closure = _impl.conj_closure
square_coset_sweep = _impl.square_coset_sweep
mul_index = _impl.mul_index
inv_index = _impl.inv_index
mask_intersection = _kernels_py.mask_intersection


def backend_name() -> str:
    return BACKEND
