"""Kernel selection: compiled extension when available, pure Python otherwise.

Set CONVEXCYCLES_PURE=1 to force the pure-Python kernels (useful for the
benchmark and for verifying parity).
"""

import os

from convexcycles import _kernels_py

if os.environ.get("CONVEXCYCLES_PURE"):
    _impl = _kernels_py
else:
    try:
        from convexcycles import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION: str = _impl.IMPLEMENTATION
count_crossings_arrays = _impl.count_crossings_arrays
edge_crossings = _impl.edge_crossings
