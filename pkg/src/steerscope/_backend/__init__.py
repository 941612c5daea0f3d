"""Backend selection for the hot per-state kernels.

The compiled Cython extension is preferred when present; the pure-numpy
module is a drop-in replacement.  Set ``STEERSCOPE_BACKEND=pure`` to force
the fallback (used by the parity tests and the benchmark).
"""
import os

from . import _pykernels

if os.environ.get("STEERSCOPE_BACKEND", "").lower() in ("pure", "python"):
    kernels = _pykernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = _pykernels


def backend_name() -> str:
    return kernels.BACKEND_NAME
