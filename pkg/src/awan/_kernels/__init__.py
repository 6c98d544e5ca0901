"""Kernel backend selection.

The compiled extension is preferred when present; the numpy fallback is
always available. Force a backend with AWAN_KERNELS=numpy|cython.
"""

import os

from . import py_kernels

_choice = os.environ.get("AWAN_KERNELS", "auto")

if _choice == "numpy":
    _impl = py_kernels
else:
    try:
        from . import _cykernels as _impl  # type: ignore[no-redef]
    except ImportError:
        if _choice == "cython":
            raise
        _impl = py_kernels

BACKEND = _impl.NAME
im2col = _impl.im2col
col2im = _impl.col2im
