"""Kernel backend selection.

The compiled kernel is preferred when its extension module imported cleanly;
otherwise the pure-Python twin takes over.  Setting the environment variable
``CONFBESSEL_PURE_PYTHON`` (to any non-empty value) forces the fallback,
which is handy for benchmarking and debugging.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("CONFBESSEL_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

eval_series_kernel = _impl.eval_series_kernel


def backend() -> str:
    """Name of the active kernel backend: ``"cython"`` or ``"python"``."""
    return _impl.BACKEND
