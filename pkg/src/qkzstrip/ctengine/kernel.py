"""Backend selection for the capped dense expansion.

The compiled int64 kernel is used when it was built and
``QKZSTRIP_PURE_PYTHON`` is unset; on int64 overflow the call is replayed
on the exact object-dtype path, so results never depend on the backend.
"""

from __future__ import annotations

import logging
import os

import numpy as np

from . import _kernel_py

log = logging.getLogger(__name__)

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

if os.environ.get("QKZSTRIP_PURE_PYTHON"):
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def expand_dense(dims, factors, backend: str | None = None) -> np.ndarray:
    """Dense truncated product; always returns an object array of Python ints."""
    backend = backend or BACKEND
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        try:
            return _compiled.expand_dense(dims, factors).astype(object)
        except OverflowError:
            log.info("int64 overflow in compiled kernel; using exact fallback")
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _kernel_py.expand_dense(dims, factors)


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _compiled is not None else [])
