"""Kernel backend selection: numba-jitted hot loops with a pure-numpy fallback.

The environment variable ``RABIPAIR_NUMBA`` controls the backend:
``0``/``false``/``off`` forces the pure-numpy code paths, anything else
(or unset) enables numba when it is importable.  The choice is made once
at import time so that a process runs a single, deterministic backend.
"""

from __future__ import annotations

import os

_FALSY = {"0", "false", "off", "no"}


def _numba_requested() -> bool:
    return os.environ.get("RABIPAIR_NUMBA", "1").strip().lower() not in _FALSY


try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via RABIPAIR_NUMBA=0 instead
    numba = None
    _HAVE_NUMBA = False

USE_NUMBA = _HAVE_NUMBA and _numba_requested()


def maybe_jit(func=None, **jit_kwargs):
    """Apply ``numba.njit`` when the numba backend is active, else no-op.

    Kernels decorated with this must be written in numba-compatible numpy
    style so the same source runs on both backends.
    """

    def wrap(f):
        if USE_NUMBA:
            jit_kwargs.setdefault("cache", True)
            return numba.njit(**jit_kwargs)(f)
        return f

    if func is not None:
        return wrap(func)
    return wrap


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
