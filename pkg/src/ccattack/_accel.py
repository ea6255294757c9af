"""Kernel backend selection.

Hot loops are written twice: a numba ``@njit`` kernel and a pure-numpy
fallback.  ``CCATTACK_DISABLE_NUMBA=1`` forces the numpy path, which is also
used automatically when numba cannot be imported.
"""
from __future__ import annotations

import os

_FLAG = "CCATTACK_DISABLE_NUMBA"

try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _njit = None
    HAVE_NUMBA = False


def numba_requested() -> bool:
    return os.environ.get(_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


USE_NUMBA = HAVE_NUMBA and numba_requested()


def njit(fn):
    """Compile ``fn`` with numba when available, otherwise return it unchanged.

    The compiled kernels are always built when numba is importable so the
    benchmark can compare both paths in one process; ``USE_NUMBA`` only
    decides which one the public functions dispatch to.
    """
    if not HAVE_NUMBA:
        return fn
    return _njit(cache=True, nogil=True)(fn)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
