"""Numba switch.

Set ``KOSTKA_SHOJI_NO_NUMBA=1`` to run the pure-numpy fallbacks instead of the compiled
kernels; results are identical, only speed differs.
"""

import os

_DISABLED = os.environ.get("KOSTKA_SHOJI_NO_NUMBA", "").strip().lower() not in ("", "0", "false")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit as _njit
    HAVE_NUMBA = True
except ImportError:
    _njit = None
    HAVE_NUMBA = False


def njit(func):
    """Compile with numba when available, else return ``func`` unchanged."""
    if _njit is None:
        return func
    return _njit(cache=True, nogil=True)(func)


def backend():
    return "numba" if HAVE_NUMBA else "numpy"
