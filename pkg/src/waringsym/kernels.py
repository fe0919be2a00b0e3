"""Backend selection for the modular elimination kernel.

The compiled extension is used when it imports; otherwise the numpy
fallback.  Set ``WARINGSYM_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _rankmod_py

_compiled = None
if os.environ.get("WARINGSYM_PURE", "") in ("", "0"):
    try:
        from . import _rankmod as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

# p < 2**31 keeps p*p inside int64
MAX_PRIME = 2 ** 31


def available_backends() -> list:
    return ["cython", "python"] if _compiled is not None else ["python"]


def rank_mod_p_array(a, p: int, backend: str | None = None) -> int:
    """Rank over GF(p) of an integer array-like; the input is not modified."""
    if not 2 <= p < MAX_PRIME:
        raise ValueError(f"prime {p} outside the supported word-size range")
    arr = np.array(a, dtype=object) if not isinstance(a, np.ndarray) else a
    if arr.ndim != 2:
        raise ValueError("expected a 2-D array")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        return 0
    work = np.ascontiguousarray(np.mod(arr, p).astype(np.int64))
    backend = backend or BACKEND
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel not available")
        return _compiled.rank_mod_p(work, p)
    if backend == "python":
        return _rankmod_py.rank_mod_p(work, p)
    raise ValueError(f"unknown backend {backend!r}")
