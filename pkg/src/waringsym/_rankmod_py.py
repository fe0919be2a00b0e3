"""Numpy fallback for :mod:`waringsym._rankmod` (same contract)."""

import numpy as np


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank of ``a`` over GF(p), destroying ``a``.

    Entries must already lie in ``[0, p)`` and ``p < 2**31``.
    """
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv], c:] = a[[piv, r], c:]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        below = r + 1 + np.flatnonzero(a[r + 1:, c])
        if below.size:
            f = a[below, c][:, None]
            a[below, c:] = (a[below, c:] - f * a[r, c:]) % p
        r += 1
    return r
