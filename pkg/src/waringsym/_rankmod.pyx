# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gaussian elimination over GF(p) for word-size primes."""

from libc.stdint cimport int64_t


cdef inline int64_t _inv_mod(int64_t a, int64_t p) noexcept nogil:
    cdef int64_t t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(int64_t[:, ::1] a, int64_t p):
    """Rank of ``a`` over GF(p), destroying ``a``.

    Entries must already lie in ``[0, p)`` and ``p < 2**31`` so that
    products fit in 64 bits.
    """
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t inv, f, t
    with nogil:
        for c in range(n):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, n):
                    t = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = t
            inv = _inv_mod(a[r, c], p)
            for j in range(c, n):
                a[r, j] = a[r, j] * inv % p
            for i in range(r + 1, m):
                f = a[i, c]
                if f == 0:
                    continue
                for j in range(c, n):
                    t = (a[i, j] - f * a[r, j]) % p
                    if t < 0:
                        t += p
                    a[i, j] = t
            r += 1
    return r
