# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: multiplication-table build and closure BFS.

Mirrors the API of ``_kernel_py``; ``growthlab.kernel`` picks whichever
imports.  Element ids index a lexicographically sorted element matrix E
(rows are image arrays).  Products are identified by their images on a
base (a sequence of points whose images determine a group element), so
building the n x n table never composes full rows.
"""

import numpy as np


def kernel_name():
    return "compiled"


def build_mult_table(unsigned short[:, ::1] E,
                     long long[::1] base_cols,
                     long long[::1] weights,
                     long long[::1] keys_sorted,
                     long long[::1] key_order):
    """table[i, j] = id of (element i followed by element j)."""
    cdef Py_ssize_t n = E.shape[0]
    cdef Py_ssize_t m = base_cols.shape[0]
    cdef Py_ssize_t i, j, t, lo, hi, mid
    cdef long long key
    cdef long long xb[64]
    if m > 64:
        raise ValueError("base too long for kernel")
    out = np.empty((n, n), dtype=np.uint16)
    cdef unsigned short[:, ::1] o = out
    for i in range(n):
        for t in range(m):
            xb[t] = E[i, base_cols[t]]
        for j in range(n):
            key = 0
            for t in range(m):
                key += E[j, xb[t]] * weights[t]
            lo = 0
            hi = n
            while lo < hi:
                mid = (lo + hi) >> 1
                if keys_sorted[mid] < key:
                    lo = mid + 1
                else:
                    hi = mid
            o[i, j] = <unsigned short> key_order[lo]
    return out


def close_ids(unsigned short[:, ::1] table, gens, Py_ssize_t n):
    """Sorted ids of the subgroup generated by ``gens`` (element ids)."""
    cdef Py_ssize_t head = 0, tail = 0, x, y, s
    gen_arr = np.unique(np.asarray(gens, dtype=np.int64))
    cdef long long[::1] g = gen_arr
    cdef Py_ssize_t ngens = g.shape[0]
    seen_arr = np.zeros(n, dtype=np.uint8)
    queue_arr = np.empty(n, dtype=np.int64)
    cdef unsigned char[::1] seen = seen_arr
    cdef long long[::1] q = queue_arr
    cdef Py_ssize_t t
    for t in range(ngens):
        x = g[t]
        if not seen[x]:
            seen[x] = 1
            q[tail] = x
            tail += 1
    while head < tail:
        x = q[head]
        head += 1
        for t in range(ngens):
            y = table[x, g[t]]
            if not seen[y]:
                seen[y] = 1
                q[tail] = y
                tail += 1
    ids = queue_arr[:tail].copy()
    ids.sort()
    return ids.astype(np.uint32)
