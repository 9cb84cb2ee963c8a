# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython implementation of the group-census kernels.

Same contract as _groupkern_py: a C-contiguous uint16 multiplication
table with the identity at index 0, a parallel inverse array, subgroups
as sorted index tuples.
"""

from libc.stdlib cimport calloc, free, malloc, qsort
from libc.string cimport memcpy

import numpy as np

BACKEND = "cython"


cdef int _cmp_u16(const void* a, const void* b) noexcept nogil:
    return (<const unsigned short*> a)[0] - (<const unsigned short*> b)[0]


def closure(table, seeds):
    """Subgroup generated by the seed elements, as a sorted list of indices."""
    cdef const unsigned short[:, ::1] t = table
    cdef Py_ssize_t n = t.shape[0]
    cdef list seed_list = sorted({int(s) for s in seeds})
    cdef Py_ssize_t ns = len(seed_list)
    cdef Py_ssize_t i, j, head, tail
    cdef unsigned short x, y
    cdef unsigned short* sd = NULL
    cdef unsigned short* queue = NULL
    cdef char* mask = NULL
    if ns == 0:
        return [0]
    try:
        sd = <unsigned short*> malloc(ns * sizeof(unsigned short))
        queue = <unsigned short*> malloc(n * sizeof(unsigned short))
        mask = <char*> calloc(n, 1)
        if sd is NULL or queue is NULL or mask is NULL:
            raise MemoryError()
        for i in range(ns):
            sd[i] = <unsigned short> seed_list[i]
        mask[0] = 1
        queue[0] = 0
        head, tail = 0, 1
        while head < tail:
            x = queue[head]
            head += 1
            for j in range(ns):
                y = t[x, sd[j]]
                if not mask[y]:
                    mask[y] = 1
                    queue[tail] = y
                    tail += 1
        return [i for i in range(n) if mask[i]]
    finally:
        free(sd)
        free(queue)
        free(mask)


def canonical_key(table, inv, elems):
    """Lexicographically least sorted element set among all conjugates."""
    cdef const unsigned short[:, ::1] t = table
    cdef const unsigned short[::1] iv = inv
    cdef Py_ssize_t n = t.shape[0]
    cdef list elem_list = list(elems)
    cdef Py_ssize_t m = len(elem_list)
    cdef Py_ssize_t c, j
    cdef unsigned short ci
    cdef int cmp
    cdef unsigned short* el = NULL
    cdef unsigned short* cur = NULL
    cdef unsigned short* best = NULL
    try:
        el = <unsigned short*> malloc(m * sizeof(unsigned short))
        cur = <unsigned short*> malloc(m * sizeof(unsigned short))
        best = <unsigned short*> malloc(m * sizeof(unsigned short))
        if el is NULL or cur is NULL or best is NULL:
            raise MemoryError()
        for j in range(m):
            el[j] = <unsigned short> elem_list[j]
        for c in range(n):
            ci = iv[c]
            for j in range(m):
                cur[j] = t[t[c, el[j]], ci]
            qsort(cur, m, sizeof(unsigned short), _cmp_u16)
            if c == 0:
                memcpy(best, cur, m * sizeof(unsigned short))
                continue
            cmp = 0
            for j in range(m):
                if cur[j] != best[j]:
                    cmp = -1 if cur[j] < best[j] else 1
                    break
            if cmp < 0:
                memcpy(best, cur, m * sizeof(unsigned short))
        return tuple(best[j] for j in range(m))
    finally:
        free(el)
        free(cur)
        free(best)


def normalizer(table, inv, elems):
    """All c with c H c^-1 == H, for H a sorted element list."""
    cdef const unsigned short[:, ::1] t = table
    cdef const unsigned short[::1] iv = inv
    cdef Py_ssize_t n = t.shape[0]
    cdef list elem_list = list(elems)
    cdef Py_ssize_t m = len(elem_list)
    cdef Py_ssize_t c, j
    cdef unsigned short ci
    cdef bint ok
    cdef unsigned short* el = NULL
    cdef char* member = NULL
    cdef list out = []
    try:
        el = <unsigned short*> malloc(m * sizeof(unsigned short))
        member = <char*> calloc(n, 1)
        if el is NULL or member is NULL:
            raise MemoryError()
        for j in range(m):
            el[j] = <unsigned short> elem_list[j]
            member[el[j]] = 1
        for c in range(n):
            ci = iv[c]
            ok = True
            for j in range(m):
                if not member[t[t[c, el[j]], ci]]:
                    ok = False
                    break
            if ok:
                out.append(c)
        return out
    finally:
        free(el)
        free(member)


def conj_min_reps(table, inv, conjugators):
    """For every element g, the least conjugate c g c^-1 over the given c."""
    cdef const unsigned short[:, ::1] t = table
    cdef const unsigned short[::1] iv = inv
    cdef Py_ssize_t n = t.shape[0]
    cdef list conj_list = list(conjugators)
    cdef Py_ssize_t k = len(conj_list)
    if k == 0:
        raise ValueError("need at least one conjugator")
    out_arr = np.empty(n, dtype=np.uint16)
    cdef unsigned short[::1] out = out_arr
    cdef Py_ssize_t i, g
    cdef unsigned short c, ci, v
    for g in range(n):
        out[g] = 65535
    for i in range(k):
        c = <unsigned short> conj_list[i]
        ci = iv[c]
        for g in range(n):
            v = t[t[c, g], ci]
            if v < out[g]:
                out[g] = v
    return out_arr
