# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled double-description inner loops.

Same contract as ``_ddkernel_py``.  Zero sets arrive as Python ints and
are unpacked once into flat uint64 word arrays; the pair scan and the
containment test then run without touching Python objects.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy
from math import gcd as _gcd

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def adjacent_pairs(pos, neg, masks, int threshold):
    cdef Py_ssize_t nr = len(masks)
    if nr == 0 or not pos or not neg:
        return []
    cdef int top = 0
    for m in masks:
        top = max(top, (<object>m).bit_length())
    cdef Py_ssize_t words = top // 64 + 1
    cdef uint64_t *buf = <uint64_t *> malloc(nr * words * sizeof(uint64_t))
    cdef uint64_t *common = <uint64_t *> malloc(words * sizeof(uint64_t))
    if buf == NULL or common == NULL:
        free(buf)
        free(common)
        raise MemoryError()
    cdef bytes raw
    cdef Py_ssize_t i, w, r, p, n
    cdef int count, hits
    cdef uint64_t *mp
    cdef uint64_t *mn
    cdef uint64_t *mr
    cdef bint inside
    out = []
    try:
        for i in range(nr):
            raw = (<object>masks[i]).to_bytes(words * 8, "little")
            memcpy(&buf[i * words], <char *> raw, words * 8)
        for p in pos:
            mp = &buf[p * words]
            for n in neg:
                mn = &buf[n * words]
                count = 0
                for w in range(words):
                    common[w] = mp[w] & mn[w]
                    count += __builtin_popcountll(common[w])
                if count < threshold:
                    continue
                hits = 0
                for r in range(nr):
                    mr = &buf[r * words]
                    inside = True
                    for w in range(words):
                        if common[w] & ~mr[w]:
                            inside = False
                            break
                    if inside:
                        hits += 1
                        if hits > 2:
                            break
                if hits == 2:
                    out.append((p, n))
    finally:
        free(buf)
        free(common)
    return out


def combine(tuple p, tuple n, object sp, object sn):
    cdef Py_ssize_t k, size = len(p)
    cdef list vec = [None] * size
    cdef object g = 0
    cdef object x
    for k in range(size):
        x = sp * n[k] - sn * p[k]
        vec[k] = x
        if x and g != 1:
            g = _gcd(g, x)
    if g > 1:
        return tuple([x // g for x in vec])
    return tuple(vec)
