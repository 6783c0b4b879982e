# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: clique enumeration, slicer tallies, ML search."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t
from libcpp.vector cimport vector

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _popcount(uint64_t[::1] row, Py_ssize_t words) noexcept nogil:
    cdef int c = 0
    cdef Py_ssize_t w
    for w in range(words):
        c += __builtin_popcountll(row[w])
    return c


def enumerate_cliques(adj, int k):
    """All k-cliques of an undirected graph as increasing index tuples.

    ``adj`` is a square boolean matrix. Rows of the result are sorted
    lexicographically.
    """
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] a = np.ascontiguousarray(adj, dtype=np.uint8)
    cdef Py_ssize_t n = a.shape[0]
    if k < 1 or n < k:
        return np.zeros((0, max(k, 0)), dtype=np.int64)
    cdef Py_ssize_t words = (n + 63) // 64
    cdef uint64_t[:, ::1] bits = np.zeros((n, words), dtype=np.uint64)
    cdef uint64_t[:, ::1] cand = np.zeros((k + 1, words), dtype=np.uint64)
    cdef Py_ssize_t i, j, w
    for i in range(n):
        for j in range(n):
            if a[i, j] and i != j:
                bits[i, j >> 6] |= (<uint64_t>1) << (j & 63)
    for j in range(n):
        cand[0, j >> 6] |= (<uint64_t>1) << (j & 63)

    cdef vector[int64_t] out
    cdef int64_t[::1] chosen = np.zeros(k, dtype=np.int64)
    cdef int level = 0
    cdef int v
    cdef uint64_t word
    with nogil:
        while level >= 0:
            if level == k:
                for i in range(k):
                    out.push_back(chosen[i])
                level -= 1
                continue
            if _popcount(cand[level], words) < k - level:
                level -= 1
                continue
            v = -1
            for w in range(words):
                word = cand[level, w]
                if word:
                    v = <int>(w * 64 + __builtin_ctzll(word))
                    cand[level, w] = word & (word - 1)
                    break
            chosen[level] = v
            for w in range(words):
                cand[level + 1, w] = cand[level, w] & bits[v, w]
            level += 1

    cdef Py_ssize_t m = out.size() // k
    res = np.empty((m, k), dtype=np.int64)
    cdef int64_t[:, ::1] r = res
    for i in range(m):
        for j in range(k):
            r[i, j] = out[i * k + j]
    return res


def slicer_masks(const double[:, ::1] y, const double[:, ::1] rows):
    """Sign masks of ``y @ rows.T``; bit j set when slicer input j < 0.

    Returns ``(masks, ties)``; an exact zero resolves to the +1 side.
    """
    cdef Py_ssize_t N = y.shape[0], n = y.shape[1], b = rows.shape[0]
    masks = np.empty(N, dtype=np.int64)
    cdef int64_t[::1] mk = masks
    cdef Py_ssize_t i, j, c
    cdef double s
    cdef int64_t m, ties = 0
    with nogil:
        for i in range(N):
            m = 0
            for j in range(b):
                s = 0.0
                for c in range(n):
                    s = s + y[i, c] * rows[j, c]
                if s < 0.0:
                    m |= (<int64_t>1) << j
                elif s == 0.0:
                    ties += 1
            mk[i] = m
    return masks, int(ties)


def slicer_tally(const double[:, ::1] y, const double[:, ::1] rows,
                 const int64_t[::1] tx_masks):
    """Word errors, bit errors and tie count of the slicer over a batch."""
    cdef Py_ssize_t N = y.shape[0], n = y.shape[1], b = rows.shape[0]
    cdef Py_ssize_t i, j, c
    cdef double s
    cdef int64_t m, diff, werr = 0, berr = 0, ties = 0
    with nogil:
        for i in range(N):
            m = 0
            for j in range(b):
                s = 0.0
                for c in range(n):
                    s = s + y[i, c] * rows[j, c]
                if s < 0.0:
                    m |= (<int64_t>1) << j
                elif s == 0.0:
                    ties += 1
            diff = m ^ tx_masks[i]
            if diff:
                werr += 1
                berr += __builtin_popcountll(<unsigned long long>diff)
    return int(werr), int(berr), int(ties)


def nearest_codeword(const double[:, ::1] y, const double[:, ::1] code, double rtol=1e-9):
    """Exhaustive minimum-distance decision; returns ``(indices, tie_flags)``."""
    cdef Py_ssize_t N = y.shape[0], n = y.shape[1], M = code.shape[0]
    idx = np.empty(N, dtype=np.int64)
    tie = np.zeros(N, dtype=np.uint8)
    cdef int64_t[::1] ix = idx
    cdef cnp.uint8_t[::1] tf = tie
    cdef Py_ssize_t i, k, c, best
    cdef double d, t, d1, d2
    with nogil:
        for i in range(N):
            d1 = 1e308
            d2 = 1e308
            best = 0
            for k in range(M):
                d = 0.0
                for c in range(n):
                    t = y[i, c] - code[k, c]
                    d = d + t * t
                if d < d1:
                    d2 = d1
                    d1 = d
                    best = k
                elif d < d2:
                    d2 = d
            ix[i] = best
            if d2 - d1 <= rtol * (1.0 + d1):
                tf[i] = 1
    return idx, tie.astype(bool)
