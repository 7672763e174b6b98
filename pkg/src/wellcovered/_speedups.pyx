# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the enumeration and elimination inner loops.

Same contracts as `_kernels_py`.  The clique kernel here packs vertex sets
into a single machine word, so it only handles graphs with at most 64
vertices; `kernels` routes larger inputs to the pure lane.
"""

from libc.stdlib cimport free, malloc

IMPLEMENTATION = "c"

cdef extern from *:
    """
    #define MASK_POPCOUNT(x) __builtin_popcountll(x)
    #define MASK_CTZ(x) __builtin_ctzll(x)
    """
    int MASK_POPCOUNT(unsigned long long x) nogil
    int MASK_CTZ(unsigned long long x) nogil


cdef int _expand(unsigned long long r, unsigned long long p, unsigned long long x,
                 unsigned long long* adj, list out, Py_ssize_t limit) except -1:
    cdef unsigned long long m, cand, bit, nv
    cdef int v, pivot, best, cnt
    if p == 0 and x == 0:
        out.append(r)
        if len(out) > limit:
            raise ValueError("maximal clique count exceeds limit")
        return 0
    pivot = -1
    best = -1
    m = p | x
    while m:
        v = MASK_CTZ(m)
        cnt = MASK_POPCOUNT(p & adj[v])
        if cnt > best:
            best = cnt
            pivot = v
        m &= m - 1
    cand = p & ~adj[pivot]
    while cand:
        v = MASK_CTZ(cand)
        bit = 1ULL << v
        nv = adj[v]
        _expand(r | bit, p & nv, x & nv, adj, out, limit)
        p &= ~bit
        x |= bit
        cand &= cand - 1
    return 0


def maximal_cliques(adj_masks, limit):
    """Bitmask Bron-Kerbosch with pivoting; see `_kernels_py.maximal_cliques`."""
    cdef int n = len(adj_masks)
    if n > 64:
        raise ValueError("compiled clique kernel handles at most 64 vertices")
    cdef unsigned long long full = 0 if n == 0 else ((<unsigned long long>0xFFFFFFFFFFFFFFFF) >> (64 - n))
    cdef unsigned long long* adj = <unsigned long long*> malloc(64 * sizeof(unsigned long long))
    if adj == NULL:
        raise MemoryError()
    cdef int i
    out = []
    try:
        for i in range(n):
            adj[i] = adj_masks[i]
        _expand(0, full, 0, adj, out, limit)
    finally:
        free(adj)
    return out


def gf_rank(entries, Py_ssize_t rows, Py_ssize_t cols, long long p):
    """Row-echelon rank over GF(p) with machine-word arithmetic (p < 2^31)."""
    if p < 2 or p >= (<long long>1) << 31:
        raise ValueError("modulus must be a prime below 2^31")
    cdef Py_ssize_t size = rows * cols
    if len(entries) != size:
        raise ValueError("entry count does not match the matrix shape")
    cdef long long* a = <long long*> malloc(size * sizeof(long long)) if size else NULL
    if a == NULL and size:
        raise MemoryError()
    cdef Py_ssize_t rank = 0, c, r, piv, j, base, off
    cdef long long inv, f, tmp
    try:
        for j in range(size):
            a[j] = entries[j] % p
        for c in range(cols):
            piv = -1
            for r in range(rank, rows):
                if a[r * cols + c] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                base = rank * cols
                off = piv * cols
                for j in range(c, cols):
                    tmp = a[base + j]
                    a[base + j] = a[off + j]
                    a[off + j] = tmp
            base = rank * cols
            inv = _inverse(a[base + c], p)
            for j in range(c, cols):
                a[base + j] = a[base + j] * inv % p
            for r in range(rank + 1, rows):
                f = a[r * cols + c]
                if f != 0:
                    off = r * cols
                    for j in range(c, cols):
                        a[off + j] = (a[off + j] - f * a[base + j]) % p
                        if a[off + j] < 0:
                            a[off + j] += p
            rank += 1
            if rank == rows:
                break
    finally:
        if a != NULL:
            free(a)
    return rank


cdef long long _inverse(long long x, long long p) nogil:
    # Fermat inverse by square-and-multiply; p is prime and x != 0 mod p.
    cdef long long result = 1, base = x % p, e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result
