# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for the matching generating function.

Same branch-and-memoize algorithm as the pure kernel, with the live-vertex
set held in a single 64-bit word and the adjacency structure flattened into
C arrays, so the inner minimum-degree scan runs without Python object
traffic.  Edge weights stay exact (Fraction objects); only the bookkeeping
is compiled.  Limited to 64 vertices — the dispatcher falls back to the
pure kernel above that.
"""

from fractions import Fraction

from libc.stdlib cimport free, malloc

_ZERO = Fraction(0)
_ONE = Fraction(1)

MAX_VERTICES = 64


cdef struct Adj:
    int *start    # CSR offsets, length n + 1
    int *nbr      # neighbour indices
    int n


cdef object _go(unsigned long long live, Adj *a, list weights, dict memo):
    if live == 0:
        return _ONE
    cached = memo.get(live)
    if cached is not None:
        return cached

    cdef unsigned long long rest = live
    cdef unsigned long long bit
    cdef int v, u, i, deg
    cdef int best_v = -1, best_deg = -1
    while rest:
        bit = rest & (~rest + 1)
        rest ^= bit
        v = 0
        while not (bit & 1):
            bit >>= 1
            v += 1
        deg = 0
        for i in range(a.start[v], a.start[v + 1]):
            if (live >> a.nbr[i]) & 1:
                deg += 1
        if deg == 0:
            memo[live] = _ZERO
            return _ZERO
        if best_deg < 0 or deg < best_deg:
            best_v = v
            best_deg = deg
            if deg == 1:
                break

    acc = _ZERO
    cdef unsigned long long base = live ^ (1ULL << best_v)
    cdef object w
    for i in range(a.start[best_v], a.start[best_v + 1]):
        u = a.nbr[i]
        if (live >> u) & 1:
            w = weights[i]
            if w:
                acc = acc + w * _go(base ^ (1ULL << u), a, weights, memo)
    memo[live] = acc
    return acc


def matching_sum(adj):
    """Sum over perfect matchings of the product of edge weights.

    Drop-in twin of the pure kernel's function of the same name; raises
    ValueError when the graph has more than 64 vertices.
    """
    cdef int n = len(adj)
    if n == 0:
        return _ONE
    if n % 2:
        return _ZERO
    if n > MAX_VERTICES:
        raise ValueError(f"compiled kernel limited to {MAX_VERTICES} vertices")

    cdef int m = 0
    for row in adj:
        m += len(row)

    cdef Adj a
    a.n = n
    a.start = <int *> malloc((n + 1) * sizeof(int))
    a.nbr = <int *> malloc(m * sizeof(int))
    if a.start == NULL or a.nbr == NULL:
        free(a.start)
        free(a.nbr)
        raise MemoryError()

    weights = []
    cdef int pos = 0, v = 0
    try:
        for row in adj:
            a.start[v] = pos
            for u, w in row:
                a.nbr[pos] = u
                weights.append(w)
                pos += 1
            v += 1
        a.start[n] = pos
        memo = {}
        return _go((1ULL << n) - 1 if n < 64 else ~0ULL, &a, weights, memo)
    finally:
        free(a.start)
        free(a.nbr)
