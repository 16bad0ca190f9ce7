# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled crossing kernels; contract mirrors _kernels_py exactly."""

IMPLEMENTATION = "cython"


def count_crossings_arrays(int[:] us, int[:] vs):
    """Number of unordered crossing pairs among the edges (us[i], vs[i])."""
    cdef Py_ssize_t m = us.shape[0]
    cdef Py_ssize_t i, j
    cdef int ui, vi, uj, vj
    cdef long total = 0
    for i in range(m):
        ui = us[i]
        vi = vs[i]
        for j in range(i + 1, m):
            uj = us[j]
            vj = vs[j]
            if (ui < uj and uj < vi and vi < vj) or (uj < ui and ui < vj and vj < vi):
                total += 1
    return total


def edge_crossings(int u, int v, int[:] us, int[:] vs, Py_ssize_t count):
    """Crossings of the chord (u, v), u < v, against the first `count` edges."""
    cdef Py_ssize_t i
    cdef int ui, vi
    cdef long total = 0
    for i in range(count):
        ui = us[i]
        vi = vs[i]
        if (u < ui and ui < v and v < vi) or (ui < u and u < vi and vi < v):
            total += 1
    return total
