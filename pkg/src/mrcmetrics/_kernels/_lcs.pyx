# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled longest-common-subsequence length over integer id sequences.

Two-row dynamic program; O(len(a) * len(b)) time, O(min-side) memory.
"""

from cpython cimport array
import array


def lcs_len_ids(a, b):
    """Length of the longest common subsequence of two int sequences."""
    cdef array.array arr_a = array.array("i", a)
    cdef array.array arr_b = array.array("i", b)
    cdef Py_ssize_t n = len(arr_a)
    cdef Py_ssize_t m = len(arr_b)
    if n == 0 or m == 0:
        return 0

    cdef int[:] va = arr_a
    cdef int[:] vb = arr_b
    cdef array.array prev_arr = array.array("i", bytes(4 * (m + 1)))
    cdef array.array cur_arr = array.array("i", bytes(4 * (m + 1)))
    cdef int[:] prev = prev_arr
    cdef int[:] cur = cur_arr
    cdef Py_ssize_t i, j
    cdef int ai, up, left, diag

    for i in range(n):
        ai = va[i]
        for j in range(m):
            if ai == vb[j]:
                cur[j + 1] = prev[j] + 1
            else:
                up = prev[j + 1]
                left = cur[j]
                cur[j + 1] = up if up >= left else left
        prev, cur = cur, prev

    return prev[m]
