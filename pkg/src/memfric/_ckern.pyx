# cython: language_level=3
"""Compiled numeric kernels: fixed-order compensated sums.

Bit-identical to memfric._pykern (same operation order per output element);
these exist to make the O(Q^2) memory convolution and the mode-sum table
build fast.
"""

import numpy as np
cimport numpy as cnp

COMPILED = True


def kahan_ordered(cnp.float64_t[::1] terms):
    cdef double s = 0.0, c = 0.0, y, tmp, t
    cdef Py_ssize_t i, n = terms.shape[0]
    for i in range(n):
        t = terms[i]
        y = t - c
        tmp = s + y
        c = (tmp - s) - y
        s = tmp
    return s


def kahan_ordered_2d(cnp.float64_t[:, ::1] terms):
    cdef Py_ssize_t k, q
    cdef Py_ssize_t K = terms.shape[0], Q = terms.shape[1]
    out = np.zeros(Q)
    comp = np.zeros(Q)
    cdef cnp.float64_t[::1] s = out
    cdef cnp.float64_t[::1] c = comp
    cdef double y, tmp
    for k in range(K):
        for q in range(Q):
            y = terms[k, q] - c[q]
            tmp = s[q] + y
            c[q] = (tmp - s[q]) - y
            s[q] = tmp
    return out


def conv_tail(cnp.float64_t[::1] L0_2, cnp.float64_t[::1] df, Py_ssize_t q):
    cdef double s = 0.0, c = 0.0, y, tmp, t
    cdef Py_ssize_t j
    if q < 2:
        return 0.0
    for j in range(q - 1, 0, -1):
        t = L0_2[j] * df[q - j]
        y = t - c
        tmp = s + y
        c = (tmp - s) - y
        s = tmp
    return s
