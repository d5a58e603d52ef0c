# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels for sl3 weight multiplicities and characters.

Signatures and results are identical to ``w3cft._pykernels``.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


def freudenthal_grid(long l1, long l2):
    """Multiplicities of the irrep (l1, l2) on the (k1, k2) grid.

    Entry ``[k1, k2]`` is the multiplicity of ``lam - k1*e1 - k2*e2``.
    """
    if l1 < 0 or l2 < 0:
        raise ValueError("highest weight must be dominant")
    cdef long n = l1 + l2
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    cdef i64[:, ::1] m = out
    cdef long level, k1, k2, k, j1, j2
    cdef i64 mu1, mu2, denom, num, hi1, hi2
    m[0, 0] = 1
    for level in range(1, 2 * n + 1):
        for k1 in range(max(0, level - n), min(level, n) + 1):
            k2 = level - k1
            mu1 = l1 - 2 * k1 + k2
            mu2 = l2 + k1 - 2 * k2
            denom = k1 * (l1 + mu1 + 2) + k2 * (l2 + mu2 + 2)
            if denom == 0:
                continue
            num = 0
            # alpha = e1
            k = 1
            while k1 - k >= 0:
                j1 = k1 - k
                if m[j1, k2]:
                    hi1 = l1 - 2 * j1 + k2
                    num += m[j1, k2] * hi1
                k += 1
            # alpha = e2
            k = 1
            while k2 - k >= 0:
                j2 = k2 - k
                if m[k1, j2]:
                    hi2 = l2 + k1 - 2 * j2
                    num += m[k1, j2] * hi2
                k += 1
            # alpha = e1 + e2
            k = 1
            while k1 - k >= 0 and k2 - k >= 0:
                j1 = k1 - k
                j2 = k2 - k
                if m[j1, j2]:
                    hi1 = l1 - 2 * j1 + j2
                    hi2 = l2 + j1 - 2 * j2
                    num += m[j1, j2] * (hi1 + hi2)
                k += 1
            num *= 2
            if num % denom:
                raise ArithmeticError("non-integral Freudenthal multiplicity")
            m[k1, k2] = num // denom
    return out


def convolve(a, b):
    """Full 2-D integer convolution ``c[i+k, j+l] += a[i, j] * b[k, l]``."""
    cdef i64[:, ::1] av = np.ascontiguousarray(a, dtype=np.int64)
    cdef i64[:, ::1] bv = np.ascontiguousarray(b, dtype=np.int64)
    cdef Py_ssize_t na0 = av.shape[0], na1 = av.shape[1]
    cdef Py_ssize_t nb0 = bv.shape[0], nb1 = bv.shape[1]
    out = np.zeros((na0 + nb0 - 1, na1 + nb1 - 1), dtype=np.int64)
    cdef i64[:, ::1] cv = out
    cdef Py_ssize_t i, j, k, l
    cdef i64 x
    for i in range(na0):
        for j in range(na1):
            x = av[i, j]
            if x == 0:
                continue
            for k in range(nb0):
                for l in range(nb1):
                    if bv[k, l]:
                        cv[i + k, j + l] += x * bv[k, l]
    return out
