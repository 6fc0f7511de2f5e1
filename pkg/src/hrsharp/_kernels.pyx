# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: cyclic Jacobi eigenvalue sweeps.

Mirrors the numpy fallback in ``_jacobi_py`` rotation for rotation, so
both backends produce the same eigenvalues up to roundoff.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()


cdef double _offdiag_norm(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double sq = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(i + 1, n):
            sq += 2.0 * a[i, j] * a[i, j]
    return sqrt(sq)


def jacobi_eigenvalues(matrix, double tol=1e-12, int max_sweeps=100):
    """Eigenvalues of a real symmetric matrix, sorted ascending."""
    a_arr = np.array(matrix, dtype=np.float64, order="C", copy=True)
    cdef double[:, ::1] a = a_arr
    cdef Py_ssize_t n = a.shape[0]
    if n == 1:
        return a_arr[0, :1].copy()

    cdef double norm = 0.0
    cdef Py_ssize_t i, j, p, q
    cdef double apq, tau, t, c, s, rp, rq
    cdef int sweep

    with nogil:
        for i in range(n):
            for j in range(n):
                norm += a[i, j] * a[i, j]
        norm = sqrt(norm)

    if norm == 0.0:
        return np.zeros(n)
    cdef double thresh = tol * norm

    with nogil:
        for sweep in range(max_sweeps):
            if _offdiag_norm(a, n) <= thresh:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if tau >= 0.0:
                        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c

                    for j in range(n):
                        rp = a[p, j]
                        rq = a[q, j]
                        a[p, j] = c * rp - s * rq
                        a[q, j] = s * rp + c * rq
                    for j in range(n):
                        rp = a[j, p]
                        rq = a[j, q]
                        a[j, p] = c * rp - s * rq
                        a[j, q] = s * rp + c * rq
                    a[p, q] = 0.0
                    a[q, p] = 0.0

    return np.sort(np.diagonal(a_arr).copy())
