# cython: language_level=3
"""Compiled dense inner-loop kernels: pivoted LU, Cholesky, the matching
triangular solves, and modified Gram-Schmidt orthogonalization.

Signatures and pivoting decisions mirror ``rakit._kernels_py``.
"""

from libc.math cimport fabs, sqrt

PIVOT_FLOOR = 1e-300

cdef double _PIVOT_FLOOR = 1e-300


def lu_factor_inplace(double[:, ::1] a, Py_ssize_t[::1] piv):
    """Row-pivoted LU, in place. Returns 0 on success, else the 1-based
    index of the column whose pivot fell below the singularity floor."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, k, p
    cdef double best, cur, m, tmp
    for k in range(n):
        p = k
        best = fabs(a[k, k])
        for i in range(k + 1, n):
            cur = fabs(a[i, k])
            if cur > best:
                best = cur
                p = i
        if best < _PIVOT_FLOOR:
            return k + 1
        piv[k] = p
        if p != k:
            for j in range(n):
                tmp = a[k, j]
                a[k, j] = a[p, j]
                a[p, j] = tmp
        for i in range(k + 1, n):
            m = a[i, k] / a[k, k]
            a[i, k] = m
            for j in range(k + 1, n):
                a[i, j] -= m * a[k, j]
    return 0


def lu_solve_inplace(double[:, ::1] lu, Py_ssize_t[::1] piv, double[::1] x):
    """Overwrite x with the solution of (LU) y = P x."""
    cdef Py_ssize_t n = lu.shape[0]
    cdef Py_ssize_t i, j, p
    cdef double s
    for i in range(n):
        p = piv[i]
        if p != i:
            s = x[i]
            x[i] = x[p]
            x[p] = s
    for i in range(1, n):
        s = x[i]
        for j in range(i):
            s -= lu[i, j] * x[j]
        x[i] = s
    for i in range(n - 1, -1, -1):
        s = x[i]
        for j in range(i + 1, n):
            s -= lu[i, j] * x[j]
        x[i] = s / lu[i, i]


def cholesky_inplace(double[:, ::1] a):
    """Lower Cholesky factor in place (upper triangle zeroed). Returns 0 on
    success, else the 1-based row whose pivot was not strictly positive."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, k
    cdef double s
    for j in range(n):
        s = a[j, j]
        for k in range(j):
            s -= a[j, k] * a[j, k]
        if s <= 0.0:
            return j + 1
        a[j, j] = sqrt(s)
        for i in range(j + 1, n):
            s = a[i, j]
            for k in range(j):
                s -= a[i, k] * a[j, k]
            a[i, j] = s / a[j, j]
    for j in range(n):
        for i in range(j + 1, n):
            a[j, i] = 0.0
    return 0


def cholesky_solve_inplace(double[:, ::1] L, double[::1] x):
    """Overwrite x with the solution of (L L^T) y = x."""
    cdef Py_ssize_t n = L.shape[0]
    cdef Py_ssize_t i, j
    cdef double s
    for i in range(n):
        s = x[i]
        for j in range(i):
            s -= L[i, j] * x[j]
        x[i] = s / L[i, i]
    for i in range(n - 1, -1, -1):
        s = x[i]
        for j in range(i + 1, n):
            s -= L[j, i] * x[j]
        x[i] = s / L[i, i]


def mgs_orthogonalize(double[:, ::1] V, Py_ssize_t ncols, double[::1] w,
                      double[::1] h):
    """Modified Gram-Schmidt of w against the first ncols columns of V, with
    one unconditional reorthogonalization pass. Coefficients accumulate in h;
    w is overwritten with the orthogonal remainder."""
    cdef Py_ssize_t n = V.shape[0]
    cdef Py_ssize_t i, j, rep
    cdef double c
    for rep in range(2):
        for j in range(ncols):
            c = 0.0
            for i in range(n):
                c += V[i, j] * w[i]
            for i in range(n):
                w[i] -= c * V[i, j]
            h[j] += c
