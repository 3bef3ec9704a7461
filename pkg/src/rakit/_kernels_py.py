"""NumPy implementations of the dense inner-loop kernels.

Mirrors the compiled extension ``rakit._kernels`` function for function; the
backend module picks whichever is available. Pivoting decisions (first
maximal pivot, strict comparison) match the compiled code exactly so that
both backends factor the same matrix the same way.
"""

import numpy as np

# Only pivots that are zero to working precision count as singular; tiny
# pivots must survive so that numerically singular test matrices still factor.
PIVOT_FLOOR = 1e-300


def lu_factor_inplace(a, piv):
    """Row-pivoted LU, in place (unit-lower L below the diagonal, U on and
    above it). Returns 0 on success, else the 1-based index of the column
    whose pivot fell below the singularity floor."""
    n = a.shape[0]
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) < PIVOT_FLOOR:
            return k + 1
        piv[k] = p
        if p != k:
            a[[k, p], :] = a[[p, k], :]
        if k + 1 < n:
            a[k + 1 :, k] /= a[k, k]
            a[k + 1 :, k + 1 :] -= np.outer(a[k + 1 :, k], a[k, k + 1 :])
    return 0


def lu_solve_inplace(lu, piv, x):
    """Overwrite x with the solution of (LU) y = P x."""
    n = lu.shape[0]
    for k in range(n):
        p = piv[k]
        if p != k:
            x[k], x[p] = x[p], x[k]
    for i in range(1, n):
        x[i] -= np.dot(lu[i, :i], x[:i])
    for i in range(n - 1, -1, -1):
        if i + 1 < n:
            x[i] -= np.dot(lu[i, i + 1 :], x[i + 1 :])
        x[i] /= lu[i, i]


def cholesky_inplace(a):
    """Lower Cholesky factor in place (upper triangle zeroed). Returns 0 on
    success, else the 1-based row whose pivot was not strictly positive."""
    n = a.shape[0]
    for j in range(n):
        s = a[j, j] - np.dot(a[j, :j], a[j, :j])
        if s <= 0.0:
            return j + 1
        a[j, j] = np.sqrt(s)
        for i in range(j + 1, n):
            a[i, j] = (a[i, j] - np.dot(a[i, :j], a[j, :j])) / a[j, j]
    for j in range(n):
        a[j, j + 1 :] = 0.0
    return 0


def cholesky_solve_inplace(L, x):
    """Overwrite x with the solution of (L L^T) y = x."""
    n = L.shape[0]
    for i in range(n):
        x[i] = (x[i] - np.dot(L[i, :i], x[:i])) / L[i, i]
    for i in range(n - 1, -1, -1):
        if i + 1 < n:
            x[i] -= np.dot(L[i + 1 :, i], x[i + 1 :])
        x[i] /= L[i, i]


def mgs_orthogonalize(V, ncols, w, h):
    """Modified Gram-Schmidt of w against the first ncols columns of V, with
    one unconditional reorthogonalization pass. Coefficients accumulate in h;
    w is overwritten with the orthogonal remainder."""
    for _ in range(2):
        for j in range(ncols):
            c = np.dot(V[:, j], w)
            w -= c * V[:, j]
            h[j] += c
