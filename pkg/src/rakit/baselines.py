"""Reference Krylov solvers used for comparison runs: CG, full GMRES with
Givens-rotation least squares, and CGLS on the implicit normal equations.

All start from x_0 = 0 and record error/residual per iteration into the same
:class:`~rakit.solvers.SolveReport` shape as the refinement solvers (``lam``
is 0 for these unshifted methods). An optional ``callback(k, x)`` observes
every iterate.
"""

from __future__ import annotations

import numpy as np

from .errors import IndefiniteMatrixError
from .krylov import MatrixOperator, arnoldi_extend, arnoldi_start
from .linalg import as_square_matrix, as_vector, is_symmetric
from .solvers import SolveReport, _HistoryTracker, _resolve_max_iter


def _prepare(A, b, x_true, max_iter):
    A = as_square_matrix(A)
    b = as_vector(b)
    if b.size != A.shape[0]:
        raise ValueError("right-hand side length does not match the matrix")
    tracker = _HistoryTracker(A, b, None if x_true is None else as_vector(x_true))
    return A, b, tracker, _resolve_max_iter(max_iter, A.shape[0])


def cg_solve(A, b, max_iter=None, residual_tol=None, x_true=None,
             callback=None) -> SolveReport:
    """Conjugate gradients for SPD systems.

    Raises :class:`IndefiniteMatrixError` as soon as a search direction shows
    non-positive curvature p^T A p <= 0.
    """
    A, b, tracker, max_iter = _prepare(A, b, x_true, max_iter)
    if not is_symmetric(A):
        raise ValueError("cg requires a symmetric matrix")
    x = np.zeros_like(b)
    r = b.copy()
    p = r.copy()
    rho = float(r @ r)
    reason = "max_iter"
    for k in range(1, max_iter + 1):
        Ap = A @ p
        pAp = float(p @ Ap)
        if pAp <= 0.0:
            raise IndefiniteMatrixError(
                f"non-positive curvature at iteration {k}: p^T A p = {pAp:g}"
            )
        alpha = rho / pAp
        x = x + alpha * p
        r = r - alpha * Ap
        rec = tracker.record(k, x)
        if callback is not None:
            callback(k, x)
        if residual_tol is not None and rec.residual_norm <= residual_tol:
            reason = "residual_tol"
            break
        rho_new = float(r @ r)
        if rho_new == 0.0:  # exact convergence, lucky termination
            reason = "breakdown"
            break
        p = r + (rho_new / rho) * p
        rho = rho_new
    return SolveReport("cg", 0.0, tracker.history, tracker.best_m,
                       tracker.best_x, reason)


def gmres_solve(A, b, max_iter=None, residual_tol=None, x_true=None,
                callback=None) -> SolveReport:
    """Full (unrestarted) GMRES.

    Arnoldi runs on A itself; the small least-squares problems are updated
    incrementally with Givens rotations. Krylov breakdown is lucky
    termination: the last iterate solves the system exactly.
    """
    A, b, tracker, max_iter = _prepare(A, b, x_true, max_iter)
    op = MatrixOperator(A)
    d = arnoldi_start(op, b)
    n = A.shape[0]
    R = np.zeros((max_iter + 1, max_iter))  # rotated Hessenberg, upper triangular
    g = np.zeros(max_iter + 1)
    g[0] = d.beta
    cs = np.zeros(max_iter)
    sn = np.zeros(max_iter)
    reason = "max_iter"
    for k in range(1, min(max_iter, n) + 1):
        d = arnoldi_extend(op, d)
        j = k - 1
        col = np.zeros(k + 1)
        col[:k] = d.H[:, j]
        col[k] = d.h_next
        for i in range(j):
            ci, si = cs[i], sn[i]
            col[i], col[i + 1] = ci * col[i] + si * col[i + 1], -si * col[i] + ci * col[i + 1]
        denom = np.hypot(col[j], col[j + 1])
        if denom == 0.0:
            cs[j], sn[j] = 1.0, 0.0
        else:
            cs[j], sn[j] = col[j] / denom, col[j + 1] / denom
        col[j] = denom
        col[j + 1] = 0.0
        R[: k + 1, j] = col
        g[j], g[j + 1] = cs[j] * g[j] + sn[j] * g[j + 1], -sn[j] * g[j] + cs[j] * g[j + 1]

        y = np.linalg.solve(R[:k, :k], g[:k]) if k else np.zeros(0)
        x = d.V @ y
        rec = tracker.record(k, x)
        if callback is not None:
            callback(k, x)
        if d.breakdown:
            reason = "breakdown"
            break
        if residual_tol is not None and rec.residual_norm <= residual_tol:
            reason = "residual_tol"
            break
    return SolveReport("gmres", 0.0, tracker.history, tracker.best_m,
                       tracker.best_x, reason)


def cgls_solve(A, b, max_iter=None, residual_tol=None, x_true=None,
               callback=None) -> SolveReport:
    """CG applied to the normal equations A^T A x = A^T b without forming
    A^T A."""
    A, b, tracker, max_iter = _prepare(A, b, x_true, max_iter)
    x = np.zeros_like(b)
    r = b.copy()
    s = A.T @ r
    p = s.copy()
    gamma = float(s @ s)
    reason = "max_iter"
    for k in range(1, max_iter + 1):
        q = A @ p
        qq = float(q @ q)
        if qq == 0.0:
            reason = "breakdown"
            break
        alpha = gamma / qq
        x = x + alpha * p
        r = r - alpha * q
        rec = tracker.record(k, x)
        if callback is not None:
            callback(k, x)
        if residual_tol is not None and rec.residual_norm <= residual_tol:
            reason = "residual_tol"
            break
        s = A.T @ r
        gamma_new = float(s @ s)
        p = s + (gamma_new / gamma) * p
        gamma = gamma_new
    return SolveReport("cgls", 0.0, tracker.history, tracker.best_m,
                       tracker.best_x, reason)
