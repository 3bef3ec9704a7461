"""Shift-and-invert refinement solvers.

Three methods share one skeleton: factor a regularized matrix once, build a
Krylov space of its inverse action, and read iterates off the projection.

* :func:`ra_solve` - rational Arnoldi refinement on Z = (A + lam*I)^-1,
  evaluating x_m = ||b|| V_m f(H_m) e_1 with f(z) = z/(1 - lam*z).
* :func:`riley_solve` - the classical iterated-refinement recursion
  x_{k+1} = Z b + lam * Z x_k (truncated series for A^-1 b).
* :func:`rat_solve` - the same Arnoldi machinery driven by the Tikhonov
  normal equations, for right-hand sides contaminated by noise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotSPDError, SingularFunctionError, SingularMatrixError
from .krylov import arnoldi_extend, arnoldi_start
from .linalg import (
    Factorization,
    as_square_matrix,
    as_vector,
    cholesky_factor,
    is_symmetric,
    lu_factor,
    norm2,
    solve_factored,
)

# Relative size below which the smallest eigenvalue of I - lam*H flags the
# rational evaluation as singular (a Ritz value sits on the pole 1/lam).
# Beyond this point the evaluation amplifies basis noise by ~1e6 or more and
# iterates carry no information; stopping here is what suppresses the
# semi-convergent blow-up of the refinement methods on noisy data.
_F_SINGULAR_TOL = 3e-6


@dataclass(frozen=True)
class IterationRecord:
    """One history row: iteration index, error versus the known solution
    (None when unknown), and residual norm."""

    m: int
    error_norm: float | None
    residual_norm: float


@dataclass
class SolveReport:
    """Outcome of one solver run.

    ``best_m`` points at the minimal recorded error (residual when the exact
    solution is unknown), ties broken by the smallest iteration index.
    ``stopped_reason`` is one of "max_iter", "breakdown", "residual_tol",
    "f_singular".
    """

    method: str
    lam: float
    history: list[IterationRecord] = field(default_factory=list)
    best_m: int = 0
    best_x: np.ndarray | None = None
    stopped_reason: str = "max_iter"

    @property
    def err_min(self) -> float | None:
        rec = self._best_record()
        return None if rec is None else rec.error_norm

    @property
    def res_at_min(self) -> float | None:
        rec = self._best_record()
        return None if rec is None else rec.residual_norm

    @property
    def nit(self) -> int:
        return self.best_m

    def _best_record(self) -> IterationRecord | None:
        for rec in self.history:
            if rec.m == self.best_m:
                return rec
        return None


class ShiftInvertOperator:
    """Action of Z = (A + lam*I)^-1 through a reused factorization."""

    def __init__(self, factorization: Factorization, lam: float):
        self.factorization = factorization
        self.lam = lam
        self.dimension = factorization.dimension

    def apply(self, v: np.ndarray) -> np.ndarray:
        return solve_factored(self.factorization, v)


class RatOperator:
    """Action of Q = (A^T A + lam H^T H)^-1 (H^T H) through reused factors."""

    def __init__(self, factorization: Factorization, gram_H: np.ndarray, lam: float):
        self.factorization = factorization
        self.gram_H = gram_H
        self.lam = lam
        self.dimension = factorization.dimension

    def apply(self, v: np.ndarray) -> np.ndarray:
        return solve_factored(self.factorization, self.gram_H @ v)


def second_difference_matrix(n: int) -> np.ndarray:
    """Tridiagonal n x n regularization matrix with 2 on the diagonal and -1
    off it (an SPD high-pass filter)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    H = 2.0 * np.eye(n)
    idx = np.arange(n - 1)
    H[idx, idx + 1] = -1.0
    H[idx + 1, idx] = -1.0
    return H


def eval_f_small(H, lam: float, singular_tol: float = _F_SINGULAR_TOL) -> np.ndarray:
    """First column of f(H) with f(z) = z/(1 - lam*z), i.e. the solution of
    (I - lam*H) y = H e_1.

    The function is rational, so one pivoted solve evaluates it exactly;
    nothing beyond the first-column action is ever needed. Before solving,
    a few inverse-iteration steps estimate the smallest eigenvalue of
    I - lam*H; if it is below ``singular_tol`` relative to the matrix scale,
    1/lam sits on an eigenvalue of H to working precision and
    :class:`SingularFunctionError` is raised so the caller can stop cleanly.
    """
    Hm = as_square_matrix(H)
    m = Hm.shape[0]
    rhs = Hm[:, 0].copy()
    B = np.eye(m) - lam * Hm
    try:
        F = lu_factor(B)
    except SingularMatrixError as exc:
        raise SingularFunctionError(
            "1/lam is an eigenvalue of H to working precision"
        ) from exc
    # eigenvalues of I - lam*H are 1 - lam*theta, so the natural scale is
    # O(1 + |lam| ||H||) regardless of how close the Ritz values sit to 1/lam
    scale = 1.0 + abs(lam) * norm2(Hm.ravel())
    floor = singular_tol * scale
    z = np.full(m, 1.0 / np.sqrt(m))
    for _ in range(3):
        z = solve_factored(F, z)
        growth = norm2(z)
        if growth * floor > 1.0:
            raise SingularFunctionError(
                "1/lam is an eigenvalue of H to working precision "
                f"(|eig|_min ~ {1.0 / growth:.2e}, scale {scale:.2e})"
            )
        if growth == 0.0:
            break
        z /= growth
    return solve_factored(F, rhs)


def _factor_shifted(A: np.ndarray, lam: float) -> Factorization:
    """Factor A + lam*I: Cholesky when the shifted matrix passes the symmetry
    test and is SPD, pivoted LU otherwise."""
    S = A + lam * np.eye(A.shape[0])
    try:
        if is_symmetric(S):
            try:
                return cholesky_factor(S)
            except NotSPDError:
                pass
        return lu_factor(S)
    except SingularMatrixError as exc:
        raise SingularMatrixError(
            f"A + {lam:g} I is singular to working precision; increase lam"
        ) from exc


class _HistoryTracker:
    """Accumulates per-iteration records and the best iterate."""

    def __init__(self, A, b, x_true):
        self.A = A
        self.b = b
        self.x_true = x_true
        self.history: list[IterationRecord] = []
        self.best_m = 0
        self.best_x = None
        self._best_key = np.inf

    def record(self, m: int, x: np.ndarray) -> IterationRecord:
        res = norm2(self.b - self.A @ x)
        err = None if self.x_true is None else norm2(x - self.x_true)
        rec = IterationRecord(m, err, res)
        self.history.append(rec)
        key = res if err is None else err
        if key < self._best_key:
            self._best_key = key
            self.best_m = m
            self.best_x = x
        return rec


def _resolve_max_iter(max_iter, n: int) -> int:
    if max_iter is None:
        return n
    max_iter = int(max_iter)
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    return max_iter


def ra_solve(A, b, lam: float, max_iter: int | None = None,
             residual_tol: float | None = None, x_true=None) -> SolveReport:
    """Rational Arnoldi refinement for A x = b.

    Factors A + lam*I once (Cholesky when SPD, else pivoted LU), runs Arnoldi
    on its inverse action, and records x_m = ||b|| V_m f(H_m) e_1 together
    with error and residual norms at every step. Stops on ``max_iter``
    (default: the system dimension), Krylov breakdown, or, when
    ``residual_tol`` is given, the first residual at or below it.
    """
    A = as_square_matrix(A)
    b = as_vector(b)
    if lam <= 0:
        raise ValueError("lam must be positive")
    if norm2(b) == 0.0:
        raise ValueError("right-hand side must be nonzero")
    n = A.shape[0]
    max_iter = _resolve_max_iter(max_iter, n)

    op = ShiftInvertOperator(_factor_shifted(A, lam), lam)
    d = arnoldi_start(op, b)
    tracker = _HistoryTracker(A, b, None if x_true is None else as_vector(x_true))
    reason = "max_iter"
    for m in range(1, min(max_iter, n) + 1):
        d = arnoldi_extend(op, d)
        try:
            y = eval_f_small(d.H, lam)
        except SingularFunctionError:
            reason = "f_singular"
            break
        rec = tracker.record(m, d.beta * (d.V @ y))
        if d.breakdown:
            reason = "breakdown"
            break
        if residual_tol is not None and rec.residual_norm <= residual_tol:
            reason = "residual_tol"
            break
    return SolveReport("ra", lam, tracker.history, tracker.best_m,
                       tracker.best_x, reason)


def riley_solve(A, b, lam: float, max_iter: int | None = None,
                x_true=None) -> SolveReport:
    """Iterated-refinement (Riley) solver: x_{k+1} = Z b + lam * Z x_k with
    x_0 = 0 and Z = (A + lam*I)^-1, reusing one factorization throughout."""
    A = as_square_matrix(A)
    b = as_vector(b)
    if lam <= 0:
        raise ValueError("lam must be positive")
    if norm2(b) == 0.0:
        raise ValueError("right-hand side must be nonzero")
    max_iter = _resolve_max_iter(max_iter, A.shape[0])

    F = _factor_shifted(A, lam)
    y = solve_factored(F, b)
    x = np.zeros_like(b)
    tracker = _HistoryTracker(A, b, None if x_true is None else as_vector(x_true))
    for k in range(1, max_iter + 1):
        x = y + lam * solve_factored(F, x)
        tracker.record(k, x)
    return SolveReport("riley", lam, tracker.history, tracker.best_m,
                       tracker.best_x, "max_iter")


def rat_solve(A, b_obs, H, lam: float, max_iter: int | None = None,
              x_true=None) -> SolveReport:
    """Arnoldi refinement of Tikhonov regularization for noisy right-hand
    sides.

    Factors A^T A + lam H^T H and H^T H (both Cholesky), starts the Krylov
    space from the solution of (H^T H) v = A^T b_obs, and iterates on
    Q = (A^T A + lam H^T H)^-1 (H^T H). The first iterate is the Tikhonov
    regularized solution itself; later iterates refine it through
    x_m = ||v|| V_m f(H_m) e_1.
    """
    A = as_square_matrix(A)
    b_obs = as_vector(b_obs)
    H = as_square_matrix(H)
    if lam <= 0:
        raise ValueError("lam must be positive")
    n = A.shape[0]
    if H.shape[0] != n:
        raise ValueError("regularization matrix must match the system dimension")
    max_iter = _resolve_max_iter(max_iter, n)

    G = H.T @ H
    G = (G + G.T) / 2.0
    M = A.T @ A + lam * G
    M = (M + M.T) / 2.0
    F_G = cholesky_factor(G)
    F_M = cholesky_factor(M)
    rhs = A.T @ b_obs
    v = solve_factored(F_G, rhs)
    # one step of iterative refinement: H^T H is the worst-conditioned solve
    # in the chain and the first iterate must reproduce the direct Tikhonov
    # solution to full working accuracy
    v += solve_factored(F_G, rhs - G @ v)
    op = RatOperator(F_M, G, lam)

    d = arnoldi_start(op, v)
    tracker = _HistoryTracker(A, b_obs, None if x_true is None else as_vector(x_true))
    reason = "max_iter"
    for m in range(1, min(max_iter, n) + 1):
        d = arnoldi_extend(op, d)
        if m == 1:
            # The first step yields the Tikhonov regularized solution:
            # beta * Q v1 = M^-1 (H^T H) v = M^-1 A^T b_obs, using the
            # defining relation of the starting vector (substituting the
            # exact product avoids the cancellation in forming (H^T H) v1).
            x = solve_factored(F_M, rhs)
        else:
            try:
                y = eval_f_small(d.H, lam)
            except SingularFunctionError:
                reason = "f_singular"
                break
            x = d.beta * (d.V @ y)
        tracker.record(m, x)
        if d.breakdown:
            reason = "breakdown"
            break
    return SolveReport("rat", lam, tracker.history, tracker.best_m,
                       tracker.best_x, reason)
