"""Dense factorizations, triangular solves, norms, Hessenberg determinants,
and spectral-extreme estimation.

All routines work on plain float64 NumPy arrays in row-major order. The
factorization and orthogonalization inner loops are delegated to the kernel
backend (compiled extension or NumPy fallback, see :mod:`rakit.backend`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .backend import kernels
from .errors import NotSPDError, SingularMatrixError

SYMMETRY_RTOL = 1e-12
HESSENBERG_RTOL = 1e-14


def as_matrix(A) -> np.ndarray:
    """Coerce to a C-contiguous float64 matrix, rejecting non-finite entries."""
    M = np.array(A, dtype=np.float64, order="C", copy=True)
    if M.ndim != 2:
        raise ValueError("expected a 2-D array")
    if M.size and not np.all(np.isfinite(M)):
        raise ValueError("matrix entries must be finite")
    return M


def as_square_matrix(A) -> np.ndarray:
    M = as_matrix(A)
    if M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    return M


def as_vector(v) -> np.ndarray:
    """Coerce to a contiguous float64 vector, rejecting non-finite entries."""
    w = np.array(v, dtype=np.float64, copy=True).ravel()
    if w.size and not np.all(np.isfinite(w)):
        raise ValueError("vector entries must be finite")
    return w


def norm2(v) -> float:
    """Euclidean norm."""
    return float(np.linalg.norm(np.asarray(v, dtype=np.float64)))


def is_symmetric(A, rtol: float = SYMMETRY_RTOL) -> bool:
    """True when max|A - A^T| <= rtol * max|A|."""
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        return False
    if A.size == 0:
        return True
    scale = float(np.max(np.abs(A)))
    return float(np.max(np.abs(A - A.T))) <= rtol * scale


@dataclass(frozen=True)
class Factorization:
    """Reusable triangular factorization of a square matrix.

    ``kind`` is ``"lu"`` (row-pivoted, P A = L U with unit-lower L) or
    ``"cholesky"`` (A = L L^T with strictly positive diagonal). ``data``
    stores the factors packed into one array; ``pivots`` records the
    successive row swaps of the elimination (LU only).
    """

    kind: str
    data: np.ndarray
    pivots: np.ndarray | None
    dimension: int

    @property
    def L(self) -> np.ndarray:
        if self.kind == "cholesky":
            return self.data.copy()
        L = np.tril(self.data, -1)
        np.fill_diagonal(L, 1.0)
        return L

    @property
    def U(self) -> np.ndarray:
        if self.kind == "cholesky":
            return self.data.T.copy()
        return np.triu(self.data)

    @property
    def permutation(self) -> np.ndarray:
        """Row permutation p with (P A)[i] == A[p[i]]."""
        perm = np.arange(self.dimension)
        if self.pivots is not None:
            for k, p in enumerate(self.pivots):
                if p != k:
                    perm[k], perm[p] = perm[p], perm[k]
        return perm


def lu_factor(A) -> Factorization:
    """Row-pivoted LU factorization.

    Raises
    ------
    SingularMatrixError
        When a pivot is zero to working precision (below 1e-300); the
        message names the offending column. Tiny nonzero pivots are kept so
        that numerically singular test matrices still factor.
    """
    M = as_square_matrix(A)
    n = M.shape[0]
    piv = np.zeros(n, dtype=np.intp)
    bad = kernels.lu_factor_inplace(M, piv)
    if bad:
        raise SingularMatrixError(
            f"matrix is singular to working precision at column {bad - 1}"
        )
    return Factorization("lu", M, piv, n)


def cholesky_factor(A) -> Factorization:
    """Cholesky factorization A = L L^T of an SPD matrix.

    The input must pass the symmetry test (relative 1e-12). A non-positive
    pivot raises :class:`NotSPDError`; callers that accept general matrices
    fall back to :func:`lu_factor`.
    """
    M = as_square_matrix(A)
    if not is_symmetric(M):
        raise ValueError("matrix is not symmetric to relative 1e-12")
    bad = kernels.cholesky_inplace(M)
    if bad:
        raise NotSPDError(
            f"matrix is not positive definite (non-positive pivot at row {bad - 1})"
        )
    return Factorization("cholesky", M, None, M.shape[0])


def solve_factored(F: Factorization, r) -> np.ndarray:
    """Solve (original matrix) @ y = r through the stored factors."""
    x = as_vector(r)
    if x.size != F.dimension:
        raise ValueError(
            f"right-hand side has length {x.size}, factorization is {F.dimension}"
        )
    if F.kind == "cholesky":
        kernels.cholesky_solve_inplace(F.data, x)
    else:
        kernels.lu_solve_inplace(F.data, F.pivots, x)
    return x


@dataclass(frozen=True)
class SpectralEstimate:
    """Extreme-eigenvalue estimates of an SPD operator."""

    lambda_min: float
    lambda_max: float
    iterations_used: int
    converged: bool


def extreme_eigs_spd(
    apply: Callable[[np.ndarray], np.ndarray],
    apply_inverse: Callable[[np.ndarray], np.ndarray],
    n: int,
    tol: float = 1e-8,
    max_iter: int = 1000,
) -> SpectralEstimate:
    """Estimate the extreme eigenvalues of an SPD operator.

    lambda_max comes from power iteration on ``apply``, lambda_min from power
    iteration on ``apply_inverse``; each loop stops when successive Rayleigh
    quotients agree to relative ``tol``. Exceeding ``max_iter`` never raises:
    the best estimates are returned with ``converged=False`` (shift selection
    tolerates rough estimates).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    rng = np.random.default_rng(0x5EED)  # fixed start: estimates are deterministic
    v0 = rng.standard_normal(n)
    v0 /= norm2(v0)

    def _power(action):
        v = v0.copy()
        rayleigh = 0.0
        for it in range(1, max_iter + 1):
            w = np.asarray(action(v), dtype=np.float64)
            r = float(np.dot(v, w))
            nw = norm2(w)
            if nw == 0.0:
                return 0.0, it, True
            v = w / nw
            if it > 1 and abs(r - rayleigh) <= tol * abs(r):
                return r, it, True
            rayleigh = r
        return rayleigh, max_iter, False

    r_max, it_max, ok_max = _power(apply)
    r_inv, it_inv, ok_inv = _power(apply_inverse)
    lambda_max = abs(r_max)
    lambda_min = 1.0 / abs(r_inv) if r_inv != 0.0 else 0.0
    if lambda_min > lambda_max:
        lambda_min, lambda_max = lambda_max, lambda_min
    return SpectralEstimate(lambda_min, lambda_max, it_max + it_inv, ok_max and ok_inv)


def _require_hessenberg(H: np.ndarray) -> None:
    n = H.shape[0]
    if n <= 2:
        return
    lower = np.abs(np.tril(H, -2))
    scale = float(np.max(np.abs(H))) if H.size else 0.0
    if float(np.max(lower)) > HESSENBERG_RTOL * scale:
        raise ValueError("matrix is not upper Hessenberg to relative 1e-14")


def _scaled_mul(mant: float, ex: int, factor: float) -> tuple[float, int]:
    mant *= factor
    if mant == 0.0:
        return 0.0, 0
    m, e = math.frexp(mant)
    return m, ex + e


def hessenberg_det_scaled(H, shift: float = 0.0) -> tuple[float, int]:
    """det(H - shift*I) of an upper Hessenberg matrix as (mantissa, exp2).

    Uses Hyman's recurrence per unreduced diagonal block (blocks split at
    exactly-zero subdiagonals), tracking a power-of-two scale so that the
    huge dynamic ranges of shifted projections never overflow.
    """
    B = as_square_matrix(H)
    _require_hessenberg(B)
    n = B.shape[0]
    if n == 0:
        return 0.5, 1  # det of the empty matrix is 1
    idx = np.arange(n)
    B[idx, idx] -= shift

    mant, ex = 0.5, 1  # running product, starts at 1
    start = 0
    for stop in range(1, n + 1):
        if stop < n and B[stop, stop - 1] != 0.0:
            continue
        k = stop - start
        blk = B[start:stop, start:stop]
        if k == 1:
            mant, ex = _scaled_mul(mant, ex, blk[0, 0])
        else:
            # Hyman: pick x with x[k-1]=1 so rows 2..k of (blk @ x) vanish,
            # then det = (-1)^(k-1) * prod(subdiag) * (row 1 of blk) @ x.
            x = np.zeros(k)
            x[k - 1] = 1.0
            sx = 0
            for i in range(k - 2, -1, -1):
                x[i] = -np.dot(blk[i + 1, i + 1 :], x[i + 1 :]) / blk[i + 1, i]
                big = abs(x[i])
                if big > 1e150:
                    _, e = math.frexp(big)
                    x *= math.ldexp(1.0, -e)
                    sx += e
            c = float(np.dot(blk[0, :], x))
            mant, ex = _scaled_mul(mant, ex + sx, c)
            for i in range(k - 1):
                mant, ex = _scaled_mul(mant, ex, blk[i + 1, i])
            if (k - 1) % 2:
                mant = -mant
        if mant == 0.0:
            return 0.0, 0
        start = stop
    return mant, ex


def fold_scaled(mant: float, ex: int) -> float:
    """Collapse a (mantissa, exp2) pair to a float, saturating to +-inf / 0."""
    if mant == 0.0:
        return 0.0
    if ex > 1100:
        return math.inf if mant > 0 else -math.inf
    if ex < -1100:
        return 0.0
    return math.ldexp(mant, ex)


def hessenberg_det(H, shift: float = 0.0) -> float:
    """det(H - shift*I) via Hyman's recurrence, folded to a float when
    representable (saturates to +-inf / 0 outside double range)."""
    return fold_scaled(*hessenberg_det_scaled(H, shift))
