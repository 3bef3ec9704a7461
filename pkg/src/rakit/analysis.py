"""Shift selection and error theory for the rational refinement solvers.

Contains the conformal map of the shifted spectral interval, the a-priori
convergence bounds derived from it, the balanced shift lam* = sqrt(l1*lN)
and its heuristics, condition-number bounds for the rational evaluation, and
the a-posteriori error identities read off an Arnoldi decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateDenominatorError
from .krylov import ArnoldiDecomposition
from .linalg import (
    Factorization,
    SpectralEstimate,
    as_square_matrix,
    extreme_eigs_spd,
    fold_scaled,
    hessenberg_det_scaled,
    is_symmetric,
    lu_factor,
    norm2,
    solve_factored,
)

# Field-of-values constant of the error bound for nonsymmetric operators
# (Crouzeix-type bound); the symmetric path uses 1 and is the only one
# exercised by the shipped experiments.
NONSYMMETRIC_FOV_CONSTANT = 11.08
SYMMETRIC_FOV_CONSTANT = 1.0


@dataclass(frozen=True)
class IntervalMap:
    """Conformal map psi(w) = gamma*w + c0 + c1/w of the exterior of the unit
    disk onto the exterior of the interval
    [1/(lambdaN + lam), 1/(lambda1 + lam)]."""

    lambda1: float
    lambdaN: float
    lam: float
    gamma: float
    c0: float
    c1: float

    def psi(self, w: float) -> float:
        return self.gamma * w + self.c0 + self.c1 / w

    def psi_prime(self, w: float) -> float:
        return self.gamma - self.c1 / (w * w)


def interval_map(lambda1: float, lambdaN: float, lam: float) -> IntervalMap:
    """Conformal map data for the spectral interval of (A + lam*I)^-1."""
    if not (0 < lambda1 <= lambdaN):
        raise ValueError("need 0 < lambda1 <= lambdaN")
    if lam <= 0:
        raise ValueError("lam must be positive")
    lo = 1.0 / (lambdaN + lam)
    hi = 1.0 / (lambda1 + lam)
    gamma = 0.25 * (hi - lo)
    c0 = 0.5 * (hi + lo)
    return IntervalMap(lambda1, lambdaN, lam, gamma, c0, gamma)


def rhat(m: IntervalMap) -> float:
    """Radius at which the map hits the singularity 1/lam of the rational
    function: psi(rhat) = 1/lam, rhat = u + sqrt(u^2 - 1). Strictly
    decreasing in lam and unbounded as lam -> 0."""
    if m.lambda1 >= m.lambdaN:
        raise ValueError("rhat is undefined for a degenerate interval")
    spread = m.lambdaN - m.lambda1
    u = 2.0 * m.lambda1 * m.lambdaN / (m.lam * spread) + (m.lambdaN + m.lambda1) / spread
    return u + math.sqrt(u * u - 1.0)


@dataclass(frozen=True)
class AprioriBound:
    """Convergence bound on the uniform rational-approximation error over the
    spectral interval; decays like (m+1)/rhat^m once m exceeds ``mbar``."""

    rhat: float
    mbar: int
    lam: float
    psi_prime_rhat: float

    def bound_at(self, m: int) -> float:
        if m < 1:
            raise ValueError("m must be at least 1")
        r = self.rhat
        if m >= self.mbar:
            lead = (2.0 * math.e * self.mbar * r / (self.mbar * (r - 1.0) - 1.0)
                    / (self.lam**2 * self.psi_prime_rhat))
            return lead * math.exp(math.log(m + 1.0) - m * math.log(r))
        lead = (4.0 / (self.lam**2 * (r - 1.0) * self.psi_prime_rhat)
                * (r + 1.0) / (r - 1.0))
        return lead * math.exp(m * math.log(2.0 / (r + 1.0)))


def apriori_bound(m: IntervalMap) -> AprioriBound:
    """A-priori bound data for the interval map.

    Requires psi(1) < 1/lam (the interval lies strictly left of the
    singularity). ``mbar`` is the smallest positive integer with
    rhat/(mbar+1) < rhat - 1.
    """
    if not m.psi(1.0) < 1.0 / m.lam:
        raise ValueError(
            "psi(1) >= 1/lam: the function is not analytic on the interval's hull"
        )
    r = rhat(m)
    mbar = max(1, math.floor(1.0 / (r - 1.0)) + 1)
    while r / (mbar + 1.0) >= r - 1.0:  # guard floor rounding
        mbar += 1
    return AprioriBound(r, mbar, m.lam, m.psi_prime(r))


def lambda_star(est: SpectralEstimate) -> float:
    """Balanced shift sqrt(lambda_min * lambda_max); with it the shifted
    matrix satisfies kappa(A + lam* I) = sqrt(kappa(A))."""
    if est.lambda_min <= 0:
        raise ValueError("lambda_star requires a strictly positive lambda_min")
    return math.sqrt(est.lambda_min * est.lambda_max)


@dataclass(frozen=True)
class LambdaHeuristic:
    """Shift suggestion from a condition-number estimate: ``point`` is
    kappa^(-1/2); ``stable_range`` = (10*kappa^(-1/2), kappa^(-1/4)) trades
    accuracy for stability. ``well_conditioned`` flags kappa < 1e4, where the
    range degenerates (no regularization needed) and is returned ordered."""

    point: float
    stable_range: tuple[float, float]
    well_conditioned: bool


def lambda_heuristic(kappa_est: float) -> LambdaHeuristic:
    if kappa_est < 1:
        raise ValueError("a condition number is at least 1")
    point = kappa_est**-0.5
    lo = 10.0 * point
    hi = kappa_est**-0.25
    well = lo > hi
    if well:
        lo, hi = hi, lo
    return LambdaHeuristic(point, (lo, hi), well)


def convergence_factor(kappa: float) -> float:
    """Asymptotic error-reduction factor per iteration at the balanced shift:
    (kappa^(1/4) - 1)/(kappa^(1/4) + 1)."""
    if kappa < 1:
        raise ValueError("a condition number is at least 1")
    q = kappa**0.25
    return (q - 1.0) / (q + 1.0)


def cond_bound_spd(lambda1: float, lam: float) -> float:
    """SPD value (lam + lambda1)/lambda1 of the relative-conditioning bound
    for evaluating the rational function of the shifted inverse."""
    if lambda1 <= 0:
        raise ValueError("lambda1 must be positive")
    return (lam + lambda1) / lambda1


def estimate_condition(A, tol: float = 1e-6, max_iter: int = 2000) -> float:
    """Rough 2-norm condition estimate from power/inverse-power extremes.

    Symmetric matrices use their own extreme |eigenvalues|; general matrices
    use the square root of the extremes of A^T A. Saturates near 1/eps for
    numerically singular inputs, which is all the shift heuristics need.
    """
    A = as_square_matrix(A)
    n = A.shape[0]
    if is_symmetric(A):
        F = lu_factor(A)
        est = extreme_eigs_spd(
            lambda v: A @ v, lambda v: solve_factored(F, v), n, tol, max_iter
        )
        lo, hi = est.lambda_min, est.lambda_max
    else:
        G = A.T @ A
        G = (G + G.T) / 2.0
        F = lu_factor(G)
        est = extreme_eigs_spd(
            lambda v: G @ v, lambda v: solve_factored(F, v), n, tol, max_iter
        )
        lo, hi = math.sqrt(est.lambda_min), math.sqrt(est.lambda_max)
    if lo == 0.0:
        return math.inf
    return hi / lo


def _subdiagonal_factors(d: ArnoldiDecomposition) -> list[float]:
    m = d.m
    return [float(d.H[j, j - 1]) for j in range(1, m)] + [float(d.h_next)]


def _log2_ratio(d: ArnoldiDecomposition, lam: float, lam_power: int) -> float:
    """log2 of prod(h_{j+1,j}) / (lam^lam_power |q_m(1/lam)|) with q_m the
    characteristic polynomial of H_m, evaluated in scaled arithmetic."""
    qm, qex = hessenberg_det_scaled(d.H, 1.0 / lam)
    if qm == 0.0:
        raise DegenerateDenominatorError(
            "q_m(1/lam) vanished to working precision"
        )
    total = -(math.log2(abs(qm)) + qex) - lam_power * math.log2(lam)
    for f in _subdiagonal_factors(d):
        total += math.log2(abs(f))
    return total


def aposteriori_exact_error(d: ArnoldiDecomposition, A, F_A: Factorization,
                            lam: float) -> float:
    """Exact error norm ||x_m - x|| of the rational Arnoldi iterate, computed
    from the decomposition itself:

        ||b|| * prod_j h_{j+1,j} / (lam |q_m(1/lam)|) * ||A^-1 (A + lam I) v_{m+1}||

    which follows from the residual identity
    b - A x_m = ||b|| h_{m+1,m} [(I - lam H_m)^-1]_{m,1} (A + lam I) v_{m+1}
    together with the cofactor expansion of the resolvent's (m,1) entry.
    Needs a factorization of A itself for the trailing solve, so it is only
    usable where A is invertible at working precision. At breakdown the
    subdiagonal product vanishes and the error is exactly 0.
    """
    if d.m < 1:
        raise ValueError("need at least one Arnoldi step")
    A = as_square_matrix(A)
    if any(f == 0.0 for f in _subdiagonal_factors(d)):
        return 0.0
    if d.v_next is None:
        raise ValueError("decomposition lacks v_{m+1}")
    u = A @ d.v_next + lam * d.v_next
    u = solve_factored(F_A, u)
    return d.beta * norm2(u) * fold_scaled(*_scaled_exp2(_log2_ratio(d, lam, 1)))


def aposteriori_relative_bound(d: ArnoldiDecomposition, A, lam: float) -> float:
    """Computable a-posteriori bound on the relative error ||x_m - x||/||x||.

    The operator norm ||(A + lam I)^m q_m(Z)|| of the underlying identity is
    realized through its action on the starting vector, for which
    q_m(Z) b = beta * prod_j h_{j+1,j} * v_{m+1}; no polynomial coefficients
    are ever formed. Returns 0 at breakdown.
    """
    if d.m < 1:
        raise ValueError("need at least one Arnoldi step")
    A = as_square_matrix(A)
    if d.breakdown or any(f == 0.0 for f in _subdiagonal_factors(d)):
        return 0.0
    u = d.v_next.copy()
    for _ in range(d.m):
        u = A @ u + lam * u
    return norm2(u) * fold_scaled(*_scaled_exp2(_log2_ratio(d, lam, d.m)))


def _scaled_exp2(log2_value: float) -> tuple[float, int]:
    ex = math.floor(log2_value)
    return math.pow(2.0, log2_value - ex), ex
