"""Arnoldi iteration against an abstract linear operator.

Decompositions are immutable snapshots; :func:`arnoldi_extend` returns a new
value holding one more basis vector. Orthogonalization is modified
Gram-Schmidt with one unconditional reorthogonalization pass, which keeps the
basis orthonormal even for severely ill-conditioned operators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .linalg import as_square_matrix, as_vector, norm2

BREAKDOWN_TOL = 1e-14


class MatrixOperator:
    """Wrap a dense square matrix as an operator with ``dimension``/``apply``."""

    def __init__(self, A):
        self.A = as_square_matrix(A)
        self.dimension = self.A.shape[0]

    def apply(self, v: np.ndarray) -> np.ndarray:
        return self.A @ v


@dataclass(frozen=True)
class ArnoldiDecomposition:
    """Orthonormal basis V (n, m), Hessenberg projection H (m, m), trailing
    subdiagonal scalar ``h_next`` = h_{m+1,m}, next basis vector ``v_next``
    (None after breakdown), and the starting norm ``beta``.

    Satisfies Z V = V H + h_next * v_next e_m^T with V^T V = I.
    """

    V: np.ndarray
    H: np.ndarray
    h_next: float
    v_next: np.ndarray | None
    beta: float
    m: int
    breakdown: bool


def arnoldi_start(op, b) -> ArnoldiDecomposition:
    """Zero-step state: v_next = b/||b||, beta = ||b||."""
    w = as_vector(b)
    if w.size != op.dimension:
        raise ValueError(f"b has length {w.size}, operator dimension is {op.dimension}")
    beta = norm2(w)
    if beta == 0.0:
        raise ValueError("starting vector must be nonzero")
    n = w.size
    return ArnoldiDecomposition(
        V=np.empty((n, 0)),
        H=np.empty((0, 0)),
        h_next=0.0,
        v_next=w / beta,
        beta=beta,
        m=0,
        breakdown=False,
    )


def arnoldi_extend(op, d: ArnoldiDecomposition,
                   breakdown_tol: float = BREAKDOWN_TOL) -> ArnoldiDecomposition:
    """One Arnoldi step: orthogonalize Z v_{m+1} against v_1..v_{m+1} and
    append column m+1 of H. Breakdown is declared when the remainder norm
    falls below ``breakdown_tol`` relative to the pre-orthogonalization norm.
    """
    if d.breakdown:
        raise ValueError("cannot extend an Arnoldi decomposition past breakdown")
    if d.m >= op.dimension:
        raise ValueError("Krylov basis already spans the full space")
    m = d.m
    n = d.v_next.size
    V = np.empty((n, m + 1))
    V[:, :m] = d.V
    V[:, m] = d.v_next

    w = np.array(op.apply(d.v_next), dtype=np.float64).ravel()
    if w.size != n:
        raise ValueError("operator apply changed the vector length")
    w_norm = norm2(w)
    h = np.zeros(m + 1)
    kernels.mgs_orthogonalize(V, m + 1, w, h)
    h_next = norm2(w)

    H = np.zeros((m + 1, m + 1))
    H[:m, :m] = d.H
    H[: m + 1, m] = h
    if m:
        H[m, m - 1] = d.h_next  # subdiagonal entry held outside H until now

    if h_next <= breakdown_tol * w_norm:
        return ArnoldiDecomposition(V, H, h_next, None, d.beta, m + 1, True)
    return ArnoldiDecomposition(V, H, h_next, w / h_next, d.beta, m + 1, False)
