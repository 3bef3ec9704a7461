import numpy as np
import pytest

from rakit.krylov import MatrixOperator, arnoldi_extend, arnoldi_start


def _horner_on_matrix_action(coeffs, apply, b):
    """Evaluate p(Z) b for p given by highest-first coefficients."""
    y = coeffs[0] * b
    for c in coeffs[1:]:
        y = apply(y) + c * b
    return y


def _horner_on_small(coeffs, H, e1):
    y = coeffs[0] * e1
    for c in coeffs[1:]:
        y = H @ y + c * e1
    return y


class TestStart:
    def test_unit_vector(self):
        op = MatrixOperator(np.eye(3))
        d = arnoldi_start(op, [1.0, 0.0, 0.0])
        assert d.m == 0
        assert d.beta == pytest.approx(1.0)
        np.testing.assert_allclose(d.v_next, [1.0, 0.0, 0.0])

    def test_normalization(self):
        op = MatrixOperator(np.eye(2))
        d = arnoldi_start(op, [3.0, 4.0])
        assert d.beta == pytest.approx(5.0)
        np.testing.assert_allclose(d.v_next, [0.6, 0.8])

    def test_norm_of_ones(self):
        op = MatrixOperator(np.eye(4))
        d = arnoldi_start(op, np.ones(4))
        assert d.beta == pytest.approx(2.0)

    def test_zero_vector_rejected(self):
        op = MatrixOperator(np.eye(3))
        with pytest.raises(ValueError):
            arnoldi_start(op, np.zeros(3))


class TestExtend:
    def test_scaled_identity_breaks_down_immediately(self):
        op = MatrixOperator(2.5 * np.eye(4))
        d = arnoldi_extend(op, arnoldi_start(op, np.ones(4)))
        assert d.m == 1
        assert d.breakdown
        assert d.H[0, 0] == pytest.approx(2.5)
        assert d.h_next <= 1e-14 * 2.5 * 2.0
        assert d.v_next is None

    def test_diag_first_projection(self):
        op = MatrixOperator(np.diag([1.0, 2.0]))
        b = np.array([1.0, 1.0]) / np.sqrt(2.0)
        d = arnoldi_extend(op, arnoldi_start(op, b))
        assert d.H[0, 0] == pytest.approx(1.5)

    def test_exhaustion_at_space_dimension(self):
        op = MatrixOperator(np.diag([1.0, 2.0]))
        b = np.array([1.0, 1.0]) / np.sqrt(2.0)
        d = arnoldi_extend(op, arnoldi_start(op, b))
        d = arnoldi_extend(op, d)
        assert d.m == 2
        assert d.breakdown

    def test_breakdown_at_minimal_polynomial_degree(self):
        op = MatrixOperator(np.diag([1.0, 1.0, 2.0, 2.0, 3.0]))
        d = arnoldi_start(op, np.ones(5))
        while not d.breakdown:
            d = arnoldi_extend(op, d)
        assert d.m == 3  # three distinct eigenvalues

    def test_extending_past_breakdown_rejected(self):
        op = MatrixOperator(np.eye(3))
        d = arnoldi_extend(op, arnoldi_start(op, np.ones(3)))
        assert d.breakdown
        with pytest.raises(ValueError):
            arnoldi_extend(op, d)

    def test_extending_past_dimension_rejected(self):
        rng = np.random.default_rng(0)
        A = np.eye(3) + 0.1 * rng.standard_normal((3, 3))
        op = MatrixOperator(A)
        d = arnoldi_start(op, rng.standard_normal(3))
        for _ in range(3):
            d = arnoldi_extend(op, d)
        if not d.breakdown:
            with pytest.raises(ValueError):
                arnoldi_extend(op, d)


def test_operators_are_linear_to_roundoff():
    from rakit.linalg import lu_factor
    from rakit.solvers import ShiftInvertOperator

    rng = np.random.default_rng(77)
    A = np.eye(12) + 0.2 * rng.standard_normal((12, 12))
    ops = [
        MatrixOperator(A),
        ShiftInvertOperator(lu_factor(A + 0.5 * np.eye(12)), 0.5),
    ]
    for op in ops:
        for _ in range(10):
            u = rng.standard_normal(12)
            v = rng.standard_normal(12)
            a, c = rng.standard_normal(2)
            lhs = op.apply(a * u + c * v)
            rhs = a * op.apply(u) + c * op.apply(v)
            assert np.linalg.norm(lhs - rhs) <= 1e-10 * (
                np.linalg.norm(u) + np.linalg.norm(v))


@pytest.mark.parametrize("kind", ["spd", "nonsymmetric"])
def test_orthonormality_and_relation_invariants(kind):
    rng = np.random.default_rng(hash(kind) % 2**32)
    n = 60
    if kind == "spd":
        Q, _ = np.linalg.qr(rng.standard_normal((n, n)))
        A = Q @ np.diag(rng.uniform(1.0, 2.0, n)) @ Q.T
    else:
        A = np.eye(n) + 0.3 * rng.standard_normal((n, n))
    op = MatrixOperator(A)
    b = rng.standard_normal(n)
    d = arnoldi_start(op, b)
    for _ in range(30):
        d = arnoldi_extend(op, d)
        VtV = d.V.T @ d.V
        assert np.abs(VtV - np.eye(d.m)).max() <= 1e-10
        ZV = A @ d.V
        R = ZV - d.V @ d.H
        if d.v_next is not None:
            R[:, -1] -= d.h_next * d.v_next
        assert np.abs(R).max() <= 1e-10 * max(np.abs(d.H).max(), 1.0)
        if d.breakdown:
            break


@pytest.mark.parametrize("kind", ["spd", "nonsymmetric"])
def test_polynomial_exactness(kind):
    rng = np.random.default_rng(0xBADD if kind == "spd" else 0xFEED)
    n = 40
    if kind == "spd":
        Q, _ = np.linalg.qr(rng.standard_normal((n, n)))
        A = Q @ np.diag(rng.uniform(0.5, 2.0, n)) @ Q.T
    else:
        A = np.eye(n) + rng.standard_normal((n, n)) / (2.0 * np.sqrt(n))
    op = MatrixOperator(A)
    b = rng.standard_normal(n)
    d = arnoldi_start(op, b)
    for m in range(1, 21):
        d = arnoldi_extend(op, d)
        if d.breakdown:
            break
        deg = int(rng.integers(0, m))
        coeffs = rng.uniform(-1.0, 1.0, deg + 1)
        e1 = np.zeros(m)
        e1[0] = 1.0
        lhs = d.beta * (d.V @ _horner_on_small(coeffs, d.H, e1))
        rhs = _horner_on_matrix_action(coeffs, lambda v: A @ v, b)
        assert np.linalg.norm(lhs - rhs) <= 1e-8 * np.linalg.norm(rhs)
