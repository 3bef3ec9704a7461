import numpy as np
import pytest

from rakit.baselines import cg_solve, cgls_solve, gmres_solve
from rakit.errors import IndefiniteMatrixError
from rakit.linalg import norm2
from rakit.problems import generate_fredholm


def _spd(rng, n, boost=None):
    B = rng.standard_normal((n, n))
    return B @ B.T + (boost if boost is not None else n) * np.eye(n)


class TestCG:
    def test_identity_one_step(self):
        b = np.array([1.0, -2.0, 3.0])
        r = cg_solve(np.eye(3), b)
        assert len(r.history) == 1
        np.testing.assert_allclose(r.best_x, b, rtol=1e-15)

    def test_finite_termination_distinct_eigenvalues(self):
        A = np.diag([1.0, 1.0, 4.0, 4.0, 9.0])
        b = np.ones(5)
        r = cg_solve(A, b, x_true=b / np.diag(A))
        # three distinct eigenvalues -> exact in at most three steps
        assert any(h.m <= 3 and h.error_norm <= 1e-10 for h in r.history)

    def test_indefinite_aborts(self):
        A = np.diag([1.0, -1.0])
        with pytest.raises(IndefiniteMatrixError):
            cg_solve(A, np.array([1.0, 1.0]))

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError):
            cg_solve(np.array([[1.0, 0.5], [0.0, 1.0]]), np.ones(2))

    def test_energy_norm_monotone(self):
        rng = np.random.default_rng(0)
        A = _spd(rng, 12)
        b = rng.standard_normal(12)
        x_star = np.linalg.solve(A, b)
        energies = []
        cg_solve(A, b, callback=lambda k, x: energies.append(
            float((x - x_star) @ (A @ (x - x_star)))))
        diffs = np.diff(energies)
        assert np.all(diffs <= 1e-12 * max(energies))


class TestGMRES:
    def test_identity_one_step(self):
        b = np.array([2.0, 1.0])
        r = gmres_solve(np.eye(2), b)
        assert len(r.history) == 1
        assert r.stopped_reason == "breakdown"  # lucky termination
        np.testing.assert_allclose(r.best_x, b, rtol=1e-14)

    def test_full_dimension_exactness(self):
        rng = np.random.default_rng(1)
        A = rng.standard_normal((8, 8)) + 8 * np.eye(8)
        b = rng.standard_normal(8)
        r = gmres_solve(A, b, max_iter=8)
        assert r.history[-1].residual_norm <= 1e-10 * norm2(b)

    def test_residual_monotone(self):
        rng = np.random.default_rng(2)
        A = rng.standard_normal((15, 15)) + 6 * np.eye(15)
        b = rng.standard_normal(15)
        r = gmres_solve(A, b, max_iter=15)
        res = [h.residual_norm for h in r.history]
        assert np.all(np.diff(res) <= 1e-12 * res[0])

    def test_eigenvector_rhs_lucky(self):
        A = np.diag([2.0, 5.0])
        r = gmres_solve(A, np.array([1.0, 0.0]))
        assert len(r.history) == 1
        assert r.stopped_reason == "breakdown"


class TestCGLS:
    def test_identity_one_step(self):
        b = np.array([1.0, 2.0])
        r = cgls_solve(np.eye(2), b)
        assert len(r.history) == 1
        np.testing.assert_allclose(r.best_x, b, rtol=1e-14)

    def test_orthogonal_matrix_one_step(self):
        th = 0.3
        A = np.array([[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]])
        b = np.array([1.0, -1.0])
        r = cgls_solve(A, b)
        assert r.history[0].residual_norm <= 1e-12

    def test_residual_monotone_on_consistent_system(self):
        rng = np.random.default_rng(3)
        A = rng.standard_normal((15, 15)) + 6 * np.eye(15)
        b = rng.standard_normal(15)
        r = cgls_solve(A, b, max_iter=15)
        res = [h.residual_norm for h in r.history]
        assert np.all(np.diff(res) <= 1e-12 * res[0])


def test_all_three_match_direct_solve_on_spd():
    rng = np.random.default_rng(4)
    A = _spd(rng, 10)
    b = rng.standard_normal(10)
    x_star = np.linalg.solve(A, b)
    for solver in (cg_solve, gmres_solve, cgls_solve):
        r = solver(A, b, max_iter=10)
        assert norm2(r.best_x - x_star) / norm2(x_star) <= 1e-8


def test_reference_values_on_ill_posed_problems():
    p = generate_fredholm("gravity", 100)
    assert cg_solve(p.A, p.b, x_true=p.x_true).err_min <= 1e-2

    p = generate_fredholm("baart", 120)
    assert gmres_solve(p.A, p.b, x_true=p.x_true).err_min <= 1e-3

    p = generate_fredholm("foxgood", 80)
    assert cgls_solve(p.A, p.b, x_true=p.x_true).err_min <= 1e-3

    p = generate_fredholm("shaw", 64)
    assert cgls_solve(p.A, p.b, x_true=p.x_true).err_min <= 0.3
