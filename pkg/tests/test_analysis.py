import math

import numpy as np
import pytest

from rakit.analysis import (
    NONSYMMETRIC_FOV_CONSTANT,
    SYMMETRIC_FOV_CONSTANT,
    aposteriori_exact_error,
    aposteriori_relative_bound,
    apriori_bound,
    cond_bound_spd,
    convergence_factor,
    estimate_condition,
    interval_map,
    lambda_heuristic,
    lambda_star,
    rhat,
)
from rakit.errors import DegenerateDenominatorError
from rakit.krylov import arnoldi_extend, arnoldi_start
from rakit.linalg import SpectralEstimate, lu_factor, norm2, solve_factored
from rakit.solvers import ShiftInvertOperator, eval_f_small, ra_solve


class TestIntervalMap:
    def test_hand_values(self):
        m = interval_map(1.0, 4.0, 2.0)
        assert m.gamma == pytest.approx(1.0 / 24.0)
        assert m.c0 == pytest.approx(0.25)
        assert m.c1 == m.gamma

    def test_degenerate_interval(self):
        m = interval_map(2.0, 2.0, 1.0)
        assert m.gamma == 0.0
        assert m.c0 == pytest.approx(1.0 / 3.0)

    def test_endpoints_mapped(self):
        # psi(-1) = c0 - 2*gamma cancels, so the representable regime of the
        # 1e-12 endpoint identity is interval ratios up to ~1e3
        rng = np.random.default_rng(0)
        for _ in range(25):
            l1 = 10.0 ** rng.uniform(-8, 0)
            lN = l1 * 10.0 ** rng.uniform(0.1, 3)
            lam = 10.0 ** rng.uniform(-6, 1)
            m = interval_map(l1, lN, lam)
            assert m.psi(1.0) == pytest.approx(1.0 / (l1 + lam), rel=1e-12)
            assert m.psi(-1.0) == pytest.approx(1.0 / (lN + lam), rel=1e-12)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            interval_map(0.0, 1.0, 1.0)
        with pytest.raises(ValueError):
            interval_map(2.0, 1.0, 1.0)
        with pytest.raises(ValueError):
            interval_map(1.0, 2.0, 0.0)


class TestRhat:
    def test_hand_value_and_pole_image(self):
        m = interval_map(1.0, 4.0, 2.0)
        r = rhat(m)
        assert r == pytest.approx(3.0 + 2.0 * math.sqrt(2.0), rel=1e-14)
        assert m.psi(r) == pytest.approx(0.5, rel=1e-12)

    def test_bisection_oracle(self):
        # psi is increasing on (1, inf), so bisect psi(r) = 1/lam directly
        m = interval_map(1e-3, 2.0, 0.05)
        lo, hi = 1.0 + 1e-12, 1e12
        for _ in range(200):
            mid = math.sqrt(lo * hi)
            if m.psi(mid) < 1.0 / m.lam:
                lo = mid
            else:
                hi = mid
        assert rhat(m) == pytest.approx(math.sqrt(lo * hi), rel=1e-9)

    def test_blows_up_as_shift_vanishes(self):
        assert rhat(interval_map(1.0, 2.0, 1e-12)) > 1e6

    def test_monotone_decreasing_in_shift(self):
        vals = [rhat(interval_map(1e-4, 1.0, lam)) for lam in (0.1, 1.0, 10.0)]
        assert vals[0] > vals[1] > vals[2]

    def test_pole_image_property_random_triples(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            l1 = 10.0 ** rng.uniform(-10, 0)
            lN = l1 * 10.0 ** rng.uniform(0.3, 8)
            lam = 10.0 ** rng.uniform(-8, 2)
            m = interval_map(l1, lN, lam)
            assert abs(m.psi(rhat(m)) - 1.0 / lam) <= 1e-10 / lam

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            rhat(interval_map(1.0, 1.0, 1.0))


class TestAprioriBound:
    def test_mbar_smallest_integer(self):
        # engineered so rhat = 3: mbar must satisfy 3/(mbar+1) < 2
        m = interval_map(1.0, 9.0, 5.4)
        b = apriori_bound(m)
        assert b.rhat == pytest.approx(3.0, rel=1e-12)
        assert b.mbar == 1

    def test_asymptotic_ratio_structure(self):
        b = apriori_bound(interval_map(1.0, 4.0, 2.0))
        got = b.bound_at(201) / b.bound_at(200)
        want = (1.0 / b.rhat) * 202.0 / 201.0
        assert got == pytest.approx(want, rel=1e-2)

    def test_monotone_decay_on_flat_spectrum(self):
        b = apriori_bound(interval_map(1e-15, 3.0, 1e-9))
        vals = [b.bound_at(m) for m in range(1, 51)]
        assert all(v > 0 and np.isfinite(v) for v in vals)
        assert all(vals[i + 1] < vals[i] for i in range(49))

    def test_positive_finite_generally(self):
        b = apriori_bound(interval_map(1e-4, 1.0, 1e-2))
        for m in (1, b.mbar, b.mbar + 1, 50, 400):
            v = b.bound_at(m)
            assert np.isfinite(v) and v > 0


class TestLambdaStar:
    def test_geometric_mean(self):
        est = SpectralEstimate(1e-6, 1.0, 10, True)
        assert lambda_star(est) == pytest.approx(1e-3)

    def test_equal_extremes(self):
        est = SpectralEstimate(0.7, 0.7, 2, True)
        assert lambda_star(est) == pytest.approx(0.7)

    def test_balances_shifted_condition_number(self):
        for l1, lN in ((1e-6, 1.0), (1e-8, 2.0), (3e-5, 0.4)):
            est = SpectralEstimate(l1, lN, 1, True)
            ls = lambda_star(est)
            shifted = (lN + ls) / (l1 + ls)
            assert shifted == pytest.approx(math.sqrt(lN / l1), rel=1e-12)

    def test_requires_positive_minimum(self):
        with pytest.raises(ValueError):
            lambda_star(SpectralEstimate(0.0, 1.0, 1, True))


class TestLambdaHeuristic:
    def test_standard_case(self):
        h = lambda_heuristic(1e16)
        assert h.point == pytest.approx(1e-8)
        assert h.stable_range[0] == pytest.approx(1e-7)
        assert h.stable_range[1] == pytest.approx(1e-4)
        assert not h.well_conditioned

    def test_degenerate_flags_well_conditioned(self):
        h = lambda_heuristic(1.0)
        assert h.well_conditioned
        assert h.stable_range[0] <= h.stable_range[1]

    def test_power(self):
        assert lambda_heuristic(1e12).point == pytest.approx(1e-6)


class TestConvergenceFactor:
    def test_values(self):
        assert convergence_factor(1.0) == 0.0
        assert convergence_factor(1e4) == pytest.approx(9.0 / 11.0)
        assert convergence_factor(1e8) == pytest.approx(99.0 / 101.0)


class TestCondBound:
    def test_values(self):
        assert cond_bound_spd(2.0, 0.0) == pytest.approx(1.0)
        assert cond_bound_spd(3.0, 3.0) == pytest.approx(2.0)

    def test_matches_shifted_condition_at_balanced_shift(self):
        l1, lN = 1e-8, 1.0
        ls = math.sqrt(l1 * lN)
        assert cond_bound_spd(l1, ls) == pytest.approx((lN + ls) / (l1 + ls), rel=1e-3)


def test_fov_constants_exposed():
    assert SYMMETRIC_FOV_CONSTANT == 1.0
    assert NONSYMMETRIC_FOV_CONSTANT == 11.08


class TestAposteriori:
    def _decomposition(self, rng, n=12, lam=0.1, steps=3):
        Q, _ = np.linalg.qr(rng.standard_normal((n, n)))
        A = Q @ np.diag(np.logspace(0, 3, n)) @ Q.T
        A = (A + A.T) / 2
        b = rng.standard_normal(n)
        op = ShiftInvertOperator(lu_factor(A + lam * np.eye(n)), lam)
        d = arnoldi_start(op, b)
        for _ in range(steps):
            d = arnoldi_extend(op, d)
        return A, b, d

    def test_exact_error_matches_direct_oracle(self):
        rng = np.random.default_rng(12)
        lam = 0.1
        A, b, d = self._decomposition(rng, steps=3)
        F_A = lu_factor(A)
        x = solve_factored(F_A, b)
        y = eval_f_small(d.H, lam)
        xm = d.beta * (d.V @ y)
        true_err = norm2(xm - x)
        assert aposteriori_exact_error(d, A, F_A, lam) == pytest.approx(true_err, rel=1e-6)

    def test_zero_at_breakdown(self):
        lam = 0.5
        A = np.diag([2.0, 2.0, 2.0])
        op = ShiftInvertOperator(lu_factor(A + lam * np.eye(3)), lam)
        d = arnoldi_extend(op, arnoldi_start(op, np.ones(3)))
        assert d.breakdown
        d_zero = d.__class__(d.V, d.H, 0.0, None, d.beta, d.m, True)
        assert aposteriori_exact_error(d_zero, A, lu_factor(A), lam) == 0.0
        assert aposteriori_relative_bound(d, A, lam) == 0.0

    def test_one_dimensional_both_zero(self):
        A = np.array([[3.0]])
        lam = 0.2
        op = ShiftInvertOperator(lu_factor(A + lam * np.eye(1)), lam)
        d = arnoldi_extend(op, arnoldi_start(op, np.array([1.0])))
        assert aposteriori_relative_bound(d, A, lam) == 0.0

    def test_bound_dominates_true_relative_error(self):
        rng = np.random.default_rng(13)
        lam = 0.1
        for _ in range(8):
            A, b, d0 = self._decomposition(rng, steps=0)
            op = ShiftInvertOperator(lu_factor(A + lam * np.eye(12)), lam)
            d = d0
            F_A = lu_factor(A)
            x = solve_factored(F_A, b)
            for _ in range(4):
                d = arnoldi_extend(op, d)
                y = eval_f_small(d.H, lam)
                xm = d.beta * (d.V @ y)
                true_rel = norm2(xm - x) / norm2(x)
                assert aposteriori_relative_bound(d, A, lam) >= 0.99 * true_rel

    def test_degenerate_denominator(self):
        # eigenvalues of H are {2, 1} and 1/lam = 2, so q_m(1/lam) = 0
        lam = 0.5
        from rakit.krylov import ArnoldiDecomposition

        d = ArnoldiDecomposition(
            V=np.eye(2), H=np.array([[2.0, 0.0], [0.3, 1.0]]), h_next=0.2,
            v_next=np.array([0.0, 0.0]), beta=1.0, m=2, breakdown=False,
        )
        with pytest.raises(DegenerateDenominatorError):
            aposteriori_relative_bound(d, np.eye(2), lam)


class TestEstimateCondition:
    def test_diagonal(self):
        A = np.diag([1e-3, 1.0, 5.0])
        assert estimate_condition(A) == pytest.approx(5000.0, rel=1e-4)

    def test_nonsymmetric_uses_singular_values(self):
        rng = np.random.default_rng(14)
        Q1, _ = np.linalg.qr(rng.standard_normal((8, 8)))
        Q2, _ = np.linalg.qr(rng.standard_normal((8, 8)))
        A = Q1 @ np.diag(np.logspace(-3, 0, 8)) @ Q2.T
        assert estimate_condition(A) == pytest.approx(1e3, rel=1e-2)


def test_convergence_factor_matches_measured_decay():
    # geometric spectrum, kappa = 1e4, shift at the balanced value
    diag = np.logspace(-4, 0, 100)
    A = np.diag(diag)
    rng = np.random.default_rng(42)
    b = rng.standard_normal(100)
    r = ra_solve(A, b, 1e-2, max_iter=45, x_true=b / diag)
    errs = np.array([h.error_norm for h in r.history])
    gm = float(np.exp(np.mean(np.log(errs[10:41] / errs[9:40]))))
    assert 0.75 <= gm <= 0.90
    assert convergence_factor(1e4) == pytest.approx(0.8182, abs=1e-4)


def test_apriori_bound_dominates_measured_error():
    diag = np.logspace(-4, 0, 40)
    A = np.diag(diag)
    rng = np.random.default_rng(11)
    b = rng.standard_normal(40)
    lam = 1e-2
    bound = apriori_bound(interval_map(diag[0], diag[-1], lam))
    r = ra_solve(A, b, lam, max_iter=38, x_true=b / diag)
    for h in r.history:
        assert h.error_norm <= 2.0 * SYMMETRIC_FOV_CONSTANT * bound.bound_at(h.m) * norm2(b)
