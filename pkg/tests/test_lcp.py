import numpy as np
import pytest

from lcpbounds.errors import (
    DimensionMismatch,
    DimensionTooLarge,
    InapplicableBound,
    NoSolution,
)
from lcpbounds.lcp import (
    LcpInstance,
    certify_error_bound,
    feasible_bases,
    is_p_matrix,
    residual,
    solve_lcp,
    trial_points,
)
from lcpbounds.linalg import inf_norm
from lcpbounds.nekrasov import new_nekrasov_bound
from lcpbounds.bnekrasov import new_bnekrasov_bound


def projected_gauss_seidel(m, q, x0, iterations=500):
    """Independent fixed-point refinement used to cross-check solutions."""
    x = np.array(x0, dtype=float)
    for _ in range(iterations):
        for i in range(len(x)):
            x[i] = max(0.0, x[i] - (m[i] @ x + q[i]) / m[i, i])
    return x


class TestInstance:
    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            LcpInstance(np.eye(3), [1.0, 2.0])


class TestResidual:
    def test_zero_at_solution(self):
        inst = LcpInstance(np.eye(2), [1.0, 1.0])
        np.testing.assert_array_equal(residual(inst, [0.0, 0.0]), [0.0, 0.0])

    def test_negative_q(self):
        inst = LcpInstance(np.eye(2), [-1.0, -1.0])
        np.testing.assert_array_equal(residual(inst, [0.0, 0.0]), [-1.0, -1.0])

    def test_componentwise_minimum(self):
        inst = LcpInstance(np.array([[2.0, 0.0], [0.0, 2.0]]), [-1.0, 3.0])
        np.testing.assert_array_equal(residual(inst, [1.0, 1.0]), [1.0, 1.0])

    def test_dimension_check(self):
        inst = LcpInstance(np.eye(2), [1.0, 1.0])
        with pytest.raises(DimensionMismatch):
            residual(inst, [1.0, 2.0, 3.0])


class TestSolve:
    def test_identity_negative_q(self):
        sol = solve_lcp(LcpInstance(np.eye(3), [-1.0, -1.0, -1.0]))
        np.testing.assert_allclose(sol.x_star, np.ones(3))
        assert sol.basis == (0, 1, 2)

    def test_identity_positive_q(self):
        sol = solve_lcp(LcpInstance(np.eye(3), [1.0, 1.0, 1.0]))
        np.testing.assert_array_equal(sol.x_star, np.zeros(3))
        assert sol.basis == ()

    def test_example2_solution(self, ex2):
        inst = LcpInstance(ex2, [-1.0, -1.0, -1.0, -1.0])
        sol = solve_lcp(inst)
        assert sol.complementarity_gap <= 1e-9
        assert np.all(sol.x_star >= -1e-10)
        assert np.all(sol.w_star >= -1e-10)
        assert inf_norm(residual(inst, sol.x_star)) <= 1e-9 * (1 + inf_norm(inst.q))
        # refinement from x* must stay at x*
        refined = projected_gauss_seidel(inst.m, inst.q, sol.x_star)
        assert inf_norm(refined - sol.x_star) <= 1e-8

    def test_example2_error_bound_at_random_trials(self, ex2):
        inst = LcpInstance(ex2, [-1.0, -1.0, -1.0, -1.0])
        sol = solve_lcp(inst)
        for x in trial_points(sol.x_star, 100, seed=101):
            err = inf_norm(x - sol.x_star)
            assert err <= 15.0 * (1 + 1e-9) * inf_norm(residual(inst, x)) + 1e-9

    def test_unique_feasible_basis_for_p_matrices(self, ex1, ex2, ex3, ex4):
        rng = np.random.default_rng(71)
        for m in (ex1, ex2, ex3, ex4):
            for _ in range(5):
                inst = LcpInstance(m, rng.uniform(-2.0, 2.0, 4))
                assert len(feasible_bases(inst)) == 1

    def test_no_solution(self):
        with pytest.raises(NoSolution):
            solve_lcp(LcpInstance(-np.eye(2), [-1.0, -1.0]))

    def test_too_large(self):
        with pytest.raises(DimensionTooLarge):
            solve_lcp(LcpInstance(np.eye(16), np.ones(16)))


class TestIsPMatrix:
    def test_identity(self):
        assert is_p_matrix(np.eye(4))

    def test_zero_diagonal(self):
        assert not is_p_matrix([[0.0, 1.0], [1.0, 0.0]])

    def test_example3(self, ex3):
        assert is_p_matrix(ex3)

    def test_b_nekrasov_fixtures_are_p(self, ex1, ex2, ex4):
        for m in (ex1, ex2, ex4):
            assert is_p_matrix(m)

    def test_negative_minor(self):
        assert not is_p_matrix([[1.0, 2.0], [2.0, 1.0]])

    def test_too_large(self):
        with pytest.raises(DimensionTooLarge):
            is_p_matrix(np.eye(13))


class TestCertify:
    def test_solution_point_holds(self, ex1):
        inst = LcpInstance(ex1, [-1.0, -1.0, -1.0, -1.0])
        sol = solve_lcp(inst)
        cert = certify_error_bound(inst, sol.x_star, new_nekrasov_bound(ex1))
        assert cert.holds
        assert cert.residual_norm <= 1e-9
        assert cert.true_error == 0.0

    def test_example1_random_trials(self, ex1):
        inst = LcpInstance(ex1, [-1.0, -1.0, -1.0, -1.0])
        bound = new_nekrasov_bound(ex1)
        sol = solve_lcp(inst)
        for x in trial_points(sol.x_star, 100, seed=5):
            assert certify_error_bound(inst, x, bound).holds

    def test_example4_random_trials(self, ex4):
        inst = LcpInstance(ex4, [-1.0, -2.0, -1.0, -2.0])
        bound = new_bnekrasov_bound(ex4)
        assert bound.value == pytest.approx(25.2, rel=1e-9)
        sol = solve_lcp(inst)
        for x in trial_points(sol.x_star, 100, seed=6):
            assert certify_error_bound(inst, x, bound).holds

    def test_inapplicable_bound_rejected(self, ex3):
        inst = LcpInstance(ex3, [-1.0, -1.0, -1.0, -1.0])
        with pytest.raises(InapplicableBound):
            certify_error_bound(inst, np.zeros(4), new_nekrasov_bound(ex3))


class TestTrialPoints:
    def test_deterministic_and_in_range(self):
        x_star = np.array([1.0, 2.0])
        a = trial_points(x_star, 50, seed=9)
        b = trial_points(x_star, 50, seed=9)
        np.testing.assert_array_equal(a, b)
        assert a.shape == (50, 2)
        assert np.all(a >= 0.0) and np.all(a <= 3.0 * (1.0 + 2.0))
