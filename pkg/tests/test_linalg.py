import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcpbounds.errors import DomainError, SingularMatrix
from lcpbounds.linalg import (
    as_matrix,
    as_vector,
    comparison_matrix,
    inf_norm,
    inverse,
    lu_det,
    lu_factor,
    lu_solve,
)


class TestValidation:
    def test_rejects_rectangular(self):
        with pytest.raises(DomainError):
            as_matrix([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]])

    def test_rejects_nan(self):
        with pytest.raises(DomainError):
            as_matrix([[1.0, np.nan], [0.0, 1.0]])

    def test_rejects_empty(self):
        with pytest.raises(DomainError):
            as_matrix(np.zeros((0, 0)))

    def test_vector_rejects_matrix(self):
        with pytest.raises(DomainError):
            as_vector([[1.0, 2.0]])

    def test_vector_rejects_inf(self):
        with pytest.raises(DomainError):
            as_vector([1.0, np.inf])


class TestLuFactor:
    def test_identity(self):
        f = lu_factor(np.eye(3))
        assert not f.singular_flag
        np.testing.assert_array_equal(f.lower, np.eye(3))
        np.testing.assert_array_equal(f.upper, np.eye(3))
        np.testing.assert_array_equal(f.permutation, [0, 1, 2])

    def test_row_swap(self):
        f = lu_factor([[0.0, 1.0], [1.0, 0.0]])
        assert not f.singular_flag
        assert sorted(f.permutation) == [0, 1]
        assert list(f.permutation) == [1, 0]
        np.testing.assert_array_equal(np.diag(f.upper), [1.0, 1.0])

    def test_rank_one_is_singular(self):
        assert lu_factor([[1.0, 1.0], [1.0, 1.0]]).singular_flag

    def test_zero_matrix_is_singular(self):
        assert lu_factor(np.zeros((3, 3))).singular_flag

    @pytest.mark.parametrize("n", [2, 4, 7, 10])
    def test_reconstruction(self, n):
        rng = np.random.default_rng(100 + n)
        for _ in range(20):
            a = rng.uniform(-1.0, 1.0, (n, n)) + 2 * n * np.eye(n)
            f = lu_factor(a)
            assert not f.singular_flag
            assert sorted(f.permutation) == list(range(n))
            err = np.linalg.norm(a[f.permutation] - f.lower @ f.upper)
            assert err <= 1e-10 * np.linalg.norm(a)

    def test_solve_refuses_singular(self):
        f = lu_factor([[1.0, 1.0], [1.0, 1.0]])
        with pytest.raises(SingularMatrix):
            lu_solve(f, [1.0, 0.0])


class TestInverse:
    def test_identity(self):
        np.testing.assert_array_equal(inverse(np.eye(4)), np.eye(4))

    def test_diagonal(self):
        np.testing.assert_allclose(inverse([[2.0, 0.0], [0.0, 4.0]]),
                                   [[0.5, 0.0], [0.0, 0.25]])

    def test_unit_upper_triangular(self):
        np.testing.assert_allclose(inverse([[1.0, 1.0], [0.0, 1.0]]),
                                   [[1.0, -1.0], [0.0, 1.0]])

    def test_singular_raises(self):
        with pytest.raises(SingularMatrix):
            inverse([[1.0, 1.0], [1.0, 1.0]])

    def test_random_inverse_residual(self):
        rng = np.random.default_rng(7)
        for n in range(2, 11):
            for _ in range(10):
                a = rng.uniform(-1.0, 1.0, (n, n)) + 2 * n * np.eye(n)
                assert inf_norm(inverse(a) @ a - np.eye(n)) < 1e-8

    def test_matches_numpy(self):
        rng = np.random.default_rng(11)
        a = rng.uniform(-1.0, 1.0, (6, 6)) + 12 * np.eye(6)
        np.testing.assert_allclose(inverse(a), np.linalg.inv(a), rtol=1e-10, atol=1e-12)


class TestDeterminant:
    def test_matches_numpy(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            n = int(rng.integers(1, 7))
            a = rng.uniform(-2.0, 2.0, (n, n))
            assert lu_det(lu_factor(a)) == pytest.approx(np.linalg.det(a), rel=1e-9, abs=1e-12)


class TestInfNorm:
    def test_max_abs_row_sum(self):
        assert inf_norm([[1.0, -2.0], [3.0, 4.0]]) == 7.0

    def test_identity(self):
        assert inf_norm(np.eye(5)) == 1.0

    def test_zero(self):
        assert inf_norm(np.zeros((3, 3))) == 0.0

    def test_vector(self):
        assert inf_norm([1.0, -3.0, 2.0]) == 3.0

    @given(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False))
    @settings(max_examples=200)
    def test_absolutely_homogeneous(self, c):
        a = np.array([[1.0, -2.0, 0.5], [3.0, 4.0, -1.0], [0.0, 0.25, -2.5]])
        assert inf_norm(c * a) == pytest.approx(abs(c) * inf_norm(a), rel=1e-12, abs=1e-300)


class TestComparisonMatrix:
    def test_z_matrix_unchanged(self):
        a = np.array([[2.0, -1.0], [-1.0, 2.0]])
        np.testing.assert_array_equal(comparison_matrix(a), a)

    def test_absolute_values(self):
        np.testing.assert_array_equal(comparison_matrix([[-2.0, 1.0], [1.0, -2.0]]),
                                      [[2.0, -1.0], [-1.0, 2.0]])

    def test_identity(self):
        np.testing.assert_array_equal(comparison_matrix(np.eye(3)), np.eye(3))

    def test_idempotent_on_z_with_nonnegative_diagonal(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            n = int(rng.integers(2, 6))
            a = -rng.uniform(0.0, 1.0, (n, n))
            np.fill_diagonal(a, rng.uniform(0.0, 3.0, n))
            c = comparison_matrix(a)
            np.testing.assert_array_equal(c, a)
            np.testing.assert_array_equal(comparison_matrix(c), c)
